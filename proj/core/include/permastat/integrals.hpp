#pragma once

#include <vector>

#include "permastat/partition.hpp"
#include "permastat/rational.hpp"
#include "permastat/unit_scalar.hpp"

namespace permastat {

enum class Family { Gaussian, Laguerre, Jacobi };

/// A classical invariant ensemble: eigenvalue density
/// (1/Z) prod_{j<k} |T_j - T_k|^beta prod_i w(T_i) with
///   Gaussian  w(x) = exp(-x^2/2)            on R,
///   Laguerre  w(x) = x^(alpha-1) exp(-x)    on (0, inf),
///   Jacobi    w(x) = x^(alpha-1)(1-x)^(gamma-1) on (0, 1).
struct EnsembleSpec {
  Family family = Family::Jacobi;
  int beta = 2;
  long n = 1;
  ExactRational alpha = 1; // Laguerre/Jacobi only
  ExactRational gamma = 1; // Jacobi only

  /// Throws std::invalid_argument on unsupported beta / non-positive
  /// parameters.
  void validate() const;
};

/// The Selberg integral
///   S_n(a,b,c) = prod_{j=0}^{n-1} G(a+jc) G(b+jc) G(1+(j+1)c)
///                                 / [ G(a+b+(n+j-1)c) G(1+c) ]
/// evaluated exactly through one fused gamma-ratio call; raises
/// UnpairableGammaArguments if the value is irrational for the given
/// rational parameters.
ExactRational selberg(long n, const ExactRational& a, const ExactRational& b,
                      const ExactRational& c);

/// Normalization constant of the ensemble.  The Gaussian constant carries
/// (2 pi)^(N/2), tracked as unit exponent N with unit u = sqrt(2 pi); the
/// others are plain rationals.  For beta = 1 Gaussian with N >= 2 the
/// rational part itself is irrational and UnpairableGammaArguments
/// propagates.
UnitScalar z_norm(const EnsembleSpec& spec);

/// Average of the integral-form Jack polynomial J_mu^(2/beta) under the
/// Jacobi (gamma = 1) eigenvalue density:
///
///   <J_mu> = J_mu^(xi)(1^N) * prod_{i=1}^{l(mu)}
///            (alpha + c(N-i))_{mu_i} / (alpha + 1 + c(2N-i-1))_{mu_i}
///
/// with c = beta/2, xi = 1/c.  The Pochhammer ratio is assembled as a single
/// fused gamma-ratio call (the two halves of the ratio are never evaluated
/// separately, so no irrational intermediate ever appears); the principal
/// specialization J_mu(1^N) goes through the monomial expansion and
/// evaluate_at_ones.  Throws LengthExceedsAlphabet when l(mu) > N.
ExactRational kadell_moment_ratio(const Partition& mu, const ExactRational& alpha, int beta,
                                  long n);

/// Specialization of the same average to beta = 2, where J reduces to the
/// Schur function: <s_mu> = s_mu(1^N) * prod_i (alpha+N-i)_{mu_i} /
/// (alpha+2N-i)_{mu_i}.  Costs O(|mu|) per call independent of N, which is
/// what makes large-N sweeps cheap.
ExactRational schur_average(const Partition& mu, const ExactRational& alpha, long n);

/// Cauchy's double alternant:
///   det(1/(X_i+Y_j)) = prod_{i<j}(X_i-X_j)(Y_i-Y_j) / prod_{i,j}(X_i+Y_j).
/// Throws SingularDenominator when some X_i + Y_j = 0.
ExactRational cauchy_double_alternant(const std::vector<ExactRational>& xs,
                                      const std::vector<ExactRational>& ys);

/// Exact check of the closed-form identity
///   n! prod_{i<j}(i-j)^2 / prod_{i,j=1}^n (i+j+alpha-1) = S_n(alpha+1,1,1)
/// used to anchor the double-alternant route against the Selberg form.
bool selberg_identity_check(long n, const ExactRational& alpha);

} // namespace permastat
