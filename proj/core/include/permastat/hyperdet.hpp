#pragma once

#include <vector>

#include "permastat/integrals.hpp"
#include "permastat/matrix.hpp"
#include "permastat/partition.hpp"
#include "permastat/rational.hpp"
#include "permastat/unit_scalar.hpp"

namespace permastat {

/// Dense cubic tensor of exact rationals, 0-based indices.
class Tensor3 {
public:
  explicit Tensor3(long n) : n_(n), data_(static_cast<size_t>(n * n * n)) {}
  long size() const { return n_; }
  ExactRational& at(long i, long j, long k) { return data_[idx(i, j, k)]; }
  const ExactRational& at(long i, long j, long k) const { return data_[idx(i, j, k)]; }

private:
  size_t idx(long i, long j, long k) const {
    return static_cast<size_t>((i * n_ + j) * n_ + k);
  }
  long n_;
  std::vector<ExactRational> data_;
};

/// Exact permanent: direct expansion for n <= 6, Ryser's inclusion-exclusion
/// beyond.  Throws NonSquareMatrix.
ExactRational permanent(const RatMatrix& m);

/// Brute-force Gegenbauer hyperdeterminant of a 3-index tensor:
///   Det_I M = (1/n!) sum over (s1,s2,s3) in S_n^3 of
///             eps(prod_{i in I} s_i) * prod_i M_{s1(i),s2(i),s3(i)},
/// `alternated` listing the alternated slots (subset of {1,2,3}).  The sum
/// has (n!)^3 terms, so n is capped at 5 (SizeTooLargeForBruteForce).
ExactRational hyperdet_brute(const Tensor3& t, const std::vector<int>& alternated);

/// Det_+ = Det_{{2,3}} through its expansion into n! conventional
/// determinants:  sum over s in S_n of det( M_{s(i),i,j} )_{i,j}.
ExactRational det_plus_expand(const Tensor3& t);

/// One-dimensional weight moments m(k) = integral of w(x) x^k over the
/// weight's support, delivered exactly.  Gaussian moments carry one power of
/// the symbolic unit u = sqrt(2 pi) each; the other families are plain
/// rationals.  Parameter windows are chosen so every moment is rational:
/// Jacobi needs integer gamma >= 1, Laguerre integer alpha >= 1.
class MomentProvider {
public:
  static MomentProvider jacobi(const ExactRational& alpha, long gamma);
  static MomentProvider laguerre(long alpha);
  static MomentProvider gaussian();

  /// k-th weight moment, k >= 0.
  UnitScalar moment(long k) const;
  /// Unit exponent shared by every nonzero moment of this weight.
  int unit_exponent() const { return family_ == Family::Gaussian ? 1 : 0; }
  /// The matching ensemble for normalization purposes.
  EnsembleSpec ensemble(int beta, long n) const;

private:
  MomentProvider(Family f, ExactRational alpha, long gamma)
      : family_(f), alpha_(std::move(alpha)), gamma_(gamma) {}
  Family family_;
  ExactRational alpha_;
  long gamma_;
};

/// <T_1^l1 ... T_N^lN> for beta = 2 and any weight, through the
/// hyperdeterminant master formula
///   <perm Psi>/N! = (1/Z) sum over s in S_N of
///                   det( m(lambda_{s(i)} + i + j - 2) )_{i,j}.
/// Identical summands for rearranged equal parts are collapsed: the sum runs
/// over distinct arrangements weighted by lambda_factorial_padded.  The
/// symbolic unit must cancel against z_norm exactly (UnitMismatch otherwise).
ExactRational perm_average_beta2(const MomentProvider& weight, const Partition& lambda, long n);

/// Same average for the Jacobi gamma = 1 weight after Cauchy's double
/// alternant collapses each determinant:
///   <T^lambda> = [prod_{i<j}(i-j) / Z] * sum over s in S_N of
///     prod_{i<j}(lambda_{s(i)}+i-lambda_{s(j)}-j)
///     / prod_{i,j}(lambda_{s(i)}+i+j+alpha-2).
ExactRational jacobi_moment_average_cauchy(const Partition& lambda, const ExactRational& alpha,
                                           long n);

} // namespace permastat
