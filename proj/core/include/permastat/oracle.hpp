#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "permastat/partition.hpp"
#include "permastat/rational.hpp"

namespace permastat {

/// Sparse multivariate polynomial with exact rational coefficients, used
/// only by the brute-force integration oracle.  Exponent vectors all share
/// one fixed variable count.
class Polynomial {
public:
  explicit Polynomial(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, ExactRational>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exps, const ExactRational& c);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator+(const Polynomial& o) const;

  static Polynomial constant(int nvars, const ExactRational& c);
  /// The single monomial prod_v x_v^exps[v].
  static Polynomial monomial(const std::vector<int>& exps);

private:
  int nvars_;
  std::map<std::vector<int>, ExactRational> terms_;
};

/// Exact integral of p over the ordered cell 1 >= x_0 >= x_1 >= ... >= 0 by
/// iterated one-variable monomial integration.
ExactRational integrate_ordered_cell(const Polynomial& p);

/// Reference value of <T_1^l1 ... T_N^lN> for the Jacobi gamma = 1 density,
/// computed by exact polynomial integration over the ordered cell (where the
/// |Vandermonde|^beta loses its absolute value).  Small sizes only:
/// 1 <= N <= 4 (UnsupportedSize) and integer alpha >= 1 (NonIntegerAlpha
/// otherwise) keep every integrand polynomial.
ExactRational integrate_simplex_exact(const Partition& lambda, const ExactRational& alpha,
                                      int beta, long n);

/// Deterministic counter-based RNG (SplitMix64); the documented constants
/// make the stream reproducible across platforms.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform double in [0,1) from the top 53 bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long samples = 0;
};

/// Plain Monte Carlo ratio estimator of the same moment: draw T uniformly on
/// [0,1]^N, average h = T^lambda * w and w separately, report mean(h)/mean(w)
/// with a delta-method standard error.  Bit-for-bit deterministic for a given
/// seed.  Requires samples >= 10^4 so the error estimate is meaningful.
McEstimate mc_estimate(const Partition& lambda, const ExactRational& alpha, int beta, long n,
                       long samples, std::uint64_t seed);

} // namespace permastat
