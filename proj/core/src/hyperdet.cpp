#include "permastat/hyperdet.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "permastat/errors.hpp"
#include "permastat/gamma.hpp"

namespace permastat {

namespace {

struct SignedPerm {
  std::vector<long> p;
  int sign;
};

std::vector<SignedPerm> all_permutations(long n) {
  std::vector<long> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0L);
  std::vector<SignedPerm> out;
  do {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inv;
    out.push_back({p, (inv % 2 == 0) ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

} // namespace

ExactRational permanent(const RatMatrix& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n)
      throw NonSquareMatrix("permanent of a non-square matrix");
  if (n == 0) return 1;

  if (n <= 6) {
    std::vector<size_t> p(n);
    std::iota(p.begin(), p.end(), size_t{0});
    ExactRational sum = 0;
    do {
      ExactRational prod = 1;
      for (size_t i = 0; i < n; ++i) prod *= m[i][p[i]];
      sum += prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return sum;
  }

  // Ryser: perm(A) = (-1)^n sum_{S nonempty} (-1)^|S| prod_i sum_{j in S} a_ij
  ExactRational total = 0;
  const size_t full = size_t{1} << n;
  for (size_t mask = 1; mask < full; ++mask) {
    ExactRational prod = 1;
    for (size_t i = 0; i < n && !prod.is_zero(); ++i) {
      ExactRational rowsum = 0;
      for (size_t j = 0; j < n; ++j)
        if (mask & (size_t{1} << j)) rowsum += m[i][j];
      prod *= rowsum;
    }
    const int popcount = __builtin_popcountll(mask);
    if (popcount % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  if (n % 2 == 1) total = -total;
  return total;
}

ExactRational hyperdet_brute(const Tensor3& t, const std::vector<int>& alternated) {
  const long n = t.size();
  if (n > 5)
    throw SizeTooLargeForBruteForce("brute-force hyperdeterminant capped at n = 5, got n = " +
                                    std::to_string(n));
  for (int s : alternated)
    if (s < 1 || s > 3) throw std::invalid_argument("alternated slots must come from {1,2,3}");
  if (n == 0) return 1;

  const bool alt1 = std::find(alternated.begin(), alternated.end(), 1) != alternated.end();
  const bool alt2 = std::find(alternated.begin(), alternated.end(), 2) != alternated.end();
  const bool alt3 = std::find(alternated.begin(), alternated.end(), 3) != alternated.end();

  const std::vector<SignedPerm> perms = all_permutations(n);
  ExactRational sum = 0;
  for (const SignedPerm& s1 : perms) {
    for (const SignedPerm& s2 : perms) {
      for (const SignedPerm& s3 : perms) {
        int sign = 1;
        if (alt1) sign *= s1.sign;
        if (alt2) sign *= s2.sign;
        if (alt3) sign *= s3.sign;
        ExactRational prod = 1;
        for (long i = 0; i < n && !prod.is_zero(); ++i)
          prod *= t.at(s1.p[static_cast<size_t>(i)], s2.p[static_cast<size_t>(i)],
                       s3.p[static_cast<size_t>(i)]);
        if (sign > 0)
          sum += prod;
        else
          sum -= prod;
      }
    }
  }
  return sum / ExactRational(factorial(n));
}

ExactRational det_plus_expand(const Tensor3& t) {
  const long n = t.size();
  if (n == 0) return 1;
  std::vector<size_t> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), size_t{0});
  ExactRational sum = 0;
  do {
    RatMatrix a(static_cast<size_t>(n), std::vector<ExactRational>(static_cast<size_t>(n)));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            t.at(static_cast<long>(p[static_cast<size_t>(i)]), i, j);
    sum += det_exact(a);
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

MomentProvider MomentProvider::jacobi(const ExactRational& alpha, long gamma) {
  if (alpha.sign() <= 0) throw std::invalid_argument("Jacobi weight needs alpha > 0");
  if (gamma < 1) throw std::invalid_argument("Jacobi weight needs integer gamma >= 1");
  return MomentProvider(Family::Jacobi, alpha, gamma);
}

MomentProvider MomentProvider::laguerre(long alpha) {
  if (alpha < 1) throw std::invalid_argument("Laguerre weight needs integer alpha >= 1");
  return MomentProvider(Family::Laguerre, ExactRational(alpha), 1);
}

MomentProvider MomentProvider::gaussian() { return MomentProvider(Family::Gaussian, 1, 1); }

UnitScalar MomentProvider::moment(long k) const {
  if (k < 0) throw std::invalid_argument("weight moment of negative order");
  switch (family_) {
    case Family::Jacobi:
      // int_0^1 x^(k+alpha-1) (1-x)^(gamma-1) dx = (gamma-1)! / (alpha+k)_gamma
      return UnitScalar(ExactRational(factorial(gamma_ - 1)) /
                        pochhammer(alpha_ + ExactRational(k), gamma_));
    case Family::Laguerre:
      // int_0^inf x^(k+alpha-1) e^-x dx = (alpha+k-1)!
      return UnitScalar(ExactRational(factorial(alpha_.num().convert_to<long>() + k - 1)));
    case Family::Gaussian:
      // int_R x^k e^(-x^2/2) dx = (k-1)!! * sqrt(2 pi) for even k, else 0
      if (k % 2 == 1) return UnitScalar(0);
      return UnitScalar(ExactRational(double_factorial(k - 1)), 1);
  }
  throw std::logic_error("unreachable");
}

EnsembleSpec MomentProvider::ensemble(int beta, long n) const {
  EnsembleSpec spec;
  spec.family = family_;
  spec.beta = beta;
  spec.n = n;
  spec.alpha = alpha_;
  spec.gamma = ExactRational(gamma_);
  return spec;
}

ExactRational perm_average_beta2(const MomentProvider& weight, const Partition& lambda, long n) {
  if (lambda.length() > n)
    throw LengthExceedsAlphabet("partition length " + std::to_string(lambda.length()) +
                                " exceeds matrix size " + std::to_string(n));
  const int e = weight.unit_exponent();
  ExactRational dets = 0;
  for (const Composition& arr : distinct_permutations(lambda, n)) {
    RatMatrix g(static_cast<size_t>(n), std::vector<ExactRational>(static_cast<size_t>(n)));
    for (long i = 0; i < n; ++i) {
      for (long j = 0; j < n; ++j) {
        UnitScalar mom = weight.moment(arr[static_cast<size_t>(i)] + i + j);
        // every nonzero moment of one weight carries the same unit exponent,
        // so the determinant factors as u^(e n) * det(values)
        g[static_cast<size_t>(i)][static_cast<size_t>(j)] = mom.value();
      }
    }
    dets += det_exact(g);
  }
  const UnitScalar numerator(ExactRational(lambda_factorial_padded(lambda, n)) * dets,
                             e * static_cast<int>(n));
  return numerator.ratio_to(z_norm(weight.ensemble(2, n)));
}

ExactRational jacobi_moment_average_cauchy(const Partition& lambda, const ExactRational& alpha,
                                           long n) {
  if (alpha.sign() <= 0) throw std::invalid_argument("alpha must be positive");
  if (lambda.length() > n)
    throw LengthExceedsAlphabet("partition length " + std::to_string(lambda.length()) +
                                " exceeds matrix size " + std::to_string(n));
  ExactRational pref = 1;
  for (long i = 1; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j) pref *= ExactRational(Int(i - j));

  ExactRational sum = 0;
  for (const Composition& arr : distinct_permutations(lambda, n)) {
    ExactRational term = 1;
    for (long i = 1; i <= n; ++i) {
      const long xi = arr[static_cast<size_t>(i - 1)] + i;
      for (long j = i + 1; j <= n; ++j)
        term *= ExactRational(Int(xi - arr[static_cast<size_t>(j - 1)] - j));
    }
    for (long i = 1; i <= n; ++i) {
      const long xi = arr[static_cast<size_t>(i - 1)] + i;
      for (long j = 1; j <= n; ++j) term /= alpha + ExactRational(xi + j - 2);
    }
    sum += term;
  }
  sum *= ExactRational(lambda_factorial_padded(lambda, n));
  return pref * sum / selberg(n, alpha, 1, 1);
}

} // namespace permastat
