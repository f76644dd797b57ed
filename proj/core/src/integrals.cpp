#include "permastat/integrals.hpp"

#include <stdexcept>

#include "permastat/errors.hpp"
#include "permastat/gamma.hpp"
#include "permastat/symfunc.hpp"

namespace permastat {

void EnsembleSpec::validate() const {
  if (beta != 1 && beta != 2 && beta != 4)
    throw std::invalid_argument("beta must be 1, 2 or 4");
  if (n < 1) throw std::invalid_argument("ensemble size must be positive");
  if (family != Family::Gaussian && alpha.sign() <= 0)
    throw std::invalid_argument("weight exponent alpha must be positive");
  if (family == Family::Jacobi && gamma.sign() <= 0)
    throw std::invalid_argument("weight exponent gamma must be positive");
}

ExactRational selberg(long n, const ExactRational& a, const ExactRational& b,
                      const ExactRational& c) {
  if (n < 0) throw std::invalid_argument("Selberg integral needs n >= 0");
  std::vector<ExactRational> num, den;
  for (long j = 0; j < n; ++j) {
    const ExactRational jc = c * ExactRational(j);
    num.push_back(a + jc);
    num.push_back(b + jc);
    num.push_back(ExactRational(1) + c * ExactRational(j + 1));
    den.push_back(a + b + c * ExactRational(n + j - 1));
    den.push_back(ExactRational(1) + c);
  }
  return gamma_ratio(std::move(num), std::move(den));
}

UnitScalar z_norm(const EnsembleSpec& spec) {
  spec.validate();
  const ExactRational half_beta(Int(spec.beta), Int(2));
  switch (spec.family) {
    case Family::Jacobi:
      return UnitScalar(selberg(spec.n, spec.alpha, spec.gamma, half_beta));
    case Family::Laguerre: {
      std::vector<ExactRational> num, den;
      for (long j = 0; j < spec.n; ++j) {
        num.push_back(spec.alpha + half_beta * ExactRational(j));
        num.push_back(ExactRational(1) + half_beta * ExactRational(j + 1));
        den.push_back(ExactRational(1) + half_beta);
      }
      return UnitScalar(gamma_ratio(std::move(num), std::move(den)));
    }
    case Family::Gaussian: {
      std::vector<ExactRational> num, den;
      for (long j = 1; j <= spec.n; ++j) {
        num.push_back(ExactRational(1) + half_beta * ExactRational(j));
        den.push_back(ExactRational(1) + half_beta);
      }
      // (2 pi)^(N/2) = u^N with u = sqrt(2 pi)
      return UnitScalar(gamma_ratio(std::move(num), std::move(den)),
                        static_cast<int>(spec.n));
    }
  }
  throw std::logic_error("unreachable");
}

ExactRational kadell_moment_ratio(const Partition& mu, const ExactRational& alpha, int beta,
                                  long n) {
  if (beta != 1 && beta != 2 && beta != 4)
    throw std::invalid_argument("beta must be 1, 2 or 4");
  if (alpha.sign() <= 0) throw std::invalid_argument("alpha must be positive");
  if (n < 1) throw std::invalid_argument("alphabet size must be positive");
  if (mu.length() > n)
    throw LengthExceedsAlphabet("partition length " + std::to_string(mu.length()) +
                                " exceeds alphabet size " + std::to_string(n));
  const ExactRational c(Int(beta), Int(2));
  const ExactRational xi = ExactRational(1) / c;

  SymExpansion j_mu;
  j_mu.basis = Basis::JackJ;
  j_mu.xi = xi;
  j_mu.add(mu, 1);
  const ExactRational at_ones = evaluate_at_ones(j_mu, n);

  std::vector<ExactRational> num, den;
  for (int i = 1; i <= mu.length(); ++i) {
    const ExactRational lo = alpha + c * ExactRational(n - i);
    const ExactRational hi = alpha + ExactRational(1) + c * ExactRational(2 * n - i - 1);
    const ExactRational mi(mu.part(i - 1));
    num.push_back(lo + mi);
    num.push_back(hi);
    den.push_back(lo);
    den.push_back(hi + mi);
  }
  return at_ones * gamma_ratio(std::move(num), std::move(den));
}

ExactRational schur_average(const Partition& mu, const ExactRational& alpha, long n) {
  if (alpha.sign() <= 0) throw std::invalid_argument("alpha must be positive");
  if (n < 1) throw std::invalid_argument("alphabet size must be positive");
  if (mu.length() > n)
    throw LengthExceedsAlphabet("partition length " + std::to_string(mu.length()) +
                                " exceeds alphabet size " + std::to_string(n));
  ExactRational r = schur_at_ones(mu, n);
  for (int i = 1; i <= mu.length(); ++i) {
    const long k = mu.part(i - 1);
    r *= pochhammer(alpha + ExactRational(n - i), k);
    r /= pochhammer(alpha + ExactRational(2 * n - i), k);
  }
  return r;
}

ExactRational cauchy_double_alternant(const std::vector<ExactRational>& xs,
                                      const std::vector<ExactRational>& ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("double alternant needs equally long vectors");
  const size_t n = xs.size();
  ExactRational num = 1, den = 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) num *= (xs[i] - xs[j]) * (ys[i] - ys[j]);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      ExactRational s = xs[i] + ys[j];
      if (s.is_zero())
        throw SingularDenominator("X_" + std::to_string(i + 1) + " + Y_" + std::to_string(j + 1) +
                                  " vanishes");
      den *= s;
    }
  }
  return num / den;
}

bool selberg_identity_check(long n, const ExactRational& alpha) {
  if (n < 1) throw std::invalid_argument("identity check needs n >= 1");
  ExactRational lhs(factorial(n));
  for (long i = 1; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j) lhs *= ExactRational(Int((i - j) * (i - j)));
  for (long i = 1; i <= n; ++i)
    for (long j = 1; j <= n; ++j) lhs /= alpha + ExactRational(i + j - 1);
  const ExactRational rhs = selberg(n, alpha + 1, 1, 1);
  return lhs == rhs;
}

} // namespace permastat
