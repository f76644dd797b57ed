#include "permastat/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "permastat/errors.hpp"
#include "permastat/gamma.hpp"

namespace permastat {

void Polynomial::add_term(const std::vector<int>& exps, const ExactRational& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  Polynomial out(nvars_);
  std::vector<int> e(static_cast<size_t>(nvars_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("variable count mismatch");
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::constant(int nvars, const ExactRational& c) {
  Polynomial p(nvars);
  p.add_term(std::vector<int>(static_cast<size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::monomial(const std::vector<int>& exps) {
  Polynomial p(static_cast<int>(exps.size()));
  p.add_term(exps, 1);
  return p;
}

ExactRational integrate_ordered_cell(const Polynomial& p) {
  // integrate the last variable over [0, previous variable] repeatedly,
  // then the first over [0, 1]
  Polynomial cur = p;
  for (int v = p.nvars() - 1; v >= 1; --v) {
    Polynomial next(v);
    std::vector<int> e(static_cast<size_t>(v));
    for (const auto& [exps, c] : cur.terms()) {
      const int k = exps[static_cast<size_t>(v)];
      for (int t = 0; t < v; ++t) e[static_cast<size_t>(t)] = exps[static_cast<size_t>(t)];
      e[static_cast<size_t>(v - 1)] += k + 1; // x_{v-1}^(k+1) from the upper limit
      next.add_term(e, c / ExactRational(k + 1));
    }
    cur = next;
  }
  ExactRational total = 0;
  for (const auto& [exps, c] : cur.terms())
    total += c / ExactRational(exps.empty() ? 1 : exps[0] + 1);
  return total;
}

namespace {

Polynomial vandermonde_power(int n, int beta) {
  Polynomial prod = Polynomial::constant(n, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Polynomial diff(n);
      std::vector<int> e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(i)] = 1;
      diff.add_term(e, 1);
      e[static_cast<size_t>(i)] = 0;
      e[static_cast<size_t>(j)] = 1;
      diff.add_term(e, -1);
      prod = prod * diff;
    }
  }
  // on the ordered cell x_i >= x_j for i < j, so the product is nonnegative
  // and |V|^beta is the plain power
  Polynomial out = Polynomial::constant(n, 1);
  Polynomial base = prod;
  int b = beta;
  while (b > 0) {
    if (b & 1) out = out * base;
    base = base * base;
    b >>= 1;
  }
  return out;
}

Polynomial monomial_symmetric(const Partition& lambda, int n) {
  Polynomial out(n);
  for (const Composition& arr : distinct_permutations(lambda, n)) out.add_term(arr, 1);
  return out;
}

Polynomial weight_power(int n, long a) {
  // prod_i x_i^(alpha-1)
  std::vector<int> e(static_cast<size_t>(n), static_cast<int>(a - 1));
  return Polynomial::monomial(e);
}

} // namespace

ExactRational integrate_simplex_exact(const Partition& lambda, const ExactRational& alpha,
                                      int beta, long n) {
  if (beta != 1 && beta != 2 && beta != 4)
    throw std::invalid_argument("beta must be 1, 2 or 4");
  if (n < 1 || n > 4)
    throw UnsupportedSize("exact simplex oracle supports 1 <= N <= 4, got N = " +
                          std::to_string(n));
  if (!alpha.is_integer() || alpha.sign() <= 0)
    throw NonIntegerAlpha("exact simplex oracle needs integer alpha >= 1, got " + alpha.str());
  if (lambda.length() > n)
    throw LengthExceedsAlphabet("partition length " + std::to_string(lambda.length()) +
                                " exceeds N = " + std::to_string(n));
  const long a = alpha.num().convert_to<long>();
  const int nn = static_cast<int>(n);

  const Polynomial base = vandermonde_power(nn, beta) * weight_power(nn, a);
  const Polynomial numerator = monomial_symmetric(lambda, nn) * base;
  const ExactRational denom = integrate_ordered_cell(base);
  const ExactRational numer = integrate_ordered_cell(numerator);
  // <T^lambda> = (lambda!_padded / N!) <m_lambda>; the ordering N! cancels
  // between numerator and denominator
  return ExactRational(lambda_factorial_padded(lambda, n)) /
         ExactRational(factorial(n)) * numer / denom;
}

McEstimate mc_estimate(const Partition& lambda, const ExactRational& alpha, int beta, long n,
                       long samples, std::uint64_t seed) {
  if (beta != 1 && beta != 2 && beta != 4)
    throw std::invalid_argument("beta must be 1, 2 or 4");
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (lambda.length() > n)
    throw LengthExceedsAlphabet("partition length " + std::to_string(lambda.length()) +
                                " exceeds N = " + std::to_string(n));
  if (samples < 10000)
    throw std::invalid_argument("need at least 10^4 samples for a stable error estimate");

  const double a = alpha.to_double();
  SplitMix64 rng(seed);
  std::vector<double> t(static_cast<size_t>(n));

  // running sums for h = T^lambda * w and w, plus second moments for the
  // delta-method error of the ratio
  double sum_h = 0, sum_w = 0, sum_hh = 0, sum_ww = 0, sum_hw = 0;
  for (long s = 0; s < samples; ++s) {
    for (auto& x : t) x = rng.next_double();
    double w = 1.0;
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j)
        w *= std::pow(std::fabs(t[static_cast<size_t>(i)] - t[static_cast<size_t>(j)]),
                      static_cast<double>(beta));
    for (long i = 0; i < n; ++i) w *= std::pow(t[static_cast<size_t>(i)], a - 1.0);
    double h = w;
    for (int i = 0; i < lambda.length(); ++i)
      h *= std::pow(t[static_cast<size_t>(i)], static_cast<double>(lambda.part(i)));
    sum_h += h;
    sum_w += w;
    sum_hh += h * h;
    sum_ww += w * w;
    sum_hw += h * w;
  }
  const double ns = static_cast<double>(samples);
  const double mh = sum_h / ns;
  const double mw = sum_w / ns;
  const double r = mh / mw;
  const double var_h = sum_hh / ns - mh * mh;
  const double var_w = sum_ww / ns - mw * mw;
  const double cov = sum_hw / ns - mh * mw;
  const double var_r = (var_h - 2.0 * r * cov + r * r * var_w) / (mw * mw * ns);
  McEstimate est;
  est.mean = r;
  est.std_error = var_r > 0 ? std::sqrt(var_r) : 0.0;
  est.samples = samples;
  return est;
}

} // namespace permastat
