#include "permastat/asymptotics.hpp"

#include <stdexcept>

#include "permastat/errors.hpp"
#include "permastat/gamma.hpp"
#include "permastat/moments.hpp"

namespace permastat {

ExactRational limit_single(int k, const Regime& r) {
  if (k < 1) throw std::invalid_argument("limit needs a part k >= 1");
  switch (r.cls) {
    case RegimeClass::SubLinear:
      return ExactRational(binomial(2 * k - 1, k - 1)) / pow(ExactRational(2), 2 * k - 1);
    case RegimeClass::SuperLinear:
      return 1;
    case RegimeClass::Linear: {
      if (r.ell.sign() <= 0) throw std::invalid_argument("channel ratio ell must be positive");
      ExactRational sum = 0;
      for (int i = 0; i <= 2 * (k - 1); ++i)
        sum += ExactRational(binomial(k - 1, i / 2) * binomial(k - 1, (i + 1) / 2)) *
               pow(r.ell, i);
      return r.ell / pow(r.ell + ExactRational(1), 2 * k - 1) * sum;
    }
  }
  throw std::logic_error("unreachable");
}

ExactRational limit_novaes(int k, const ExactRational& ell) {
  if (k < 1) throw std::invalid_argument("limit needs a part k >= 1");
  if (ell.sign() <= 0) throw std::invalid_argument("channel ratio ell must be positive");
  const ExactRational x = ell / pow(ell + ExactRational(1), 2);
  ExactRational sum = 0;
  for (int p = 1; p <= k; ++p) {
    ExactRational term = ExactRational(binomial(k - 1, p - 1) * binomial(2 * (p - 1), p - 1)) /
                         ExactRational(p) * pow(x, p);
    if (p % 2 == 0) term = -term;
    sum += term;
  }
  return (ell + ExactRational(1)) * sum;
}

PartitionLimit limit_partition(const Partition& lambda, const Regime& r) {
  PartitionLimit out;
  out.value = 1;
  out.conjectural = lambda.length() > 1;
  for (int part : lambda.parts()) out.value *= limit_single(part, r);
  return out;
}

ExactRational finite_n_single(int k, const ExactRational& alpha, long n) {
  if (k < 1) throw std::invalid_argument("moment order k must be >= 1");
  if (alpha.sign() <= 0) throw std::invalid_argument("alpha must be positive");
  if (n < 1) throw std::invalid_argument("N must be positive");

  const ExactRational en{Int(n)};
  ExactRational pref = pochhammer(alpha + en - ExactRational(1), k) /
                       pochhammer(alpha + ExactRational(2) * en - ExactRational(1), k) *
                       pochhammer(en + ExactRational(1), k - 1) / ExactRational(factorial(k));

  const ExactRational a[4] = {ExactRational(2) - en - alpha,
                              ExactRational(2) - ExactRational(2) * en - alpha - ExactRational(k),
                              ExactRational(1 - k), ExactRational(1) - en};
  const ExactRational b[3] = {ExactRational(1 - k) - en,
                              ExactRational(2) - ExactRational(2) * en - alpha,
                              ExactRational(2) - en - alpha - ExactRational(k)};

  ExactRational series = 0;
  ExactRational term = 1;
  for (long i = 0;; ++i) {
    series += term;
    ExactRational num = 1;
    for (const auto& aj : a) num *= aj + ExactRational(i);
    if (num.is_zero()) break; // an upper parameter terminated the series
    ExactRational den = 1;
    for (const auto& bj : b) den *= bj + ExactRational(i);
    if (den.is_zero())
      throw ZeroDenominatorParameter("lower parameter of the 4F3 vanished at term " +
                                     std::to_string(i + 1) + " before termination");
    term *= num / (den * ExactRational(i + 1));
  }
  return pref * series;
}

std::vector<ProbeRow> convergence_probe(const Partition& lambda, int beta, const Regime& r,
                                        const std::vector<long>& ns) {
  const PartitionLimit lim = limit_partition(lambda, r);
  std::vector<ProbeRow> rows;
  rows.reserve(ns.size());
  for (long n : ns) {
    ExactRational alpha;
    switch (r.cls) {
      case RegimeClass::Linear:
        alpha = ExactRational(Int(beta), Int(2)) * (r.ell - ExactRational(1)) * ExactRational(Int(n)) +
                ExactRational(1);
        break;
      case RegimeClass::SubLinear:
        alpha = 1;
        break;
      case RegimeClass::SuperLinear:
        alpha = ExactRational(Int(n) * Int(n)) + ExactRational(1);
        break;
    }
    if (alpha.sign() <= 0)
      throw std::invalid_argument("alpha(N) schedule is non-positive at N = " + std::to_string(n));
    MomentQuery q{lambda, alpha, beta, n, Route::Auto};
    ProbeRow row;
    row.n = n;
    row.value = moment(q);
    row.limit = lim.value;
    row.abs_dev = abs(row.value - lim.value);
    row.rel_dev = lim.value.is_zero() ? row.abs_dev : row.abs_dev / abs(lim.value);
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace permastat
