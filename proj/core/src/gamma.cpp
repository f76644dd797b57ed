#include "permastat/gamma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace permastat {

Int factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

Int double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double factorial of integer below -1");
  Int r = 1;
  for (long i = n; i >= 2; i -= 2) r *= i;
  return r;
}

ExactRational pochhammer(const ExactRational& x, long n) {
  if (n < 0) throw std::invalid_argument("pochhammer with negative length");
  ExactRational r = 1;
  ExactRational t = x;
  for (long i = 0; i < n; ++i) {
    r *= t;
    t += 1;
  }
  return r;
}

Int floor_int(const ExactRational& x) {
  Int q = x.num() / x.den();
  if (x.num() < 0 && x.num() % x.den() != 0) q -= 1;
  return q;
}

namespace {

// Gamma(hi) / Gamma(lo) where hi - lo is a non-negative integer: the product
// lo (lo+1) ... (hi-1).  For integer-class pairs a factor of zero means a
// pole was crossed.
ExactRational gamma_ratio_pair(const ExactRational& hi, const ExactRational& lo) {
  ExactRational diff = hi - lo;
  long m = diff.num().convert_to<long>();
  return pochhammer(lo, m);
}

} // namespace

ExactRational gamma_ratio(std::vector<ExactRational> num, std::vector<ExactRational> den) {
  // bucket by fractional part
  std::map<ExactRational, std::pair<std::vector<ExactRational>, std::vector<ExactRational>>> cls;
  for (auto& x : num) cls[x - ExactRational(floor_int(x))].first.push_back(x);
  for (auto& x : den) cls[x - ExactRational(floor_int(x))].second.push_back(x);

  ExactRational result = 1;
  for (auto& [frac, lists] : cls) {
    auto& up = lists.first;
    auto& down = lists.second;
    std::sort(up.begin(), up.end());
    std::sort(down.begin(), down.end());
    const bool integer_class = frac.is_zero();
    if (integer_class) {
      for (const auto& x : up)
        if (x.sign() <= 0) throw NonpositiveGammaArgument("Gamma pole at " + x.str());
      for (const auto& x : down)
        if (x.sign() <= 0) throw NonpositiveGammaArgument("Gamma pole at " + x.str());
      // collapse matched pairs, largest first, so balanced ratios of big
      // arguments stay cheap; leftovers become plain factorials
      while (!up.empty() && !down.empty()) {
        ExactRational a = up.back(), b = down.back();
        up.pop_back();
        down.pop_back();
        if (a >= b)
          result *= gamma_ratio_pair(a, b);
        else
          result /= gamma_ratio_pair(b, a);
      }
      for (const auto& x : up) result *= ExactRational(factorial((x - 1).num().convert_to<long>()));
      for (const auto& x : down) result /= ExactRational(factorial((x - 1).num().convert_to<long>()));
    } else {
      if (up.size() != down.size())
        throw UnpairableGammaArguments("fractional class " + frac.str() + " has " +
                                       std::to_string(up.size()) + " numerator vs " +
                                       std::to_string(down.size()) + " denominator arguments");
      for (size_t i = 0; i < up.size(); ++i) {
        const ExactRational& a = up[i];
        const ExactRational& b = down[i];
        if (a >= b)
          result *= gamma_ratio_pair(a, b);
        else
          result /= gamma_ratio_pair(b, a);
      }
    }
  }
  return result;
}

} // namespace permastat
