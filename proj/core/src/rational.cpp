#include "permastat/rational.hpp"

#include <cmath>

namespace permastat {

std::string ExactRational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += "/";
    s += den_.str();
  }
  return s;
}

double ExactRational::to_double() const {
  if (num_ == 0) return 0.0;
  Int a = num_ < 0 ? Int(-num_) : num_;
  const long ea = static_cast<long>(boost::multiprecision::msb(a));
  const long eb = static_cast<long>(boost::multiprecision::msb(den_));
  // Scale so the integer quotient carries ~63 significant bits, then let
  // ldexp place the binary point.
  const long shift = 62 - (ea - eb);
  Int q = shift >= 0 ? Int((a << shift) / den_) : Int(a / (den_ << -shift));
  double d = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
  return num_ < 0 ? -d : d;
}

ExactRational pow(const ExactRational& r, long e) {
  if (e == 0) return 1;
  if (e < 0) return ExactRational(1) / pow(r, -e);
  ExactRational base = r;
  ExactRational acc = 1;
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1UL) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

namespace {

Int pow10(long k) {
  Int t = 1;
  for (long i = 0; i < k; ++i) t *= 10;
  return t;
}

} // namespace

std::string decimal_string(const ExactRational& r, int significant) {
  if (significant < 1) significant = 1;
  if (r.is_zero()) return "0";

  const bool negative = r.sign() < 0;
  Int a = negative ? Int(-r.num()) : r.num();
  const Int& b = r.den();

  const long da = static_cast<long>(a.str().size());
  const long db = static_cast<long>(b.str().size());

  // a/b lies in [10^(da-db-1), 10^(da-db+1)), so this shift yields a quotient
  // with `significant` or `significant`+1 digits.
  const long shift = significant - (da - db);
  Int t = a, u = b;
  if (shift >= 0) {
    t *= pow10(shift);
  } else {
    u *= pow10(-shift);
  }
  Int q = t / u;
  Int rem = t % u;

  std::string qs = q.str();
  long extra = static_cast<long>(qs.size()) - significant;
  Int keep = q;
  Int frac_num, frac_den;
  if (extra == 1) {
    Int drop = q % 10;
    keep = q / 10;
    frac_num = drop * u + rem;
    frac_den = 10 * u;
  } else {
    frac_num = rem;
    frac_den = u;
  }
  // round half to even
  Int twice = 2 * frac_num;
  if (twice > frac_den || (twice == frac_den && keep % 2 != 0)) keep += 1;

  long x = -shift + extra;
  std::string m = keep.str();
  if (static_cast<long>(m.size()) > significant) {
    // rounding carried into a new digit (all nines); the dropped digit is 0
    keep /= 10;
    m = keep.str();
    x += 1;
  }
  // pad in case rounding collapsed digits (cannot happen, but be safe)
  while (static_cast<long>(m.size()) < significant) {
    m += '0';
  }

  const long e10 = significant - 1 + x;

  auto strip_trailing_zeros = [](std::string s) {
    while (!s.empty() && s.back() == '0') s.pop_back();
    return s;
  };

  std::string out;
  if (e10 < -4 || e10 >= significant) {
    // scientific: d.ddd e +/- dd
    std::string frac = strip_trailing_zeros(m.substr(1));
    out = m.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    out += "e";
    long ae = e10 < 0 ? -e10 : e10;
    out += (e10 < 0 ? "-" : "+");
    std::string es = std::to_string(ae);
    if (es.size() < 2) es.insert(es.begin(), '0');
    out += es;
  } else if (e10 >= 0) {
    std::string ip = m.substr(0, static_cast<size_t>(e10 + 1));
    std::string fp = strip_trailing_zeros(m.substr(static_cast<size_t>(e10 + 1)));
    out = ip;
    if (!fp.empty()) out += "." + fp;
  } else {
    std::string fp = strip_trailing_zeros(m);
    out = "0.";
    out.append(static_cast<size_t>(-e10 - 1), '0');
    out += fp;
    if (fp.empty()) out = "0";
  }
  return negative ? "-" + out : out;
}

} // namespace permastat
