#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "permastat/errors.hpp"

namespace permastat {

/// Arbitrary-precision integer used throughout the library.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive denominator.
/// Every computation in the library that promises exactness flows through
/// this type; doubles only appear at the display boundary.
class ExactRational {
public:
  ExactRational() : num_(0), den_(1) {}
  ExactRational(int v) : num_(v), den_(1) {}                 // NOLINT(google-explicit-constructor)
  ExactRational(long v) : num_(v), den_(1) {}                // NOLINT(google-explicit-constructor)
  ExactRational(long long v) : num_(v), den_(1) {}           // NOLINT(google-explicit-constructor)
  ExactRational(Int v) : num_(std::move(v)), den_(1) {}      // NOLINT(google-explicit-constructor)
  ExactRational(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  ExactRational& operator+=(const ExactRational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
  }
  ExactRational& operator-=(const ExactRational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
  }
  ExactRational& operator*=(const ExactRational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
  }
  ExactRational& operator/=(const ExactRational& o) {
    if (o.num_ == 0) throw SingularDenominator("division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
  }

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  ExactRational operator-() const {
    ExactRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ExactRational& a, const ExactRational& b) { return !(a == b); }
  friend bool operator<(const ExactRational& a, const ExactRational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const ExactRational& a, const ExactRational& b) { return b < a; }
  friend bool operator<=(const ExactRational& a, const ExactRational& b) { return !(b < a); }
  friend bool operator>=(const ExactRational& a, const ExactRational& b) { return !(a < b); }

  /// "num/den", or just "num" for integers.
  std::string str() const;

  /// Nearest double (round via a 63-bit scaled quotient; accurate to an ulp
  /// or so, which is plenty for display purposes).
  double to_double() const;

private:
  void reduce() {
    if (den_ == 0) throw SingularDenominator("rational with zero denominator");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

inline ExactRational abs(const ExactRational& r) { return r.sign() < 0 ? -r : r; }

/// r^e for integer e (negative exponents invert; 0^0 == 1; 0^negative throws).
ExactRational pow(const ExactRational& r, long e);

/// Shortest-round-trip style decimal rendering of an exact rational with
/// `significant` significant digits, computed purely in integer arithmetic
/// (no float round-trip).  Format mirrors printf %g: fixed point when the
/// decimal exponent is in [-4, significant), scientific otherwise; trailing
/// zeros stripped.
std::string decimal_string(const ExactRational& r, int significant = 12);

} // namespace permastat
