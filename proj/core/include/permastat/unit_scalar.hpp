#pragma once

#include "permastat/rational.hpp"

namespace permastat {

/// A rational multiple of u^k, where u is one fixed (possibly irrational)
/// symbolic unit -- in this library u = sqrt(2*pi), which enters Gaussian
/// normalization constants.  Carrying the exponent symbolically lets exact
/// rational code handle those constants and lets downstream ratios verify
/// that the unit cancels.
///
/// Zero is exponent-agnostic: a zero value always reports unit_exponent 0 and
/// may be added to anything.
class UnitScalar {
public:
  UnitScalar() : value_(0), exponent_(0) {}
  UnitScalar(ExactRational v, int unit_exponent = 0) // NOLINT(google-explicit-constructor)
      : value_(std::move(v)), exponent_(value_.is_zero() ? 0 : unit_exponent) {}

  const ExactRational& value() const { return value_; }
  int unit_exponent() const { return exponent_; }
  bool is_zero() const { return value_.is_zero(); }

  UnitScalar& operator*=(const UnitScalar& o) {
    value_ *= o.value_;
    exponent_ = value_.is_zero() ? 0 : exponent_ + o.exponent_;
    return *this;
  }
  UnitScalar& operator/=(const UnitScalar& o) {
    value_ /= o.value_;
    exponent_ = value_.is_zero() ? 0 : exponent_ - o.exponent_;
    return *this;
  }
  UnitScalar& operator+=(const UnitScalar& o) {
    if (!is_zero() && !o.is_zero() && exponent_ != o.exponent_)
      throw UnitMismatch("adding unit exponents " + std::to_string(exponent_) + " and " +
                         std::to_string(o.exponent_));
    if (is_zero()) exponent_ = o.exponent_;
    value_ += o.value_;
    if (value_.is_zero()) exponent_ = 0;
    return *this;
  }
  UnitScalar& operator-=(const UnitScalar& o) { return *this += UnitScalar(-o.value_, o.exponent_); }

  friend UnitScalar operator*(UnitScalar a, const UnitScalar& b) { return a *= b; }
  friend UnitScalar operator/(UnitScalar a, const UnitScalar& b) { return a /= b; }
  friend UnitScalar operator+(UnitScalar a, const UnitScalar& b) { return a += b; }
  friend UnitScalar operator-(UnitScalar a, const UnitScalar& b) { return a -= b; }

  friend bool operator==(const UnitScalar& a, const UnitScalar& b) {
    return a.value_ == b.value_ && a.exponent_ == b.exponent_;
  }
  friend bool operator!=(const UnitScalar& a, const UnitScalar& b) { return !(a == b); }

  /// Exact ratio of two scalars whose units cancel; throws UnitMismatch if
  /// they do not.
  ExactRational ratio_to(const UnitScalar& o) const {
    UnitScalar r = *this / o;
    if (r.unit_exponent() != 0)
      throw UnitMismatch("ratio leaves residual unit exponent " +
                         std::to_string(r.unit_exponent()));
    return r.value();
  }

private:
  ExactRational value_;
  int exponent_;
};

} // namespace permastat
