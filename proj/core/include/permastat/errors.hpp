#pragma once

#include <stdexcept>
#include <string>

namespace permastat {

/// Base class for every recoverable failure raised by this library.
/// All subclasses carry a human-readable message; callers that need to
/// distinguish failure modes catch the concrete type.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// gamma_ratio: a non-integer fractional class has unequal numerator /
/// denominator counts, so the ratio is irrational and cannot be returned
/// as an exact rational.
class UnpairableGammaArguments : public Error {
public:
  using Error::Error;
};

/// gamma_ratio: an argument sits on (or the recursion walks across) a pole
/// of the gamma function at a non-positive integer.
class NonpositiveGammaArgument : public Error {
public:
  using Error::Error;
};

/// det_exact: input matrix is not square.
class NonSquareMatrix : public Error {
public:
  using Error::Error;
};

/// dominance_leq: the two partitions have different weights.
class WeightMismatch : public Error {
public:
  using Error::Error;
};

/// lambda_factorial_padded / distinct_permutations: requested pad length is
/// shorter than the partition.
class PadLengthTooSmall : public Error {
public:
  using Error::Error;
};

/// basis_transition and friends: degree exceeds the configured cap
/// (see config::max_degree).
class DegreeTooLarge : public Error {
public:
  using Error::Error;
};

/// An expansion restricted to N variables was asked for a partition with
/// more than N parts.
class LengthExceedsAlphabet : public Error {
public:
  using Error::Error;
};

/// An exact ratio has a vanishing denominator factor (division by zero in
/// a structured formula, e.g. coincident points in a double alternant).
class SingularDenominator : public Error {
public:
  using Error::Error;
};

/// Brute-force reference routines refuse sizes they cannot finish.
class SizeTooLargeForBruteForce : public Error {
public:
  using Error::Error;
};

/// UnitScalar arithmetic combined two quantities carrying different symbolic
/// unit exponents.
class UnitMismatch : public Error {
public:
  using Error::Error;
};

/// A routine with a hard size window (e.g. the exact simplex oracle) was
/// called outside it.
class UnsupportedSize : public Error {
public:
  using Error::Error;
};

/// The exact simplex oracle requires a positive integer weight exponent.
class NonIntegerAlpha : public Error {
public:
  using Error::Error;
};

/// Terminating hypergeometric evaluation hit a vanishing lower parameter
/// before the series terminated.
class ZeroDenominatorParameter : public Error {
public:
  using Error::Error;
};

} // namespace permastat
