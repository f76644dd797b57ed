#pragma once

#include <vector>

#include "permastat/rational.hpp"

namespace permastat {

/// Dense row-major matrix of exact rationals.
using RatMatrix = std::vector<std::vector<ExactRational>>;

/// Exact determinant via fraction-free (Bareiss) elimination on a
/// denominator-cleared integer copy.  Throws NonSquareMatrix.  det of the
/// empty matrix is 1.
ExactRational det_exact(const RatMatrix& m);

} // namespace permastat
