#pragma once

#include <vector>

#include "permastat/rational.hpp"

namespace permastat {

/// n! as a big integer; n must be >= 0.
Int factorial(long n);

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
Int binomial(long n, long k);

/// Double factorial n!! with the conventions (-1)!! = 0!! = 1.
Int double_factorial(long n);

/// Rising factorial (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.  n >= 0.
ExactRational pochhammer(const ExactRational& x, long n);

/// Largest integer <= x.
Int floor_int(const ExactRational& x);

/// Exact evaluation of prod Gamma(num_i) / prod Gamma(den_j).
///
/// Arguments are grouped by fractional part.  Within the integer group each
/// argument must be a positive integer (otherwise Gamma has a pole there and
/// NonpositiveGammaArgument is raised) and contributes a factorial; matched
/// numerator/denominator pairs are collapsed to Pochhammer ratios first so
/// balanced ratios of huge arguments never materialize huge factorials.
/// Every non-integer group must contain equally many numerator and
/// denominator arguments -- each pair differs by an integer and collapses to
/// a rational Pochhammer ratio -- otherwise the overall value is irrational
/// and UnpairableGammaArguments is raised.
ExactRational gamma_ratio(std::vector<ExactRational> num, std::vector<ExactRational> den);

} // namespace permastat
