#include <doctest.h>

#include "test_support.hpp"

#include "permastat/gamma.hpp"

using namespace permastat;

namespace {
ExactRational rat(long num, long den = 1) { return ExactRational(Int(num), Int(den)); }
} // namespace

TEST_CASE("factorial and binomial basics") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);

  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(52, 5) == 2598960);
  // Pascal's rule on a block of the triangle.
  for (long n = 1; n <= 12; ++n)
    for (long k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("double factorial conventions") {
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(6) == 48);
  CHECK(double_factorial(9) == 945);
  CHECK_THROWS_AS(double_factorial(-2), std::invalid_argument);
}

TEST_CASE("pochhammer rising factorial") {
  CHECK(pochhammer(rat(3), 0) == rat(1));
  CHECK(pochhammer(rat(1, 2), 3) == rat(15, 8));
  // (-5)_k hits zero once the factor -5+k crosses the origin.
  const long expected[] = {1, -5, 20, -60, 120, -120, 0, 0};
  for (long k = 0; k < 8; ++k) CHECK(pochhammer(rat(-5), k) == rat(expected[k]));
  CHECK_THROWS_AS(pochhammer(rat(1), -1), std::invalid_argument);

  // split identity (x)_{m+n} = (x)_m (x+m)_n
  for (long m = 0; m <= 5; ++m)
    for (long n = 0; n <= 5; ++n) {
      const ExactRational x = rat(-7, 3);
      CHECK(pochhammer(x, m + n) == pochhammer(x, m) * pochhammer(x + rat(m), n));
    }
}

TEST_CASE("floor_int rounds toward minus infinity") {
  CHECK(floor_int(rat(7, 2)) == 3);
  CHECK(floor_int(rat(-7, 2)) == -4);
  CHECK(floor_int(rat(4)) == 4);
  CHECK(floor_int(rat(-4)) == -4);
  CHECK(floor_int(rat(-1, 3)) == -1);
  CHECK(floor_int(rat(0)) == 0);
}

TEST_CASE("gamma_ratio on integer arguments") {
  CHECK(gamma_ratio({}, {}) == rat(1));
  CHECK(gamma_ratio({rat(10)}, {rat(7)}) == rat(504));
  CHECK(gamma_ratio({rat(1)}, {rat(1)}) == rat(1));
  CHECK(gamma_ratio({rat(6), rat(4)}, {rat(3), rat(7)}) == rat(1, 2));
  // unmatched integers fall back to plain factorials
  CHECK(gamma_ratio({rat(5)}, {}) == rat(24));
  CHECK(gamma_ratio({}, {rat(4)}) == rat(1, 6));
  // balanced huge pair collapses to a short Pochhammer ratio
  CHECK(gamma_ratio({rat(1000001)}, {rat(1000000)}) == rat(1000000));
  CHECK_THROWS_AS(gamma_ratio({rat(0)}, {rat(1)}), NonpositiveGammaArgument);
  CHECK_THROWS_AS(gamma_ratio({rat(-3)}, {rat(1)}), NonpositiveGammaArgument);
}

TEST_CASE("gamma_ratio pairs non-integer classes") {
  CHECK(gamma_ratio({rat(7, 2)}, {rat(3, 2)}) == rat(15, 4));
  CHECK(gamma_ratio({rat(1, 2), rat(9, 2)}, {rat(3, 2), rat(7, 2)}) == rat(7));
  CHECK(gamma_ratio({rat(7, 3)}, {rat(1, 3)}) == rat(4, 9));
  CHECK(gamma_ratio({rat(1, 3)}, {rat(1, 3)}) == rat(1));
  // negative non-integer arguments are fine: G(3/2)/G(-1/2) = (-1/2)_2
  CHECK(gamma_ratio({rat(3, 2)}, {rat(-1, 2)}) == rat(-1, 4));
  // mixed classes, each balanced
  CHECK(gamma_ratio({rat(7, 2), rat(5)}, {rat(3, 2), rat(3)}) == rat(15, 4) * rat(12));
  CHECK_THROWS_AS(gamma_ratio({rat(1, 2)}, {rat(1)}), UnpairableGammaArguments);
  CHECK_THROWS_AS(gamma_ratio({rat(3, 2)}, {}), UnpairableGammaArguments);
  CHECK_THROWS_AS(gamma_ratio({rat(1, 3)}, {rat(2, 3)}), UnpairableGammaArguments);
}

TEST_CASE("gamma_ratio is invariant under argument order") {
  const ExactRational v =
      gamma_ratio({rat(9, 2), rat(3), rat(1, 2)}, {rat(5, 2), rat(6), rat(5, 2)});
  CHECK(v == gamma_ratio({rat(1, 2), rat(9, 2), rat(3)}, {rat(5, 2), rat(5, 2), rat(6)}));
  CHECK(v == gamma_ratio({rat(3), rat(1, 2), rat(9, 2)}, {rat(6), rat(5, 2), rat(5, 2)}));
}
