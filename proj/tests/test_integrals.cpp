#include <doctest.h>

#include "test_support.hpp"

#include "permastat/integrals.hpp"
#include "permastat/matrix.hpp"
#include "permastat/oracle.hpp"

using namespace permastat;

namespace {
ExactRational rat(long num, long den = 1) { return ExactRational(Int(num), Int(den)); }
} // namespace

TEST_CASE("ensemble validation") {
  EnsembleSpec s;
  s.family = Family::Jacobi;
  s.beta = 2;
  s.n = 3;
  CHECK_NOTHROW(s.validate());
  s.beta = 3;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.beta = 2;
  s.alpha = 0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.alpha = 1;
  s.gamma = rat(-1, 2);
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.gamma = 1;
  s.n = 0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("Selberg integral closed values") {
  // n = 1 is the Beta integral, independent of c
  CHECK(selberg(1, rat(2), rat(3), rat(5, 2)) == rat(1, 12));
  CHECK(selberg(1, rat(2), rat(3), rat(7, 2)) == rat(1, 12));
  CHECK(selberg(0, rat(2), rat(3), rat(1)) == rat(1));
  CHECK(selberg(2, rat(1), rat(1), rat(1)) == rat(1, 6));
  CHECK(selberg(2, rat(2), rat(1), rat(1)) == rat(1, 36));
  CHECK(selberg(2, rat(1), rat(1), rat(1, 2)) == rat(1, 3));
  CHECK(selberg(2, rat(1, 2), rat(1), rat(1, 2)) == rat(4, 3));
  // c = 0 factorizes into n independent Beta integrals
  CHECK(selberg(3, rat(2), rat(3), rat(0)) == rat(1, 1728));
  // B(1/2,1/2) = pi is irrational
  CHECK_THROWS_AS(selberg(1, rat(1, 2), rat(1, 2), rat(0)), UnpairableGammaArguments);
}

TEST_CASE("Jacobi normalization matches direct small integrals") {
  EnsembleSpec s;
  s.family = Family::Jacobi;
  s.beta = 2;
  s.n = 2;
  // int over [0,1]^2 of (x-y)^2 = 1/6
  CHECK(z_norm(s).value() == rat(1, 6));
  CHECK(z_norm(s).unit_exponent() == 0);
  s.alpha = 2;
  // int of (x-y)^2 xy = 1/36
  CHECK(z_norm(s).value() == rat(1, 36));
  s.alpha = 1;
  s.gamma = 2;
  // int of (x-y)^2 (1-x)(1-y) = 1/36 by symmetry x -> 1-x
  CHECK(z_norm(s).value() == rat(1, 36));
  s.gamma = 1;
  s.beta = 1;
  // int of |x-y| = 1/3
  CHECK(z_norm(s).value() == rat(1, 3));
  s.beta = 4;
  // int of (x-y)^4 = 1/15
  CHECK(z_norm(s).value() == rat(1, 15));
}

TEST_CASE("Laguerre normalization") {
  EnsembleSpec s;
  s.family = Family::Laguerre;
  s.beta = 2;
  s.n = 2;
  // int over (0,inf)^2 of (x-y)^2 e^{-x-y} = 2
  CHECK(z_norm(s).value() == rat(2));
  s.n = 1;
  CHECK(z_norm(s).value() == rat(1));
  s.beta = 1;
  s.n = 2;
  // int of |x-y| e^{-x-y} = 1
  CHECK(z_norm(s).value() == rat(1));
}

TEST_CASE("Gaussian normalization carries the symbolic unit") {
  EnsembleSpec s;
  s.family = Family::Gaussian;
  s.beta = 2;
  s.n = 2;
  // int of (x-y)^2 e^{-(x^2+y^2)/2} = 2 pi = u^2
  CHECK(z_norm(s).value() == rat(2));
  CHECK(z_norm(s).unit_exponent() == 2);
  s.n = 1;
  CHECK(z_norm(s).value() == rat(1));
  CHECK(z_norm(s).unit_exponent() == 1);
  s.beta = 4;
  s.n = 2;
  CHECK(z_norm(s).value() == rat(12));
  CHECK(z_norm(s).unit_exponent() == 2);
  // beta = 1 pairings leave stray half-integer Gamma arguments for any N >= 2
  s.beta = 1;
  s.n = 1;
  CHECK(z_norm(s).value() == rat(1));
  for (long n = 2; n <= 4; ++n) {
    s.n = n;
    CHECK_THROWS_AS(z_norm(s), UnpairableGammaArguments);
  }
}

TEST_CASE("beta = 2 Jack average reduces to the Schur average") {
  // J at xi = 1 is the hook-product multiple of the Schur function, so the
  // two averages differ exactly by hook_product(mu).
  for (int d = 1; d <= 4; ++d)
    for (const auto& mu : partitions_of(d))
      for (long n = mu.length(); n <= 4; ++n)
        for (const ExactRational& alpha : {rat(1), rat(3, 2), rat(7)})
          CHECK(kadell_moment_ratio(mu, alpha, 2, n) ==
                ExactRational(hook_product(mu)) * schur_average(mu, alpha, n));
}

TEST_CASE("single-box averages for every beta") {
  // <J_[1]> = N * alpha/(alpha+1+c(N-1)) for beta = 2c; at N = 1 all betas
  // agree on alpha/(alpha+1).
  for (int beta : {1, 2, 4}) {
    CHECK(kadell_moment_ratio(Partition{1}, rat(3), beta, 1) == rat(3, 4));
    CHECK(kadell_moment_ratio(Partition{1}, rat(1, 2), beta, 1) == rat(1, 3));
  }
  // at the symmetric alpha = 1 point every beta gives <T_1+T_2> = 1
  for (int beta : {1, 2, 4}) CHECK(kadell_moment_ratio(Partition{1}, rat(1), beta, 2) == rat(1));
  // alpha = 2, N = 2, checked against direct polynomial integrals
  CHECK(kadell_moment_ratio(Partition{1}, rat(2), 2, 2) == rat(6, 5));
  CHECK(kadell_moment_ratio(Partition{1}, rat(2), 1, 2) == rat(5, 4));
  CHECK(kadell_moment_ratio(Partition{1}, rat(2), 4, 2) == rat(8, 7));
}

TEST_CASE("averages reject partitions longer than the alphabet") {
  CHECK_THROWS_AS(kadell_moment_ratio(Partition{1, 1}, rat(1), 2, 1), LengthExceedsAlphabet);
  CHECK_THROWS_AS(schur_average(Partition{1, 1, 1}, rat(1), 2), LengthExceedsAlphabet);
  CHECK_THROWS_AS(kadell_moment_ratio(Partition{1}, rat(0), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(kadell_moment_ratio(Partition{1}, rat(1), 3, 1), std::invalid_argument);
}

TEST_CASE("Cauchy double alternant") {
  CHECK(cauchy_double_alternant({rat(1)}, {rat(2)}) == rat(1, 3));
  // X = (1,2), Y = (1,3): (1-2)(1-3) / [(1+1)(1+3)(2+1)(2+3)] = 2/120
  CHECK(cauchy_double_alternant({rat(1), rat(2)}, {rat(1), rat(3)}) == rat(1, 60));
  CHECK(cauchy_double_alternant({}, {}) == rat(1));
  // repeated X collapses two rows
  CHECK(cauchy_double_alternant({rat(1), rat(1)}, {rat(1), rat(3)}) == rat(0));
  CHECK_THROWS_AS(cauchy_double_alternant({rat(1)}, {rat(-1)}), SingularDenominator);
  CHECK_THROWS_AS(cauchy_double_alternant({rat(1)}, {rat(1), rat(2)}), std::invalid_argument);

  // against a literal determinant of 1/(X_i+Y_j)
  SplitMix64 rng(0xCA0C4EULL);
  for (int trial = 0; trial < 120; ++trial) {
    const size_t n = 1 + rng.next() % 5;
    std::vector<ExactRational> xs, ys;
    for (size_t i = 0; i < n; ++i) {
      xs.push_back(rat(1 + static_cast<long>(rng.next() % 48), 1 + static_cast<long>(rng.next() % 4)));
      ys.push_back(rat(1 + static_cast<long>(rng.next() % 48), 1 + static_cast<long>(rng.next() % 4)));
    }
    RatMatrix m(n, std::vector<ExactRational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m[i][j] = rat(1) / (xs[i] + ys[j]);
    CHECK(cauchy_double_alternant(xs, ys) == det_exact(m));
  }
}

TEST_CASE("Selberg identity check") {
  for (long n = 1; n <= 6; ++n)
    for (const ExactRational& alpha : {rat(1), rat(2), rat(7, 2)})
      CHECK(selberg_identity_check(n, alpha));
}
