#include <doctest.h>

#include "test_support.hpp"

#include "permastat/moments.hpp"
#include "permastat/oracle.hpp"

using namespace permastat;

namespace {

ExactRational rat(long num, long den = 1) { return ExactRational(Int(num), Int(den)); }

// Exact integral over the whole cube [0,1]^N: each monomial contributes
// prod 1/(e_v + 1).
ExactRational integrate_cube(const Polynomial& p) {
  ExactRational acc = 0;
  for (const auto& [exps, c] : p.terms()) {
    ExactRational term = c;
    for (int e : exps) term /= rat(e + 1);
    acc += term;
  }
  return acc;
}

// Jacobi gamma = 1 integrand prod x^(lambda_s(v)+alpha-1) summed over
// distinct arrangements, times the squared Vandermonde (beta = 2).
Polynomial beta2_integrand(const Partition& lambda, long alpha, long n) {
  const int nv = static_cast<int>(n);
  Polynomial vdm = Polynomial::constant(nv, rat(1));
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      Polynomial diff(nv);
      std::vector<int> xi(static_cast<size_t>(nv), 0), xj(static_cast<size_t>(nv), 0);
      xi[static_cast<size_t>(i)] = 1;
      xj[static_cast<size_t>(j)] = 1;
      diff.add_term(xi, rat(1));
      diff.add_term(xj, rat(-1));
      vdm = vdm * diff * diff;
    }
  Polynomial msum(nv);
  for (const auto& arrangement : distinct_permutations(lambda, n)) {
    std::vector<int> exps(arrangement.begin(), arrangement.end());
    for (auto& e : exps) e += static_cast<int>(alpha) - 1;
    msum.add_term(exps, rat(1));
  }
  // weight exponents alpha-1 are already folded into the arrangement sum
  return vdm * msum;
}

} // namespace

TEST_CASE("polynomial arithmetic") {
  Polynomial x(2), y(2);
  x.add_term({1, 0}, rat(1));
  y.add_term({0, 1}, rat(1));
  const Polynomial s = x + y;
  const Polynomial sq = s * s;
  CHECK(sq.terms().size() == 3);
  CHECK(sq.terms().at({2, 0}) == rat(1));
  CHECK(sq.terms().at({1, 1}) == rat(2));
  CHECK(sq.terms().at({0, 2}) == rat(1));
  CHECK(Polynomial::constant(2, rat(0)).terms().empty());
  CHECK_THROWS_AS(x + Polynomial(3), std::invalid_argument);
  CHECK_THROWS_AS(x.add_term({1}, rat(1)), std::invalid_argument);
}

TEST_CASE("ordered-cell integration of simple monomials") {
  Polynomial one(2);
  one.add_term({0, 0}, rat(1));
  CHECK(integrate_ordered_cell(one) == rat(1, 2));

  Polynomial x0(2);
  x0.add_term({1, 0}, rat(1));
  CHECK(integrate_ordered_cell(x0) == rat(1, 3));

  Polynomial x0x1(2);
  x0x1.add_term({1, 1}, rat(1));
  CHECK(integrate_ordered_cell(x0x1) == rat(1, 8));

  Polynomial one3(3);
  one3.add_term({0, 0, 0}, rat(1));
  CHECK(integrate_ordered_cell(one3) == rat(1, 6));
}

TEST_CASE("ordered-cell integral times N! equals the cube integral at beta = 2") {
  for (const auto& lam : {Partition{}, Partition{2}, Partition{2, 1}})
    for (long n = 2; n <= 3; ++n)
      for (long alpha = 1; alpha <= 2; ++alpha) {
        const Polynomial f = beta2_integrand(lam, alpha, n);
        CHECK(integrate_ordered_cell(f) * ExactRational(factorial(n)) == integrate_cube(f));
      }
}

TEST_CASE("simplex oracle small closed values") {
  CHECK(integrate_simplex_exact(Partition{}, rat(1), 2, 3) == rat(1));
  CHECK(integrate_simplex_exact(Partition{1}, rat(1), 1, 2) == rat(1, 2));
  CHECK(integrate_simplex_exact(Partition{2}, rat(1), 2, 2) == rat(11, 30));
  CHECK(integrate_simplex_exact(Partition{1}, rat(2), 2, 2) == rat(3, 5));
  CHECK(integrate_simplex_exact(Partition{1, 1}, rat(1), 2, 2) == rat(1, 6));
}

TEST_CASE("simplex oracle agrees with the analytic moment") {
  for (int beta : {1, 2, 4})
    for (long n = 1; n <= 3; ++n)
      for (long a = 1; a <= 2; ++a)
        for (int d = 0; d <= 3; ++d)
          for (const auto& lam : partitions_of_max_length(d, static_cast<int>(n))) {
            MomentQuery q;
            q.lambda = lam;
            q.alpha = rat(a);
            q.beta = beta;
            q.n = n;
            CHECK(integrate_simplex_exact(lam, rat(a), beta, n) == moment(q));
          }
}

TEST_CASE("simplex oracle guard rails") {
  CHECK_THROWS_AS(integrate_simplex_exact(Partition{1}, rat(1), 2, 5), UnsupportedSize);
  CHECK_THROWS_AS(integrate_simplex_exact(Partition{1}, rat(1), 2, 0), UnsupportedSize);
  CHECK_THROWS_AS(integrate_simplex_exact(Partition{1}, rat(1, 2), 2, 2), NonIntegerAlpha);
  CHECK_THROWS_AS(integrate_simplex_exact(Partition{1, 1, 1}, rat(1), 2, 2),
                  LengthExceedsAlphabet);
  CHECK_THROWS_AS(integrate_simplex_exact(Partition{1}, rat(1), 3, 2), std::invalid_argument);
}

TEST_CASE("SplitMix64 reference stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
  SplitMix64 rng2(1234567);
  CHECK(rng2.next() == 6457827717110365317ULL);
  CHECK(rng2.next() == 3203168211198807973ULL);
  CHECK(rng2.next() == 9817491932198370423ULL);
  SplitMix64 rng3(42);
  const double d = rng3.next_double();
  CHECK(d == doctest::Approx(0.7415648787718233).epsilon(1e-15));
  for (int i = 0; i < 1000; ++i) {
    const double v = rng3.next_double();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("Monte Carlo estimator is deterministic and unbiased-ish") {
  const auto a = mc_estimate(Partition{2, 1}, rat(1), 2, 2, 20000, 99);
  const auto b = mc_estimate(Partition{2, 1}, rat(1), 2, 2, 20000, 99);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  CHECK(a.samples == 20000);

  // empty statistic integrates the weight against itself: exactly one
  const auto trivial = mc_estimate(Partition{}, rat(1), 2, 2, 10000, 7);
  CHECK(trivial.mean == 1.0);
  CHECK(trivial.std_error == 0.0);

  // a fixed-seed run lands within 4 sigma of the exact value 11/30
  const auto est = mc_estimate(Partition{2}, rat(1), 2, 2, 200000, 2024);
  const double exact = rat(11, 30).to_double();
  CHECK(std::abs(est.mean - exact) < 4.0 * est.std_error);
  CHECK(est.std_error > 0.0);
  CHECK(est.std_error < 0.01);

  CHECK_THROWS_AS(mc_estimate(Partition{2}, rat(1), 2, 2, 9999, 1), std::invalid_argument);
  CHECK_THROWS_AS(mc_estimate(Partition{2}, rat(1), 3, 2, 10000, 1), std::invalid_argument);
}
