#include <doctest.h>

#include "test_support.hpp"

#include "permastat/asymptotics.hpp"
#include "permastat/moments.hpp"

using namespace permastat;

namespace {
ExactRational rat(long num, long den = 1) { return ExactRational(Int(num), Int(den)); }

Regime linear(const ExactRational& ell) { return Regime{RegimeClass::Linear, ell}; }
} // namespace

TEST_CASE("limit values in each growth regime") {
  const Regime sub{RegimeClass::SubLinear, 1};
  const Regime super{RegimeClass::SuperLinear, 1};

  CHECK(limit_single(1, sub) == rat(1, 2));
  CHECK(limit_single(2, sub) == rat(3, 8));
  CHECK(limit_single(4, sub) == rat(35, 128));
  CHECK(limit_single(1, linear(rat(4))) == rat(4, 5));
  CHECK(limit_single(2, linear(rat(1))) == rat(3, 8));
  for (int k = 1; k <= 8; ++k) CHECK(limit_single(k, super) == rat(1));

  CHECK_THROWS_AS(limit_single(0, sub), std::invalid_argument);
  CHECK_THROWS_AS(limit_single(2, linear(rat(0))), std::invalid_argument);
  CHECK_THROWS_AS(limit_single(2, linear(rat(-2))), std::invalid_argument);
}

TEST_CASE("the sublinear limit is the ell = 1 point of the linear one") {
  for (int k = 1; k <= 12; ++k)
    CHECK(limit_single(k, Regime{RegimeClass::SubLinear, 1}) == limit_single(k, linear(rat(1))));
}

TEST_CASE("alternating-sum form agrees with the binomial sum") {
  for (int k = 1; k <= 10; ++k)
    for (long l = 1; l <= 6; ++l) CHECK(limit_novaes(k, rat(l)) == limit_single(k, linear(rat(l))));
  // rational ell too
  CHECK(limit_novaes(3, rat(7, 2)) == limit_single(3, linear(rat(7, 2))));
  CHECK(limit_novaes(1, rat(9)) == rat(9, 10));
  CHECK_THROWS_AS(limit_novaes(0, rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(limit_novaes(2, rat(0)), std::invalid_argument);
}

TEST_CASE("partition limits factor over parts") {
  const Regime sub{RegimeClass::SubLinear, 1};
  const auto single = limit_partition(Partition{4}, sub);
  CHECK(single.value == rat(35, 128));
  CHECK_FALSE(single.conjectural);

  const auto empty = limit_partition(Partition{}, sub);
  CHECK(empty.value == rat(1));
  CHECK_FALSE(empty.conjectural);

  const auto multi = limit_partition(Partition{4, 3, 2}, sub);
  CHECK(multi.value == limit_single(4, sub) * limit_single(3, sub) * limit_single(2, sub));
  CHECK(multi.conjectural);
  CHECK(multi.value == rat(35, 128) * rat(5, 16) * rat(3, 8));

  const auto lin = limit_partition(Partition{2, 1}, linear(rat(4)));
  CHECK(lin.value == limit_single(2, linear(rat(4))) * rat(4, 5));
  CHECK(lin.conjectural);
}

TEST_CASE("frozen limit goldens") {
  CHECK(limit_partition(Partition{4, 3, 2}, Regime{RegimeClass::SubLinear, 1}).value ==
        rat(525, 16384));
  CHECK(limit_partition(Partition{4, 3, 2}, linear(rat(4))).value ==
        ExactRational(Int("1253598528"), Int("6103515625")));
}

TEST_CASE("closed finite-N form reproduces the exact moment") {
  for (int k = 1; k <= 4; ++k)
    for (long n = 1; n <= 5; ++n)
      for (const ExactRational& alpha : {rat(1), rat(2), rat(5, 2)}) {
        MomentQuery q;
        q.lambda = Partition{k};
        q.alpha = alpha;
        q.beta = 2;
        q.n = n;
        CHECK(finite_n_single(k, alpha, n) == moment(q));
      }
  // k = 1 collapses to (N+alpha-1)/(2N+alpha-1)
  CHECK(finite_n_single(1, rat(3), 7) == rat(9, 16));
  CHECK_THROWS_AS(finite_n_single(0, rat(1), 1), std::invalid_argument);
  CHECK_THROWS_AS(finite_n_single(2, rat(0), 1), std::invalid_argument);
  CHECK_THROWS_AS(finite_n_single(2, rat(1), 0), std::invalid_argument);
}

TEST_CASE("convergence probe rows carry consistent bookkeeping") {
  const Regime sub{RegimeClass::SubLinear, 1};
  const auto rows = convergence_probe(Partition{2}, 2, sub, {4, 8});
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) {
    MomentQuery q;
    q.lambda = Partition{2};
    q.alpha = 1;
    q.beta = 2;
    q.n = r.n;
    CHECK(r.value == moment(q));
    CHECK(r.limit == rat(3, 8));
    CHECK(r.abs_dev == abs(r.value - r.limit));
    CHECK(r.rel_dev == r.abs_dev / r.limit);
  }
  CHECK(rows[1].abs_dev < rows[0].abs_dev);

  // linear regime at ell = 2, beta = 4: the schedule alpha = (beta/2)(ell-1)N+1
  const auto lin = convergence_probe(Partition{2}, 4, linear(rat(2)), {3});
  REQUIRE(lin.size() == 1);
  MomentQuery q;
  q.lambda = Partition{2};
  q.alpha = rat(2 * 3 + 1);
  q.beta = 4;
  q.n = 3;
  CHECK(lin[0].value == moment(q));
  CHECK(lin[0].limit == limit_single(2, linear(rat(2))));

  // superlinear schedule alpha = N^2 + 1 drives the moment toward 1
  const auto sup = convergence_probe(Partition{1}, 2, Regime{RegimeClass::SuperLinear, 1}, {5});
  MomentQuery qs;
  qs.lambda = Partition{1};
  qs.alpha = rat(26);
  qs.beta = 2;
  qs.n = 5;
  CHECK(sup[0].value == moment(qs));
  CHECK(sup[0].limit == rat(1));
}
