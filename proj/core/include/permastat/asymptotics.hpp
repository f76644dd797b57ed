#pragma once

#include <vector>

#include "permastat/partition.hpp"
#include "permastat/rational.hpp"

namespace permastat {

/// How the weight exponent alpha scales with N: alpha(N) ~ (beta/2)(ell-1)N^p.
/// Only the growth class and (for the linear class) the channel ratio ell
/// matter in the limit.
enum class RegimeClass { SubLinear, Linear, SuperLinear };

struct Regime {
  RegimeClass cls = RegimeClass::Linear;
  ExactRational ell = 1; // used only in the Linear class; must be positive
};

/// N -> infinity limit of <T_1^k> when alpha scales in the given regime:
///
///   p = 1:  ell/(ell+1)^(2k-1) * sum_{i=0}^{2k-2}
///           C(k-1, floor(i/2)) C(k-1, ceil(i/2)) ell^i
///   p < 1:  C(2k-1, k-1) / 2^(2k-1)
///   p > 1:  1
///
/// The p < 1 and p > 1 rows are the ell = 1 and ell -> infinity
/// specializations of the first.
ExactRational limit_single(int k, const Regime& r);

/// The same linear-regime limit in its alternating-sum form:
///   (ell+1) sum_{p=1}^k (-1)^(p-1)/p C(k-1,p-1) C(2p-2,p-1)
///           (ell/(ell+1)^2)^p.
/// Agrees with limit_single term-for-term in k; kept as an independent
/// cross-check.
ExactRational limit_novaes(int k, const ExactRational& ell);

struct PartitionLimit {
  ExactRational value;
  /// True when the value rests on the (numerically supported, unproven)
  /// factorization of multi-part limits into single-part factors.
  bool conjectural = false;
};

/// Product of limit_single over the parts of lambda.  Single-part (and
/// empty) partitions are proven; anything longer is flagged conjectural.
PartitionLimit limit_partition(const Partition& lambda, const Regime& r);

/// Closed finite-N form of <T_1^k> for beta = 2:
///   [ (N+alpha-1)_k / (2N+alpha-1)_k ] * [ (N+1)_{k-1} / k! ] *
///   4F3( 2-N-alpha, 2-2N-alpha-k, 1-k, 1-N ;
///        1-k-N, 2-2N-alpha, 2-N-alpha-k ; 1 )
/// evaluated term by term.  The series terminates through a vanishing upper
/// parameter; if a lower parameter vanishes strictly earlier the value is
/// undefined and ZeroDenominatorParameter is raised.
ExactRational finite_n_single(int k, const ExactRational& alpha, long n);

struct ProbeRow {
  long n = 0;
  ExactRational value;
  ExactRational limit;
  ExactRational abs_dev;
  ExactRational rel_dev;
};

/// Evaluates the exact moment along the regime's alpha(N) schedule
///   Linear:      alpha = (beta/2)(ell-1)N + 1
///   SubLinear:   alpha = 1
///   SuperLinear: alpha = N^2 + 1
/// and tabulates the deviation from limit_partition, one row per N.
std::vector<ProbeRow> convergence_probe(const Partition& lambda, int beta, const Regime& r,
                                        const std::vector<long>& ns);

} // namespace permastat
