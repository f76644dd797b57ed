#pragma once

#include <utility>
#include <vector>

#include "permastat/partition.hpp"
#include "permastat/rational.hpp"

namespace permastat {

/// Which algorithm evaluates a moment.  Auto picks SchurKadell for beta = 2
/// and JackKadell otherwise; the slower routes stay selectable for
/// cross-validation.
enum class Route { Auto, SchurKadell, JackKadell, HyperdetCauchy };

struct MomentQuery {
  Partition lambda;
  ExactRational alpha = 1;
  int beta = 2;
  long n = 1;
  Route route = Route::Auto;
};

/// The nonlinear statistic <T_1^l1 ... T_N^lN> of the Jacobi (gamma = 1)
/// ensemble, exactly.  Expansion terms whose partition is longer than N
/// contribute nothing and are skipped (see moment_dropped_terms).
/// Throws LengthExceedsAlphabet when length(lambda) > N and
/// std::invalid_argument for bad beta/alpha.
ExactRational moment(const MomentQuery& q);

/// The route Auto would resolve to for this query.
Route resolve_route(const MomentQuery& q);

/// Diagnostic: how many expansion terms the most recent moment() call on
/// this thread discarded because their length exceeded N.
long moment_dropped_terms();

/// <det H> = <T_1 ... T_N> in closed form, prod_{j=0}^{N-1}
/// (alpha+j)/(alpha+N+j); anchors the moment routes at lambda = [1^N].
ExactRational average_determinant(const ExactRational& alpha, long n);

/// moment() over a grid of alpha values, evaluated in parallel with a
/// deterministic (input-order) result layout.
std::vector<std::pair<ExactRational, ExactRational>> moment_sweep(
    const Partition& lambda, int beta, long n, const std::vector<ExactRational>& alphas);

} // namespace permastat
