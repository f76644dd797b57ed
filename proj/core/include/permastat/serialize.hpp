#pragma once

#include <string>

#include <json.hpp>

#include "permastat/moments.hpp"
#include "permastat/partition.hpp"
#include "permastat/rational.hpp"
#include "permastat/symfunc.hpp"

namespace permastat {

// Parses "[4,3,2]" or "[]" (whitespace tolerated) into a partition.
// Throws std::invalid_argument on malformed input.
Partition parse_partition(const std::string& text);

// Renders a partition as "[4,3,2]" (empty partition -> "[]").
std::string format_partition(const Partition& lambda);

// Parses "3", "-3", or "7/2" into an exact rational.
// Throws std::invalid_argument on malformed input.
ExactRational parse_rational(const std::string& text);

// Stable machine name for a computation route ("schur-kadell", ...).
std::string route_name(Route route);

// JSON document for a basis expansion: {"basis": ..., "terms": [...]}
// with one {"partition": [...], "coeff": "p/q"} object per term, ordered by
// descending lexicographic partition.  Jack expansions carry an extra
// "xi" field recording the deformation parameter.
nlohmann::ordered_json expansion_json(const SymExpansion& e);

// JSON document for a single moment evaluation.
nlohmann::ordered_json moment_json(const MomentQuery& q, const ExactRational& value,
                                   Route resolved);

} // namespace permastat
