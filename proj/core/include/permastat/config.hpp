#pragma once

namespace permastat::config {

/// Hard ceiling on symmetric-function expansion degree.  Transition tables
/// are dense in the number of partitions of the degree, so the default (12)
/// keeps memory and build time sane; override with the environment variable
/// PERMASTAT_MAX_DEGREE (read once, at first use).
int max_degree();

constexpr int kDefaultMaxDegree = 12;

} // namespace permastat::config
