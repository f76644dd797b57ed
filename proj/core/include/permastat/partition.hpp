#pragma once

#include <initializer_list>
#include <vector>

#include "permastat/gamma.hpp"
#include "permastat/rational.hpp"

namespace permastat {

/// Integer partition: weakly decreasing positive parts.  Trailing zeros in
/// the input are stripped; genuinely out-of-order or negative input is a
/// programming error and throws std::invalid_argument.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part (0-based); 0 beyond the length, so padded reads are implicit.
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  /// lexicographic on the part vectors; a deterministic total order for maps
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
  std::vector<int> parts_;
};

/// An exponent vector of length N; order matters, zeros allowed.
using Composition = std::vector<int>;

/// Product of factorials of part multiplicities (positive parts only).
Int lambda_factorial(const Partition& lambda);

/// Same, but over the partition padded with zeros to length n, so the zero
/// multiplicity (n - length) contributes too.  Throws PadLengthTooSmall.
Int lambda_factorial_padded(const Partition& lambda, long n);

/// z_lambda = prod_i a_i! i^{a_i} where a_i is the multiplicity of i.
Int z_lambda(const Partition& lambda);

/// True iff mu is dominated by lambda (all prefix sums of mu are <= those of
/// lambda).  Both must have the same weight, else WeightMismatch.
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// All distinct rearrangements of lambda padded with zeros to length n, in
/// ascending lexicographic order.  Throws PadLengthTooSmall.
std::vector<Composition> distinct_permutations(const Partition& lambda, long n);

/// Number of distinct rearrangements, n!/lambda_factorial_padded, computed as
/// a falling factorial so huge n stays cheap.
Int count_distinct_permutations(const Partition& lambda, long n);

/// prod over cells s of (xi * arm(s) + leg(s) + 1).  At xi = 1 this is the
/// hook product.
ExactRational arm_leg_product(const Partition& lambda, const ExactRational& xi);

/// Integer hook-length product.
Int hook_product(const Partition& lambda);

/// All partitions of d, in descending lexicographic order ([d] first).
std::vector<Partition> partitions_of(int d);

/// Partitions of d with at most max_length parts, same order.
std::vector<Partition> partitions_of_max_length(int d, int max_length);

} // namespace permastat
