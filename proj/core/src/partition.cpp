#include "permastat/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "permastat/errors.hpp"

namespace permastat {

namespace {

std::vector<int> normalize(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  return parts;
}

} // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(normalize(std::vector<int>(parts))) {}
Partition::Partition(std::vector<int> parts) : parts_(normalize(std::move(parts))) {}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[static_cast<size_t>(j)];
  return Partition(std::move(conj));
}

namespace {

std::map<int, int> multiplicities(const Partition& lambda) {
  std::map<int, int> mult;
  for (int p : lambda.parts()) ++mult[p];
  return mult;
}

} // namespace

Int lambda_factorial(const Partition& lambda) {
  Int r = 1;
  for (const auto& [part, count] : multiplicities(lambda)) {
    (void)part;
    r *= factorial(count);
  }
  return r;
}

Int lambda_factorial_padded(const Partition& lambda, long n) {
  if (n < lambda.length())
    throw PadLengthTooSmall("pad length " + std::to_string(n) + " < partition length " +
                            std::to_string(lambda.length()));
  return lambda_factorial(lambda) * factorial(n - lambda.length());
}

Int z_lambda(const Partition& lambda) {
  Int r = 1;
  for (const auto& [part, count] : multiplicities(lambda)) {
    r *= factorial(count);
    for (int i = 0; i < count; ++i) r *= part;
  }
  return r;
}

bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.weight() != lambda.weight())
    throw WeightMismatch("dominance comparison of weights " + std::to_string(mu.weight()) +
                         " and " + std::to_string(lambda.weight()));
  const int len = std::max(mu.length(), lambda.length());
  int pm = 0, pl = 0;
  for (int i = 0; i < len; ++i) {
    pm += mu.part(i);
    pl += lambda.part(i);
    if (pm > pl) return false;
  }
  return true;
}

std::vector<Composition> distinct_permutations(const Partition& lambda, long n) {
  if (n < lambda.length())
    throw PadLengthTooSmall("cannot arrange " + std::to_string(lambda.length()) + " parts in " +
                            std::to_string(n) + " slots");
  Composition c(static_cast<size_t>(n), 0);
  const auto& parts = lambda.parts();
  // start from the ascending arrangement and walk next_permutation:
  // that enumerates exactly the distinct rearrangements in lexicographic order
  std::copy(parts.rbegin(), parts.rend(), c.end() - static_cast<long>(parts.size()));
  std::vector<Composition> out;
  do {
    out.push_back(c);
  } while (std::next_permutation(c.begin(), c.end()));
  return out;
}

Int count_distinct_permutations(const Partition& lambda, long n) {
  if (n < lambda.length())
    throw PadLengthTooSmall("cannot arrange " + std::to_string(lambda.length()) + " parts in " +
                            std::to_string(n) + " slots");
  Int r = 1;
  for (long i = 0; i < lambda.length(); ++i) r *= (n - i);
  return r / lambda_factorial(lambda);
}

ExactRational arm_leg_product(const Partition& lambda, const ExactRational& xi) {
  const Partition conj = lambda.conjugate();
  ExactRational r = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      const int arm = lambda.part(i) - 1 - j;
      const int leg = conj.part(j) - 1 - i;
      r *= xi * ExactRational(arm) + ExactRational(leg + 1);
    }
  }
  return r;
}

Int hook_product(const Partition& lambda) {
  ExactRational r = arm_leg_product(lambda, 1);
  return r.num(); // denominator is 1 by construction
}

namespace {

void gen_partitions(int remaining, int max_part, int max_len, std::vector<int>& stack,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  if (max_len == 0) return;
  for (int first = std::min(remaining, max_part); first >= 1; --first) {
    stack.push_back(first);
    gen_partitions(remaining - first, first, max_len - 1, stack, out);
    stack.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int d) { return partitions_of_max_length(d, d); }

std::vector<Partition> partitions_of_max_length(int d, int max_length) {
  if (d < 0) throw std::invalid_argument("negative partition weight");
  std::vector<Partition> out;
  std::vector<int> stack;
  gen_partitions(d, d, max_length, stack, out);
  return out;
}

} // namespace permastat
