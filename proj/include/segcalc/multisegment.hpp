#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "segcalc/arith.hpp"

namespace segcalc {

/// Formal segment [start, len], len >= 1.
struct FormalSegment {
  Int start = 0;
  Int len = 1;

  FormalSegment() = default;
  FormalSegment(Int start, Int len);

  friend bool operator==(const FormalSegment&, const FormalSegment&) = default;
};

/// Weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws DomainError on a non-positive part.
  explicit Partition(std::vector<Int> parts);

  const std::vector<Int>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  Int weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  /// Partial sums of the parts, padded with weight() up to `length` entries.
  std::vector<Int> partial_sums(std::size_t length) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<Int> parts_;
};

/// Finite multiset of formal segments, stored by decreasing length then
/// increasing start so that equality is structural.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<FormalSegment> segments);
  /// [0, n_1] + ... + [0, n_r].
  static Multisegment from_partition(const Partition& p);

  const std::vector<FormalSegment>& segments() const noexcept { return segments_; }
  Int length() const noexcept;
  Partition shape() const;

  Multisegment operator+(const Multisegment& other) const;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;

 private:
  std::vector<FormalSegment> segments_;
};

using Composition = std::vector<Int>;

/// Partial-sum comparison of the length profiles. Throws DomainError when
/// the total lengths differ.
bool dominance_leq(const Multisegment& mu, const Multisegment& nu);
bool dominance_leq(const Partition& mu, const Partition& nu);

Partition conjugate(const Partition& p);

/// Partitions of n in lexicographic order of their parts.
std::vector<Partition> partitions_of(Int n);

/// Compositions of n into `parts` nonnegative entries, lexicographically
/// decreasing from (n, 0, ..., 0).
std::vector<Composition> compositions_of(Int n, Int parts);

/// Sorts partitions by padded partial-sum vector, which is a linear
/// extension of dominance.
void sort_by_dominance(std::vector<Partition>& ps);

/// Covering relations of dominance on partitions of n, as (lower, upper).
std::vector<std::pair<Partition, Partition>> dominance_hasse(Int n);

// Text notation: "[a,n]", "[2,1]+[0,1]", "(3,1)". The empty multisegment is
// "0" and the empty partition "()".
std::string format(const FormalSegment& s);
std::string format(const Multisegment& m);
std::string format(const Partition& p);
std::string format_composition(const Composition& c);
Multisegment parse_multisegment(std::string_view text);
Partition parse_partition(std::string_view text);

}  // namespace segcalc
