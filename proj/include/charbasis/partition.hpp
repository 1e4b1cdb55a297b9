#pragma once

// Integer partitions and the 2-modular combinatorics built on them:
// conjugation, beta-sets, 2-cores and 2-quotients, diagonal hooks,
// centralizer orders and enumeration of the partition families in use.

#include "charbasis/scalar.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace charbasis {

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction; anything else that is not weakly decreasing
/// and positive is rejected.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary positive parts into canonical order.
  static Partition from_parts(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// λ_i with zero beyond the last part; indices are 0-based.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  bool operator==(const Partition& o) const noexcept { return parts_ == o.parts_; }
  std::strong_ordering operator<=>(const Partition& o) const noexcept {
    return parts_ <=> o.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

using PartitionPair = std::pair<Partition, Partition>;

Partition conjugate(const Partition& lambda);

inline bool is_self_conjugate(const Partition& lambda) { return conjugate(lambda) == lambda; }

/// Beta-numbers λ_i + beads - i (i = 1..beads), strictly decreasing.
/// Requires beads >= length.
std::vector<int> beta_set(const Partition& lambda, int beads);

/// Inverse of beta_set for any finite set of distinct non-negative integers.
Partition from_beta_set(std::vector<int> beta);

/// 2-core, 2-quotient and 2-weight of a partition.
///
/// Convention: take an even number 2t >= length of beads; the beads on the
/// even runner give the first quotient component and those on the odd
/// runner the second. With this choice the quotient of the conjugate is
/// (conjugate(second), conjugate(first)).
struct TwoQuotientData {
  Partition core;
  PartitionPair quotient;
  int weight = 0;

  bool operator==(const TwoQuotientData&) const = default;
};

TwoQuotientData two_quotient(const Partition& lambda);

/// Rebuilds the unique partition with the given 2-core and 2-quotient.
/// Throws std::invalid_argument when `core` still has a removable domino.
Partition from_two_quotient(const Partition& core, const PartitionPair& quotient);

/// 2-cores are exactly the staircases (k, k-1, ..., 1).
bool is_two_core(const Partition& lambda);

/// Diagonal hook lengths (2λ_1 - 1, 2λ_2 - 3, ...) of a self-conjugate
/// partition. Throws std::invalid_argument when λ is not self-conjugate.
Partition diagonal_hooks(const Partition& lambda);

/// z_π = Π k^{a_k} a_k!, the order of the centralizer of a permutation of
/// cycle type π.
BigInt centralizer_order(const Partition& cycle_type);

/// Number of permutations of cycle type π: |π|! / z_π.
BigInt class_size(const Partition& cycle_type);

/// ε on the class: (-1)^(n - number of cycles).
int cycle_sign(const Partition& cycle_type);

bool all_parts_odd(const Partition& lambda);
bool all_parts_even(const Partition& lambda);
bool has_distinct_parts(const Partition& lambda);

/// Number of standard Young tableaux, by the hook length formula.
BigInt standard_tableaux_count(const Partition& lambda);

/// All partitions of n, in descending lexicographic order: (n) first,
/// (1^n) last. This is the canonical order for every table in the library.
std::vector<Partition> partitions(int n);

struct PartitionFamily {
  enum class Kind { AllOfN, OddParts, DistinctParts, SelfConjugate, AllEvenParts };
  Kind kind = Kind::AllOfN;
  int n = 0;
};

/// Members of a family, in canonical order. AllEvenParts(n) is empty for
/// odd n and {∅} for n = 0.
std::vector<Partition> enumerate(const PartitionFamily& family);

/// Number of partitions of n into distinct odd parts.
std::size_t count_distinct_odd(int n);

/// Canonical text form "4+2+1"; the empty partition is written "0".
std::string to_text(const Partition& lambda);

/// Accepts "4+2+1", "4,2,1", "4 2 1", "[4,2,1]" and "0" for ∅; parts may be
/// given in any order. Throws std::invalid_argument on malformed input.
Partition parse_partition(std::string_view text);

}  // namespace charbasis

template <>
struct std::hash<charbasis::Partition> {
  std::size_t operator()(const charbasis::Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
    return h;
  }
};
