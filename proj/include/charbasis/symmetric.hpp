#pragma once

// Irreducible characters of the symmetric group S_n, their 2-regular
// restrictions and the grouping of Irr(S_n) into 2-blocks.

#include "charbasis/partition.hpp"
#include "charbasis/scalar.hpp"

#include <vector>

namespace charbasis {

inline constexpr int kDefaultTableMax = 14;

/// A conjugacy class of S_n.
struct SymClass {
  Partition cycle_type;
  BigInt centralizer_order;
  bool is_two_regular = false;  // every cycle has odd length
  int sign = 1;                 // ε on the class
};

/// Classes of S_n in canonical partition order.
std::vector<SymClass> sym_classes(int n);

/// Cycle types with all parts odd, in canonical order.
std::vector<Partition> two_regular_classes(int n);

/// A class function of S_n given on an explicit list of classes. Values
/// are exact integers; the class list may be a subset (after restriction).
struct CharacterVector {
  int n = 0;
  std::vector<Partition> classes;
  IntegerVector values;

  /// Value on a class; throws std::out_of_range for a class not listed.
  const BigInt& at(const Partition& cycle_type) const;
};

/// χ_λ(π) by the Murnaghan–Nakayama rule. Results are memoized in a
/// process-wide cache that is safe to use from several threads.
/// Throws std::invalid_argument when |λ| != |π|.
BigInt character_value(const Partition& lambda, const Partition& cycle_type);

/// χ_λ on every class of S_|λ|.
CharacterVector character(const Partition& lambda);

/// The full table: rows are partitions (characters), columns cycle types,
/// both in canonical order.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> labels;
  std::vector<Partition> classes;
  IntegerMatrix values;
};

/// Throws ResourceLimit when n > n_max.
CharacterTable character_table(int n, int n_max = kDefaultTableMax);

/// Keeps only the classes whose cycle types have all parts odd.
CharacterVector restrict_two_regular(const CharacterVector& chi);

struct TwoBlock {
  Partition core;
  int weight = 0;
  std::vector<Partition> members;  // canonical order
};

/// 2-blocks of S_n ordered by increasing weight (a weight determines the
/// core for fixed n).
std::vector<TwoBlock> two_blocks(int n);

/// Σ_{c ∈ C} α(c) β(c) / z_c. Throws std::invalid_argument when a label of
/// C is missing from either vector or the groups differ.
Rational inner_product_over(const std::vector<Partition>& classes, const CharacterVector& alpha,
                            const CharacterVector& beta);

}  // namespace charbasis
