#pragma once

// Classes and characters of the wreath product Z_ℓ ≀ S_w, restricted to
// what the basic-set construction needs: class structures, the subset of
// untwisted classes (π, ∅, ..., ∅), and character values on that subset.
//
// Both classes and characters are labelled by ℓ-tuples of partitions with
// total size w. A class is untwisted when every cycle of the underlying
// permutation carries the trivial element of Z_ℓ.

#include "charbasis/partition.hpp"
#include "charbasis/scalar.hpp"

#include <compare>
#include <string>
#include <vector>

namespace charbasis {

struct MultiPartition {
  std::vector<Partition> components;

  int ell() const noexcept { return static_cast<int>(components.size()); }
  int total() const noexcept;
  const Partition& operator[](std::size_t i) const { return components[i]; }

  bool operator==(const MultiPartition&) const = default;
  auto operator<=>(const MultiPartition&) const = default;
};

inline MultiPartition bipartition(Partition first, Partition second) {
  return MultiPartition{{std::move(first), std::move(second)}};
}

/// All ℓ-tuples of total size w: the first component's size decreasing,
/// then each component in canonical partition order.
std::vector<MultiPartition> multipartitions(int ell, int w);

/// (π, ∅, ..., ∅) with ℓ components.
MultiPartition untwisted_structure(const Partition& cycle_type, int ell);

/// "(2+1|0)".
std::string to_text(const MultiPartition& m);

/// Π_i Π_k (ℓk)^{a_ik} a_ik!, with a_ik the number of k-parts of the i-th
/// component.
BigInt wreath_centralizer_order(int ell, const MultiPartition& structure);

struct WreathClassData {
  MultiPartition structure;
  bool untwisted = false;
  BigInt centralizer_order;
};

WreathClassData wreath_class(int ell, const MultiPartition& structure);

struct WreathCharacterLabel {
  MultiPartition label;
  BigInt degree;  // multinomial(w; |μ_i|) · Π f^{μ_i}
};

WreathCharacterLabel wreath_character(const MultiPartition& label);

/// θ_𝝁 on the untwisted class (π, ∅, ..., ∅): equal to the character
/// induced from the Young subgroup S_{|μ_1|} x ... x S_{|μ_ℓ|} of
/// χ_{μ_1} ⊠ ... ⊠ χ_{μ_ℓ}, evaluated at π.
BigInt untwisted_value(const MultiPartition& label, const Partition& cycle_type);

/// untwisted_value over partitions(w) in canonical order.
IntegerVector untwisted_values(const MultiPartition& label);

/// (μ_1, μ_2) ↦ (μ_1, μ_2*). Only defined for ℓ = 2.
MultiPartition conjugate_second(const MultiPartition& label);

/// Σ_{π ⊢ w} f(π) g(π) / |C(π, ∅, ..., ∅)|, for value vectors indexed by
/// partitions(w) in canonical order. The centralizer of the untwisted
/// class is ℓ^{length(π)} z_π (every cycle contributes its own Z_ℓ).
Rational untwisted_inner_product(const IntegerVector& f, const IntegerVector& g, int w, int ell);

/// The characters (μ, ∅, ..., ∅), μ ⊢ w: those with the base group Z_ℓ^w
/// in their kernel. On untwisted classes they reproduce the table of S_w.
std::vector<WreathCharacterLabel> untwisted_basic_labels(int ell, int w);

}  // namespace charbasis
