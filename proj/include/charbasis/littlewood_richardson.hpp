#pragma once

// Littlewood–Richardson coefficients by enumeration of lattice-word skew
// tableaux, and the characters induced from Young subgroups built on them.

#include "charbasis/partition.hpp"
#include "charbasis/scalar.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace charbasis {

/// c^λ_{μν}: the number of semistandard skew tableaux of shape λ/μ and
/// content ν whose reverse reading word is a lattice word. Zero when the
/// sizes do not add up or μ ⊄ λ.
std::int64_t lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

/// Multiplicities of the irreducible constituents of a character of S_n.
struct LRDecomposition {
  std::vector<Partition> sources;
  std::map<Partition, BigInt> terms;  // only nonzero multiplicities

  BigInt multiplicity(const Partition& lambda) const;
};

/// Ind from the Young subgroup S_{|μ_1|} x ... x S_{|μ_k|} of
/// χ_{μ_1} ⊠ ... ⊠ χ_{μ_k}, decomposed by folding LR products from the left.
LRDecomposition lr_product(const std::vector<Partition>& factors);

/// Ind_{S_w x S_w}^{S_2w}(χ_μ ⊠ χ_μ).
LRDecomposition induced_square(const Partition& mu);

/// Σ_λ m_λ χ_λ(π).
BigInt evaluate(const LRDecomposition& decomposition, const Partition& cycle_type);

/// (2μ_1, 2μ_2, ...).
Partition doubled(const Partition& mu);

/// The matrix of coefficients c^{ν̃}_{μμ} with rows ν and columns μ, both
/// running over the partitions of w in canonical (descending
/// lexicographic) order. Column μ holds the coordinates of the induced
/// square of χ_μ on the characters labelled by doubled partitions.
struct SquareInductionMatrix {
  std::vector<Partition> order;
  IntegerMatrix matrix;
  bool lower_unitriangular = false;
};

SquareInductionMatrix square_induction_matrix(int w);

/// Value at the class π of the character induced from the Young subgroup
/// S_{|μ_1|} x ... x S_{|μ_k|} of χ_{μ_1} ⊠ ... ⊠ χ_{μ_k}: the sum, over
/// all ways of distributing the cycles of π among the factors, of
/// z_π / Π z_{ρ_i} · Π χ_{μ_i}(ρ_i). Empty components are allowed.
/// Throws std::invalid_argument when Σ|μ_i| != |π|.
BigInt young_induced_value(const std::vector<Partition>& components, const Partition& cycle_type);

}  // namespace charbasis
