#pragma once

// Construction of 2-basic sets of S_n and A_n from 2-quotients, and the
// computational checks behind them.
//
// A set of irreducible characters is a 2-basic set when its restrictions
// to the odd-order elements form a Z-basis of the lattice spanned by the
// restrictions of all irreducible characters. Every check here reduces to
// that lattice statement (via Hermite normal forms) or to an exact Gram
// matrix comparison.

#include "charbasis/alternating.hpp"
#include "charbasis/partition.hpp"
#include "charbasis/report.hpp"
#include "charbasis/symmetric.hpp"
#include "charbasis/wreath.hpp"

#include <string>
#include <vector>

namespace charbasis {

/// Size bounds for the verification routines. Exceeding one throws
/// ResourceLimit.
struct Limits {
  int sym_n_max = 14;
  int alt_n_max = 12;
  int w_max = 5;
};

/// Which part of the selecting set of 2-quotients a quotient falls in:
/// (μ, ∅) with μ not all-even, or (μ, μ*). The two overlap only at (∅, ∅),
/// which is reported as ConjugatePair.
enum class QuotientBranch { SingleComponent, ConjugatePair, Outside };

struct QuotientMembership {
  PartitionPair quotient;
  bool member = false;
  QuotientBranch branch = QuotientBranch::Outside;
};

QuotientMembership classify_quotient(const PartitionPair& quotient);

std::string to_string(QuotientBranch branch);

/// Partitions of n whose 2-quotient is selected by classify_quotient, in
/// canonical order. Its size equals the number of odd-part partitions of n.
std::vector<Partition> symmetric_basic_set(int n);

/// Irreducible constituents of the restrictions to A_n: ρ_λ for the
/// non-self-conjugate members and both ρ_{λ,±} for the self-conjugate
/// ones. Sorted, duplicate free.
std::vector<AltLabel> restrict_to_alternating(const std::vector<Partition>& basic_set, int n);

/// symmetric_basic_set(n) restricted to A_n.
std::vector<AltLabel> alternating_basic_set(int n);

/// Cardinality, independence and lattice equality of the 2-regular
/// restrictions of symmetric_basic_set(n) against all of Irr(S_n).
VerificationReport verify_symmetric_basic_set(int n, const Limits& limits = {});

/// The same for A_n, after checking that the S_n basic set contains every
/// self-conjugate partition (reported separately from a lattice failure).
/// Split-class values are reduced with rationalize_columns. Requires n >= 2.
VerificationReport verify_alternating_basic_set(int n, const Limits& limits = {});

/// The lattice check of verify_symmetric_basic_set applied to an arbitrary
/// set of partitions of n, for testing candidate sets that do not come from
/// the quotient construction. Duplicates are ignored.
VerificationReport verify_candidate_basic_set(int n, const std::vector<Partition>& candidate,
                                              const Limits& limits = {});

/// An element of the Z-basis of the character ring of S_2w built from the
/// induced squares: either Ind(χ_μ ⊠ χ_μ) for μ ⊢ w, or χ_λ with λ not
/// all-even.
struct DoubledBasis {
  int w = 0;
  std::vector<std::string> labels;  // "square:2+1" or "chi:3+1+1+1"
  IntegerMatrix rows;               // coordinates on Irr(S_2w), columns in canonical order
};

DoubledBasis doubled_basis(int w);

/// Square, Hermite form equal to the identity, determinant ±1, and the
/// coefficient matrix of the induced squares on doubled partitions lower
/// unitriangular.
VerificationReport verify_doubled_basis(int w, const Limits& limits = {});

/// Signs η with target[i][j] = η_i η_j source[i][j] for all i, j, found by
/// propagation along the nonzero entries of `source`. On failure `cycle`
/// lists indices of a closed path whose sign constraints contradict each
/// other (or a single pair whose entries differ in absolute value).
struct SignSolution {
  bool found = false;
  std::vector<int> signs;
  std::vector<std::size_t> cycle;
};

SignSolution solve_gram_signs(const std::vector<std::vector<Rational>>& target,
                              const std::vector<std::vector<Rational>>& source);

/// Compares, for a block of positive weight w, the 2-regular Gram matrix of
/// its characters with the Gram matrix over the untwisted classes of
/// Z_2 ≀ S_w of the images λ ↦ θ of conjugate_second(2-quotient of λ), and
/// solves for signs η with G_S[i][j] = η_i η_j G_W[i][j].
VerificationReport verify_perfect_isometry(const TwoBlock& block, const Limits& limits = {});

enum class UntwistedVariant {
  /// (μ, ∅) for μ ⊢ w, in Z_2 ≀ S_w.
  KernelCharacters,
  /// (μ, μ) for μ ⊢ w together with (λ, ∅) for λ ⊢ 2w not all-even, in
  /// Z_2 ≀ S_2w.
  Mixed
};

/// Whether the given label set restricted to the untwisted classes is a
/// Z-basis of the lattice spanned by all irreducible characters there.
VerificationReport verify_untwisted_basic_set(int w, UntwistedVariant variant,
                                              const Limits& limits = {});

/// Composite check for S_n and A_n: the global S_n and A_n lattice checks,
/// the self-conjugate hypothesis, and per-block checks (weight 0, odd
/// weight, even weight) including the matching wreath-product check.
VerificationReport verify_basic_set_theorem(int n, const Limits& limits = {});

}  // namespace charbasis
