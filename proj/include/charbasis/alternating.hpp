#pragma once

// Conjugacy classes and irreducible characters of the alternating group
// A_n, obtained from those of S_n by restriction. Characters labelled by a
// self-conjugate partition split into a ± pair taking quadratic
// irrational values on the two A_n classes of diagonal-hook type.

#include "charbasis/partition.hpp"
#include "charbasis/quad_value.hpp"
#include "charbasis/symmetric.hpp"

#include <compare>
#include <vector>

namespace charbasis {

inline constexpr int kDefaultAltTableMax = 12;

enum class SplitTag { None, Plus, Minus };

struct AltClass {
  Partition cycle_type;
  bool split = false;
  SplitTag tag = SplitTag::None;
  BigInt centralizer_order;  // in A_n
  bool is_two_regular = false;

  bool operator==(const AltClass& o) const { return cycle_type == o.cycle_type && tag == o.tag; }
};

/// Classes of A_n (n >= 2): even cycle types in canonical order, a split
/// type contributing its + class before its - class.
std::vector<AltClass> alt_classes(int n);

/// The permutation (images of 0..n-1) designated as the representative of
/// a class. For the + class of a split type the cycles are filled with
/// 0, 1, 2, ... in order of the parts; the - class uses its conjugate by
/// the transposition (0 1).
std::vector<int> class_representative(const AltClass& cls);

/// A class function of A_n on an explicit list of classes.
struct AltClassFunction {
  int n = 0;
  std::vector<AltClass> classes;
  std::vector<QuadValue> values;

  /// Throws std::out_of_range for a class not listed.
  const QuadValue& at(const AltClass& cls) const;
};

struct AltLabel {
  enum class Kind { NonSplit, SplitPlus, SplitMinus };
  Partition partition;  // for NonSplit: the lexicographically smaller of {λ, λ*}
  Kind kind = Kind::NonSplit;

  bool operator==(const AltLabel&) const = default;
  auto operator<=>(const AltLabel& o) const {
    if (auto c = o.partition <=> partition; c != 0) return c;  // canonical order first
    return kind <=> o.kind;
  }
};

/// The label of ρ_λ (λ not self-conjugate) or of ρ_{λ,±}.
AltLabel alt_label(const Partition& lambda, SplitTag tag = SplitTag::None);

std::string to_text(const AltLabel& label);

struct AltCharacter : AltClassFunction {
  AltLabel label;
};

/// Irreducible constituents of Res χ_λ: one character when λ != λ*, the
/// pair (ρ_{λ,+}, ρ_{λ,-}) otherwise. Requires |λ| >= 2.
std::vector<AltCharacter> alt_characters(const Partition& lambda);

/// Every irreducible character of A_n, ordered by label. Throws
/// ResourceLimit when n > n_max.
std::vector<AltCharacter> alt_character_table(int n, int n_max = kDefaultAltTableMax);

/// Res χ on all classes of A_n; chi must be given on every class of S_n.
AltClassFunction restrict_to_alternating(const CharacterVector& chi);

/// Induction to S_n. The result lists every S_n cycle type whose A_n
/// classes are all present in f, plus the odd classes (value 0) when f is
/// given on all of A_n. Throws std::domain_error if a value is not an
/// integer (cannot happen for characters).
CharacterVector induce_to_symmetric(const AltClassFunction& f);

/// Keeps the classes whose cycle types have all parts odd; split tags are
/// preserved.
AltClassFunction restrict_two_regular(const AltClassFunction& f);
AltCharacter restrict_two_regular(const AltCharacter& rho);

/// Σ_c α(c) conj(β(c)) / |C_{A_n}(c)| over the classes listed in α. Throws
/// std::domain_error if the result is irrational and std::invalid_argument
/// when β lacks a class of α.
Rational inner_product(const AltClassFunction& alpha, const AltClassFunction& beta);

}  // namespace charbasis
