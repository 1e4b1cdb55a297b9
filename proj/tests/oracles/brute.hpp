#pragma once

// Slow, independent reference computations used only by the test suite.
// Nothing here calls into the library's algorithms; partitions are plain
// vectors of parts so that results can be compared against the library
// after conversion.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;
using Perm = std::vector<int>;  // images of 0..n-1

/// Every partition of n, generated recursively (order unspecified).
std::vector<Parts> all_partitions(int n);

/// p(n) by Euler's pentagonal number recurrence.
std::int64_t partition_count(int n);

/// Transpose of the 0/1 diagram matrix.
Parts diagram_transpose(const Parts& lambda);

/// Hook lengths of the diagonal cells, read off the diagram.
Parts diagram_diagonal_hooks(const Parts& lambda);

/// Every 2-core reachable by removing rim dominoes in every possible order.
/// A correct theory gives exactly one.
std::set<Parts> cores_by_domino_removal(const Parts& lambda);

/// Multiset of all hook lengths of λ.
std::multiset<int> hook_lengths(const Parts& lambda);

/// |C_{S_n}(π)| by counting permutations that commute with a representative.
std::int64_t brute_centralizer(const Parts& cycle_type);

/// All permutations of {0..n-1}.
std::vector<Perm> all_permutations(int n);

Parts cycle_type_of(const Perm& p);
int perm_sign(const Perm& p);
Perm compose(const Perm& a, const Perm& b);  // (a ∘ b)(i) = a(b(i))
Perm inverse(const Perm& a);

/// Number of partitions of n into distinct odd parts, from subsets of odd
/// numbers.
std::int64_t distinct_odd_by_subsets(int n);

/// c^λ_{μν} by generating every filling of λ/μ and filtering.
std::int64_t lr_by_filtering(const Parts& mu, const Parts& nu, const Parts& lambda);

/// Character table of S_n from Young permutation characters and
/// Gram-Schmidt along the lexicographic order. Keyed by (λ, π).
std::map<Parts, std::map<Parts, std::int64_t>> permutation_module_table(int n);

}  // namespace oracle
