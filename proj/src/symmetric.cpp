#include "charbasis/symmetric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace charbasis {

namespace {

struct MnKey {
  std::vector<int> shape;
  std::vector<int> cycles;
  bool operator==(const MnKey&) const = default;
};

struct MnKeyHash {
  std::size_t operator()(const MnKey& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : k.shape) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    h = (h ^ 0xffu) * 1099511628211ull;
    for (int x : k.cycles) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

class MnCache {
 public:
  bool find(const MnKey& key, BigInt& out) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(MnKey key, const BigInt& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<MnKey, BigInt, MnKeyHash> table_;
};

MnCache& mn_cache() {
  static MnCache cache;
  return cache;
}

// Cycles are consumed largest first; `first` indexes into the cycle type.
BigInt mn_rec(const Partition& shape, const std::vector<int>& cycles, std::size_t first) {
  if (first == cycles.size()) return shape.empty() ? 1 : 0;
  if (shape.length() <= 1) return 1;  // one row: trivial character

  MnKey key{shape.parts(), std::vector<int>(cycles.begin() + static_cast<long>(first), cycles.end())};
  BigInt cached;
  if (mn_cache().find(key, cached)) return cached;

  const int k = cycles[first];
  const int beads = shape.length();
  std::vector<int> beta = beta_set(shape, beads);  // strictly decreasing
  BigInt total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    // Beads strictly between target and beta[i] give the leg length.
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> moved = beta;
    moved[i] = target;
    BigInt sub = mn_rec(from_beta_set(std::move(moved)), cycles, first + 1);
    if (between % 2) total -= sub;
    else total += sub;
  }
  mn_cache().insert(std::move(key), total);
  return total;
}

}  // namespace

std::vector<SymClass> sym_classes(int n) {
  std::vector<SymClass> out;
  for (auto& p : partitions(n)) {
    SymClass c;
    c.centralizer_order = centralizer_order(p);
    c.is_two_regular = all_parts_odd(p);
    c.sign = cycle_sign(p);
    c.cycle_type = std::move(p);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Partition> two_regular_classes(int n) {
  return enumerate({PartitionFamily::Kind::OddParts, n});
}

const BigInt& CharacterVector::at(const Partition& cycle_type) const {
  auto it = std::find(classes.begin(), classes.end(), cycle_type);
  if (it == classes.end())
    throw std::out_of_range("class " + to_text(cycle_type) + " not in character vector");
  return values(it - classes.begin());
}

BigInt character_value(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size())
    throw std::invalid_argument("character_value: |" + to_text(lambda) + "| != |" +
                                to_text(cycle_type) + "|");
  return mn_rec(lambda, cycle_type.parts(), 0);
}

CharacterVector character(const Partition& lambda) {
  CharacterVector chi;
  chi.n = lambda.size();
  chi.classes = partitions(chi.n);
  chi.values.resize(static_cast<Eigen::Index>(chi.classes.size()));
  for (std::size_t j = 0; j < chi.classes.size(); ++j)
    chi.values(static_cast<Eigen::Index>(j)) = character_value(lambda, chi.classes[j]);
  return chi;
}

CharacterTable character_table(int n, int n_max) {
  if (n < 0) throw std::invalid_argument("character_table: negative n");
  if (n > n_max)
    throw ResourceLimit("character table of S_" + std::to_string(n) + " exceeds n_max = " +
                        std::to_string(n_max));
  CharacterTable t;
  t.n = n;
  t.labels = partitions(n);
  t.classes = t.labels;
  const auto size = static_cast<Eigen::Index>(t.labels.size());
  t.values.resize(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j)
      t.values(i, j) = character_value(t.labels[static_cast<std::size_t>(i)],
                                       t.classes[static_cast<std::size_t>(j)]);
  return t;
}

CharacterVector restrict_two_regular(const CharacterVector& chi) {
  CharacterVector out;
  out.n = chi.n;
  std::vector<BigInt> kept;
  for (std::size_t j = 0; j < chi.classes.size(); ++j) {
    if (!all_parts_odd(chi.classes[j])) continue;
    out.classes.push_back(chi.classes[j]);
    kept.push_back(chi.values(static_cast<Eigen::Index>(j)));
  }
  out.values.resize(static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) out.values(static_cast<Eigen::Index>(j)) = kept[j];
  return out;
}

std::vector<TwoBlock> two_blocks(int n) {
  std::map<int, TwoBlock> by_weight;
  for (auto& p : partitions(n)) {
    TwoQuotientData q = two_quotient(p);
    TwoBlock& b = by_weight[q.weight];
    b.core = q.core;
    b.weight = q.weight;
    b.members.push_back(std::move(p));
  }
  std::vector<TwoBlock> out;
  for (auto& [w, b] : by_weight) out.push_back(std::move(b));
  return out;
}

Rational inner_product_over(const std::vector<Partition>& classes, const CharacterVector& alpha,
                            const CharacterVector& beta) {
  if (alpha.n != beta.n)
    throw std::invalid_argument("inner_product_over: characters of different groups");
  Rational sum = 0;
  for (const auto& c : classes) {
    const BigInt* a = nullptr;
    const BigInt* b = nullptr;
    try {
      a = &alpha.at(c);
      b = &beta.at(c);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("inner_product_over: unknown class " + to_text(c));
    }
    sum += Rational(*a * *b, centralizer_order(c));
  }
  sum.canonicalize();
  return sum;
}

}  // namespace charbasis
