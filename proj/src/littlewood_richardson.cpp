#include "charbasis/littlewood_richardson.hpp"

#include "charbasis/symmetric.hpp"

#include <stdexcept>

namespace charbasis {

namespace {

class SkewFiller {
 public:
  SkewFiller(const Partition& outer, const Partition& inner, const Partition& content)
      : outer_(outer), inner_(inner), content_(content),
        counts_(static_cast<std::size_t>(content.length()), 0) {
    for (int i = 0; i < outer.length(); ++i) {
      rows_.emplace_back(static_cast<std::size_t>(outer[static_cast<std::size_t>(i)]), 0);
      for (int j = outer[static_cast<std::size_t>(i)] - 1; j >= inner[static_cast<std::size_t>(i)]; --j)
        cells_.push_back({i, j});
    }
  }

  std::int64_t count() { return fill(0); }

 private:
  struct Cell {
    int row;
    int col;
  };

  std::int64_t fill(std::size_t idx) {
    if (idx == cells_.size()) return 1;
    const auto [i, j] = cells_[idx];
    const auto ui = static_cast<std::size_t>(i);
    const auto uj = static_cast<std::size_t>(j);
    int hi = content_.length();  // values are 1..hi
    if (j + 1 < outer_[ui]) hi = std::min(hi, rows_[ui][uj + 1]);
    int lo = 1;
    if (i > 0 && j >= inner_[ui - 1]) lo = rows_[ui - 1][uj] + 1;
    // In a lattice tableau row i holds only values <= i + 1.
    hi = std::min(hi, i + 1);

    std::int64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      const auto uv = static_cast<std::size_t>(v - 1);
      if (counts_[uv] >= content_[uv]) continue;
      if (v > 1 && counts_[uv] + 1 > counts_[uv - 1]) continue;
      ++counts_[uv];
      rows_[ui][uj] = v;
      total += fill(idx + 1);
      --counts_[uv];
    }
    rows_[ui][uj] = 0;
    return total;
  }

  const Partition& outer_;
  const Partition& inner_;
  const Partition& content_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> rows_;
  std::vector<Cell> cells_;
};

struct PartGroup {
  int length;
  int multiplicity;
};

std::vector<PartGroup> group_parts(const Partition& p) {
  std::vector<PartGroup> out;
  for (int k : p) {
    if (!out.empty() && out.back().length == k) ++out.back().multiplicity;
    else out.push_back({k, 1});
  }
  return out;
}

class YoungInduction {
 public:
  YoungInduction(const std::vector<Partition>& components, const Partition& cycle_type)
      : components_(components), groups_(group_parts(cycle_type)),
        remaining_(components.size()), pieces_(components.size()),
        shares_(groups_.size(), std::vector<int>(components.size(), 0)) {
    for (std::size_t i = 0; i < components.size(); ++i) remaining_[i] = components[i].size();
  }

  BigInt value() { return distribute(0, 0, groups_.empty() ? 0 : groups_[0].multiplicity); }

 private:
  // z_π / Π z_{ρ_i} reduces to Π_k a_k! / Π_i c_{ik}!, where c_{ik} is the
  // number of k-cycles handed to component i.
  BigInt leaf() {
    BigInt term = 1;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      if (remaining_[i] != 0) return 0;
      term *= character_value(components_[i], Partition::from_parts(pieces_[i]));
      if (term == 0) return 0;
    }
    for (std::size_t g = 0; g < groups_.size(); ++g) {
      BigInt weight = factorial(static_cast<unsigned>(groups_[g].multiplicity));
      for (int c : shares_[g]) weight /= factorial(static_cast<unsigned>(c));
      term *= weight;
    }
    return term;
  }

  // Hands `left` cycles of length groups_[g].length to components i, i+1, ...
  BigInt distribute(std::size_t g, std::size_t i, int left) {
    if (g == groups_.size()) return leaf();
    const int k = groups_[g].length;
    if (i + 1 == components_.size()) {
      if (left * k > remaining_[i]) return 0;
      return with_share(g, i, left, [&] {
        return distribute(g + 1, 0, g + 1 < groups_.size() ? groups_[g + 1].multiplicity : 0);
      });
    }
    BigInt total = 0;
    for (int c = 0; c <= left && c * k <= remaining_[i]; ++c)
      total += with_share(g, i, c, [&] { return distribute(g, i + 1, left - c); });
    return total;
  }

  template <typename Next>
  BigInt with_share(std::size_t g, std::size_t i, int c, Next&& next) {
    const int k = groups_[g].length;
    remaining_[i] -= c * k;
    shares_[g][i] = c;
    for (int t = 0; t < c; ++t) pieces_[i].push_back(k);
    BigInt sub = next();
    for (int t = 0; t < c; ++t) pieces_[i].pop_back();
    shares_[g][i] = 0;
    remaining_[i] += c * k;
    return sub;
  }

  const std::vector<Partition>& components_;
  std::vector<PartGroup> groups_;
  std::vector<int> remaining_;
  std::vector<std::vector<int>> pieces_;
  std::vector<std::vector<int>> shares_;
};

}  // namespace

std::int64_t lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
  if (mu.size() + nu.size() != lambda.size()) return 0;
  if (mu.length() > lambda.length() || nu.length() > lambda.length()) return 0;
  for (int i = 0; i < mu.length(); ++i)
    if (mu[static_cast<std::size_t>(i)] > lambda[static_cast<std::size_t>(i)]) return 0;
  return SkewFiller(lambda, mu, nu).count();
}

BigInt LRDecomposition::multiplicity(const Partition& lambda) const {
  auto it = terms.find(lambda);
  return it == terms.end() ? BigInt(0) : it->second;
}

LRDecomposition lr_product(const std::vector<Partition>& factors) {
  LRDecomposition acc;
  acc.sources = factors;
  acc.terms[Partition{}] = 1;
  int size = 0;
  for (const auto& f : factors) {
    size += f.size();
    std::map<Partition, BigInt> next;
    for (const auto& lambda : partitions(size)) {
      BigInt m = 0;
      for (const auto& [kappa, mult] : acc.terms) m += mult * lr_coefficient(kappa, f, lambda);
      if (m != 0) next.emplace(lambda, m);
    }
    acc.terms = std::move(next);
  }
  return acc;
}

LRDecomposition induced_square(const Partition& mu) { return lr_product({mu, mu}); }

BigInt evaluate(const LRDecomposition& decomposition, const Partition& cycle_type) {
  BigInt sum = 0;
  for (const auto& [lambda, mult] : decomposition.terms)
    sum += mult * character_value(lambda, cycle_type);
  return sum;
}

Partition doubled(const Partition& mu) {
  std::vector<int> parts(mu.begin(), mu.end());
  for (int& p : parts) p *= 2;
  return Partition(std::move(parts));
}

SquareInductionMatrix square_induction_matrix(int w) {
  SquareInductionMatrix out;
  out.order = partitions(w);
  const auto size = static_cast<Eigen::Index>(out.order.size());
  out.matrix.resize(size, size);
  for (Eigen::Index c = 0; c < size; ++c) {
    const Partition& mu = out.order[static_cast<std::size_t>(c)];
    for (Eigen::Index r = 0; r < size; ++r)
      out.matrix(r, c) = BigInt(static_cast<long>(
          lr_coefficient(mu, mu, doubled(out.order[static_cast<std::size_t>(r)]))));
  }
  out.lower_unitriangular = true;
  for (Eigen::Index r = 0; r < size; ++r)
    for (Eigen::Index c = r; c < size; ++c)
      if (out.matrix(r, c) != (r == c ? 1 : 0)) out.lower_unitriangular = false;
  return out;
}

BigInt young_induced_value(const std::vector<Partition>& components, const Partition& cycle_type) {
  int total = 0;
  for (const auto& c : components) total += c.size();
  if (total != cycle_type.size())
    throw std::invalid_argument("young_induced_value: component sizes do not add up to |π|");
  if (components.empty()) return 1;
  return YoungInduction(components, cycle_type).value();
}

}  // namespace charbasis
