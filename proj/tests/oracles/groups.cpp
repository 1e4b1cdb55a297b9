#include "oracles/groups.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace oracle {

NumericTable alternating_table(int n) {
  std::vector<Perm> group;
  for (auto& p : all_permutations(n))
    if (perm_sign(p) == 1) group.push_back(std::move(p));
  NumericTable t;
  t.group_order = static_cast<std::int64_t>(group.size());

  std::map<Perm, std::size_t> class_of;
  std::vector<std::vector<Perm>> members;
  for (const auto& g : group) {
    if (class_of.count(g)) continue;
    std::set<Perm> orbit;
    for (const auto& x : group) orbit.insert(compose(compose(x, g), inverse(x)));
    const std::size_t idx = members.size();
    members.emplace_back(orbit.begin(), orbit.end());
    for (const auto& y : orbit) class_of[y] = idx;
    t.classes.push_back({g, cycle_type_of(g), static_cast<std::int64_t>(orbit.size())});
  }
  // all_permutations starts with the identity, so classes[0] is {1}.
  const std::size_t k = t.classes.size();

  // a[j][l][m] = #{x in C_j : x^{-1} z_m in C_l} for a fixed z_m in C_m,
  // so that C_j C_l = Σ_m a[j][l][m] C_m.
  std::vector<Eigen::MatrixXd> mult(k, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t m = 0; m < k; ++m) {
      const Perm& z = t.classes[m].representative;
      for (const auto& x : members[j]) {
        const std::size_t l = class_of.at(compose(inverse(x), z));
        mult[j](static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(m)) += 1.0;
      }
    }
  // The central character ω satisfies ω_j ω_l = Σ_m a[j][l][m] ω_m, i.e.
  // ω is an eigenvector of each matrix M_j with (M_j)_{l,m} = a[j][l][m].
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> coeff(0.5, 1.5);
  Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t j = 0; j < k; ++j) combo += coeff(rng) * mult[j];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<std::complex<double>>());
  const Eigen::MatrixXcd vecs = solver.eigenvectors();
  for (Eigen::Index c = 0; c < vecs.cols(); ++c) {
    Eigen::VectorXcd omega = vecs.col(c) / vecs(0, c);
    double norm = 0;
    for (std::size_t m = 0; m < k; ++m)
      norm += std::norm(omega(static_cast<Eigen::Index>(m))) / static_cast<double>(t.classes[m].size);
    const double degree = std::sqrt(static_cast<double>(t.group_order) / norm);
    std::vector<std::complex<double>> chi(k);
    for (std::size_t m = 0; m < k; ++m)
      chi[m] = degree * omega(static_cast<Eigen::Index>(m)) / static_cast<double>(t.classes[m].size);
    t.chars.push_back(std::move(chi));
  }
  return t;
}

std::size_t class_index(const NumericTable& table, const Perm& g) {
  const int n = static_cast<int>(g.size());
  for (std::size_t i = 0; i < table.classes.size(); ++i) {
    const Perm& r = table.classes[i].representative;
    if (cycle_type_of(r) != cycle_type_of(g)) continue;
    for (auto& x : all_permutations(n))
      if (perm_sign(x) == 1 && compose(compose(x, r), inverse(x)) == g) return i;
  }
  throw std::logic_error("class_index: element not found");
}

WreathGroup::WreathGroup(int w) : w_(w) {
  for (const auto& p : all_permutations(w))
    for (int mask = 0; mask < (1 << w); ++mask) {
      SignedPerm g(static_cast<std::size_t>(w));
      for (int i = 0; i < w; ++i) g[static_cast<std::size_t>(i)] = ((mask >> i) & 1 ? -1 : 1) * (p[static_cast<std::size_t>(i)] + 1);
      elements_.push_back(std::move(g));
    }
}

SignedPerm WreathGroup::compose(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int j = std::abs(b[i]) - 1;
    const int s = b[i] > 0 ? 1 : -1;
    out[i] = s * a[static_cast<std::size_t>(j)];
  }
  return out;
}

SignedPerm WreathGroup::inverse(const SignedPerm& a) {
  SignedPerm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int j = std::abs(a[i]) - 1;
    out[static_cast<std::size_t>(j)] = (a[i] > 0 ? 1 : -1) * static_cast<int>(i + 1);
  }
  return out;
}

SignedPerm WreathGroup::untwisted_representative(const Parts& cycle_type) const {
  SignedPerm g(static_cast<std::size_t>(w_));
  int start = 0;
  for (int k : cycle_type) {
    for (int i = 0; i < k; ++i) g[static_cast<std::size_t>(start + i)] = start + (i + 1) % k + 1;
    start += k;
  }
  return g;
}

bool WreathGroup::is_untwisted(const SignedPerm& g) {
  std::vector<bool> seen(g.size(), false);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (seen[i]) continue;
    int product = 1;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(std::abs(g[j]) - 1)) {
      seen[j] = true;
      product *= g[j] > 0 ? 1 : -1;
    }
    if (product != 1) return false;
  }
  return true;
}

Parts WreathGroup::underlying_cycle_type(const SignedPerm& g) {
  Perm p(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) p[i] = std::abs(g[i]) - 1;
  return cycle_type_of(p);
}

std::int64_t WreathGroup::induced_value(const Parts& first, const Parts& second, const SignedPerm& g) const {
  const int a = std::accumulate(first.begin(), first.end(), 0);
  const int b = std::accumulate(second.begin(), second.end(), 0);
  if (a + b != w_) throw std::invalid_argument("induced_value: sizes do not add up");
  const auto table_a = permutation_module_table(a);
  const auto table_b = permutation_module_table(b);

  // ψ on the inertia subgroup; zero outside it.
  auto psi = [&](const SignedPerm& x) -> std::int64_t {
    Perm pa(static_cast<std::size_t>(a)), pb(static_cast<std::size_t>(b));
    int phi = 1;
    for (int i = 0; i < w_; ++i) {
      const int j = std::abs(x[static_cast<std::size_t>(i)]) - 1;
      if ((i < a) != (j < a)) return 0;
      if (i < a) pa[static_cast<std::size_t>(i)] = j;
      else {
        pb[static_cast<std::size_t>(i - a)] = j - a;
        if (x[static_cast<std::size_t>(i)] < 0) phi = -phi;
      }
    }
    const std::int64_t ca = a == 0 ? 1 : table_a.at(first).at(cycle_type_of(pa));
    const std::int64_t cb = b == 0 ? 1 : table_b.at(second).at(cycle_type_of(pb));
    return phi * ca * cb;
  };

  std::int64_t inertia = 0, sum = 0;
  for (const auto& x : elements_) {
    bool inside = true;
    for (int i = 0; i < w_; ++i)
      if ((i < a) != (std::abs(x[static_cast<std::size_t>(i)]) - 1 < a)) inside = false;
    if (inside) ++inertia;
    sum += psi(compose(compose(x, g), inverse(x)));
  }
  if (sum % inertia != 0) throw std::logic_error("induced_value: non-integral value");
  return sum / inertia;
}

std::int64_t WreathGroup::centralizer_order(const SignedPerm& g) const {
  std::int64_t count = 0;
  for (const auto& x : elements_)
    if (compose(x, g) == compose(g, x)) ++count;
  return count;
}

}  // namespace oracle
