#include "charbasis/wreath.hpp"

#include "charbasis/littlewood_richardson.hpp"

#include <map>
#include <stdexcept>

namespace charbasis {

int MultiPartition::total() const noexcept {
  int s = 0;
  for (const auto& c : components) s += c.size();
  return s;
}

namespace {

void multipartitions_rec(int ell, int left, std::vector<Partition>& prefix,
                         std::vector<MultiPartition>& out) {
  if (static_cast<int>(prefix.size()) + 1 == ell) {
    for (auto& p : partitions(left)) {
      prefix.push_back(std::move(p));
      out.push_back(MultiPartition{prefix});
      prefix.pop_back();
    }
    return;
  }
  for (int size = left; size >= 0; --size) {
    for (auto& p : partitions(size)) {
      prefix.push_back(std::move(p));
      multipartitions_rec(ell, left - size, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<MultiPartition> multipartitions(int ell, int w) {
  if (ell < 1 || w < 0) throw std::invalid_argument("multipartitions: need ell >= 1, w >= 0");
  std::vector<MultiPartition> out;
  std::vector<Partition> prefix;
  multipartitions_rec(ell, w, prefix, out);
  return out;
}

std::string to_text(const MultiPartition& m) {
  std::string s = "(";
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    if (i) s += '|';
    s += to_text(m.components[i]);
  }
  return s + ")";
}

BigInt wreath_centralizer_order(int ell, const MultiPartition& structure) {
  if (structure.ell() != ell)
    throw std::invalid_argument("wreath_centralizer_order: structure has wrong number of components");
  BigInt z = 1;
  for (const auto& comp : structure.components) {
    std::map<int, unsigned> mult;
    for (int k : comp) ++mult[k];
    for (auto [k, a] : mult) {
      BigInt base = ell * k;
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), a);
      z *= power * factorial(a);
    }
  }
  return z;
}

WreathClassData wreath_class(int ell, const MultiPartition& structure) {
  WreathClassData d;
  d.structure = structure;
  d.untwisted = true;
  for (std::size_t i = 1; i < structure.components.size(); ++i)
    if (!structure.components[i].empty()) d.untwisted = false;
  d.centralizer_order = wreath_centralizer_order(ell, structure);
  return d;
}

WreathCharacterLabel wreath_character(const MultiPartition& label) {
  WreathCharacterLabel out;
  out.label = label;
  out.degree = factorial(static_cast<unsigned>(label.total()));
  for (const auto& c : label.components)
    out.degree = out.degree / factorial(static_cast<unsigned>(c.size())) * standard_tableaux_count(c);
  return out;
}

BigInt untwisted_value(const MultiPartition& label, const Partition& cycle_type) {
  if (label.total() != cycle_type.size())
    throw std::invalid_argument("untwisted_value: label " + to_text(label) + " and class " +
                                to_text(cycle_type) + " have different sizes");
  return young_induced_value(label.components, cycle_type);
}

IntegerVector untwisted_values(const MultiPartition& label) {
  const auto classes = partitions(label.total());
  IntegerVector v(static_cast<Eigen::Index>(classes.size()));
  for (std::size_t j = 0; j < classes.size(); ++j)
    v(static_cast<Eigen::Index>(j)) = untwisted_value(label, classes[j]);
  return v;
}

MultiPartition untwisted_structure(const Partition& cycle_type, int ell) {
  if (ell < 1) throw std::invalid_argument("untwisted_structure: ell must be positive");
  MultiPartition m;
  m.components.assign(static_cast<std::size_t>(ell), Partition{});
  m.components[0] = cycle_type;
  return m;
}

MultiPartition conjugate_second(const MultiPartition& label) {
  if (label.ell() != 2) throw std::invalid_argument("conjugate_second: requires a bipartition");
  return bipartition(label.components[0], conjugate(label.components[1]));
}

Rational untwisted_inner_product(const IntegerVector& f, const IntegerVector& g, int w, int ell) {
  const auto classes = partitions(w);
  if (f.size() != static_cast<Eigen::Index>(classes.size()) || g.size() != f.size())
    throw std::invalid_argument("untwisted_inner_product: vectors must cover every partition of w");
  Rational sum = 0;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const auto idx = static_cast<Eigen::Index>(j);
    const MultiPartition structure = untwisted_structure(classes[j], ell);
    sum += Rational(f(idx) * g(idx), wreath_centralizer_order(ell, structure));
  }
  sum.canonicalize();
  return sum;
}

std::vector<WreathCharacterLabel> untwisted_basic_labels(int ell, int w) {
  std::vector<WreathCharacterLabel> out;
  for (auto& mu : partitions(w)) {
    MultiPartition label;
    label.components.push_back(std::move(mu));
    for (int i = 1; i < ell; ++i) label.components.emplace_back();
    out.push_back(wreath_character(label));
  }
  return out;
}

}  // namespace charbasis
