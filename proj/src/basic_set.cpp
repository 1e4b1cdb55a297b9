#include "charbasis/basic_set.hpp"

#include "charbasis/lattice.hpp"
#include "charbasis/littlewood_richardson.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

namespace charbasis {

namespace {

using json = nlohmann::json;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

json texts(const std::vector<Partition>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(to_text(p));
  return out;
}

IntegerMatrix rows_on_classes(const std::vector<Partition>& labels,
                              const std::vector<Partition>& classes) {
  IntegerMatrix m(static_cast<Eigen::Index>(labels.size()), static_cast<Eigen::Index>(classes.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < classes.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = character_value(labels[i], classes[j]);
  return m;
}

IntegerMatrix select_rows(const IntegerMatrix& m, const std::vector<std::size_t>& idx) {
  IntegerMatrix out(static_cast<Eigen::Index>(idx.size()), m.cols());
  for (std::size_t i = 0; i < idx.size(); ++i)
    out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(idx[i]));
  return out;
}

// Cardinality, independence and lattice equality of `basis` (rows of `full`
// picked by `chosen`) inside the row lattice of `full`. Also solves each
// remaining row as a combination of the basis; integrality of those
// coordinates must agree with the Hermite-form verdict.
bool check_lattice_basis(const IntegerMatrix& full, const std::vector<std::size_t>& chosen,
                         const std::vector<std::string>& labels, Eigen::Index expected_size,
                         json& witnesses) {
  const IntegerMatrix basis = select_rows(full, chosen);
  const Eigen::Index full_rank = lattice_rank(full);
  const Eigen::Index basis_rank = lattice_rank(basis);
  const bool cardinality = basis.rows() == expected_size;
  const bool independent = basis_rank == basis.rows();
  const bool spans = same_row_lattice(full, basis);

  json coefficients = json::object();
  bool integral = independent;
  if (independent) {
    std::set<std::size_t> in_basis(chosen.begin(), chosen.end());
    for (Eigen::Index r = 0; r < full.rows(); ++r) {
      if (in_basis.count(static_cast<std::size_t>(r))) continue;
      auto x = row_coordinates(basis, full.row(r).transpose());
      json coords = json::array();
      if (!x) {
        integral = false;
        continue;
      }
      for (Eigen::Index k = 0; k < x->size(); ++k) {
        const Rational& q = (*x)(k);
        if (q.get_den() != 1) integral = false;
        coords.push_back(to_json(q));
      }
      coefficients[labels[static_cast<std::size_t>(r)]] = std::move(coords);
    }
  }

  witnesses["hnf_rank"] = full_rank;
  witnesses["basis_rank"] = basis_rank;
  witnesses["cardinality_ok"] = cardinality;
  witnesses["independent"] = independent;
  witnesses["spans"] = spans;
  witnesses["integral_coordinates"] = integral;
  witnesses["coefficients"] = std::move(coefficients);
  if (!spans) {
    for (Eigen::Index r = 0; r < full.rows(); ++r)
      if (!in_row_lattice(basis, full.row(r))) {
        witnesses["outside_lattice"] = labels[static_cast<std::size_t>(r)];
        break;
      }
  }
  return cardinality && independent && spans && integral == spans;
}

void require_at_most(int value, int bound, const std::string& what) {
  if (value > bound)
    throw ResourceLimit(what + " = " + std::to_string(value) + " exceeds the configured bound " +
                        std::to_string(bound));
}

}  // namespace

QuotientMembership classify_quotient(const PartitionPair& quotient) {
  QuotientMembership m;
  m.quotient = quotient;
  if (conjugate(quotient.first) == quotient.second) {
    m.member = true;
    m.branch = QuotientBranch::ConjugatePair;
  } else if (quotient.second.empty() && !all_parts_even(quotient.first)) {
    m.member = true;
    m.branch = QuotientBranch::SingleComponent;
  }
  return m;
}

std::string to_string(QuotientBranch branch) {
  switch (branch) {
    case QuotientBranch::SingleComponent: return "single-component";
    case QuotientBranch::ConjugatePair: return "conjugate-pair";
    case QuotientBranch::Outside: break;
  }
  return "outside";
}

std::vector<Partition> symmetric_basic_set(int n) {
  std::vector<Partition> out;
  for (auto& p : partitions(n))
    if (classify_quotient(two_quotient(p).quotient).member) out.push_back(std::move(p));
  return out;
}

std::vector<AltLabel> restrict_to_alternating(const std::vector<Partition>& basic_set, int n) {
  std::set<AltLabel> labels;
  for (const auto& lambda : basic_set) {
    if (lambda.size() != n)
      throw std::invalid_argument("restrict_to_alternating: " + to_text(lambda) + " is not a partition of " +
                                  std::to_string(n));
    if (is_self_conjugate(lambda)) {
      labels.insert(alt_label(lambda, SplitTag::Plus));
      labels.insert(alt_label(lambda, SplitTag::Minus));
    } else {
      labels.insert(alt_label(lambda));
    }
  }
  return {labels.begin(), labels.end()};
}

std::vector<AltLabel> alternating_basic_set(int n) {
  return restrict_to_alternating(symmetric_basic_set(n), n);
}

VerificationReport verify_symmetric_basic_set(int n, const Limits& limits) {
  require_at_most(n, limits.sym_n_max, "n");
  Stopwatch timer;
  VerificationReport report;
  report.claim = "basic-set-sn";
  report.params = {{"n", n}};

  const auto labels = partitions(n);
  const auto classes = two_regular_classes(n);
  const auto basis = symmetric_basic_set(n);
  const IntegerMatrix full = rows_on_classes(labels, classes);

  std::vector<std::size_t> chosen;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    names.push_back(to_text(labels[i]));
    if (std::find(basis.begin(), basis.end(), labels[i]) != basis.end()) chosen.push_back(i);
  }

  report.witnesses["counts"] = {{"characters", labels.size()},
                                {"two_regular_classes", classes.size()},
                                {"basic_set", basis.size()}};
  report.witnesses["basic_set"] = texts(basis);
  report.passed = check_lattice_basis(full, chosen, names, static_cast<Eigen::Index>(classes.size()),
                                      report.witnesses);
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

VerificationReport verify_candidate_basic_set(int n, const std::vector<Partition>& candidate,
                                              const Limits& limits) {
  require_at_most(n, limits.sym_n_max, "n");
  Stopwatch timer;
  VerificationReport report;
  report.claim = "candidate-basic-set-sn";
  report.params = {{"n", n}};

  const auto labels = partitions(n);
  const auto classes = two_regular_classes(n);
  std::vector<std::size_t> chosen;
  std::vector<std::string> names;
  for (const auto& p : candidate)
    if (p.size() != n)
      throw std::invalid_argument("verify_candidate_basic_set: " + to_text(p) + " is not a partition of " +
                                  std::to_string(n));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    names.push_back(to_text(labels[i]));
    if (std::find(candidate.begin(), candidate.end(), labels[i]) != candidate.end()) chosen.push_back(i);
  }
  std::vector<Partition> members;
  for (auto i : chosen) members.push_back(labels[i]);
  report.params["candidate"] = texts(members);
  report.witnesses["counts"] = {{"characters", labels.size()},
                                {"two_regular_classes", classes.size()},
                                {"basic_set", chosen.size()}};
  report.passed = check_lattice_basis(rows_on_classes(labels, classes), chosen, names,
                                      static_cast<Eigen::Index>(classes.size()), report.witnesses);
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

VerificationReport verify_alternating_basic_set(int n, const Limits& limits) {
  if (n < 2) throw std::invalid_argument("verify_alternating_basic_set: n must be at least 2");
  require_at_most(n, limits.alt_n_max, "n");
  Stopwatch timer;
  VerificationReport report;
  report.claim = "basic-set-an";
  report.params = {{"n", n}};

  const auto basis_sn = symmetric_basic_set(n);
  std::vector<Partition> missing;
  for (const auto& p : enumerate({PartitionFamily::Kind::SelfConjugate, n}))
    if (std::find(basis_sn.begin(), basis_sn.end(), p) == basis_sn.end()) missing.push_back(p);
  const bool hypothesis = missing.empty();
  report.witnesses["hypothesis"] = hypothesis;
  report.witnesses["missing_self_conjugate"] = texts(missing);

  const auto table = alt_character_table(n, limits.alt_n_max);
  const auto basis = restrict_to_alternating(basis_sn, n);
  std::vector<std::vector<QuadValue>> rows;
  std::vector<std::size_t> chosen;
  std::vector<std::string> names;
  std::size_t two_regular = 0;
  std::size_t split_columns = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const AltClassFunction reg = restrict_two_regular(static_cast<const AltClassFunction&>(table[i]));
    if (i == 0) {
      two_regular = reg.classes.size();
      for (const auto& c : reg.classes) split_columns += c.split ? 1 : 0;
    }
    rows.push_back(reg.values);
    names.push_back(to_text(table[i].label));
    if (std::find(basis.begin(), basis.end(), table[i].label) != basis.end()) chosen.push_back(i);
  }
  const IntegerMatrix full = rationalize_columns(rows);

  const std::size_t odd = enumerate({PartitionFamily::Kind::OddParts, n}).size();
  const std::size_t distinct_odd = count_distinct_odd(n);
  json basis_names = json::array();
  for (const auto& l : basis) basis_names.push_back(to_text(l));
  report.witnesses["basic_set"] = std::move(basis_names);
  report.witnesses["counts"] = {{"characters", table.size()},
                                {"two_regular_classes", two_regular},
                                {"split_two_regular_classes", split_columns},
                                {"rational_columns", full.cols()},
                                {"odd_part_partitions", odd},
                                {"distinct_odd_part_partitions", distinct_odd},
                                {"basic_set", basis.size()}};

  const bool lattice = check_lattice_basis(full, chosen, names, static_cast<Eigen::Index>(two_regular),
                                           report.witnesses);
  const bool counting = basis.size() == odd + distinct_odd;
  report.witnesses["counting_identity"] = counting;
  report.witnesses["failure"] = !hypothesis ? "hypothesis" : !lattice ? "lattice" : !counting ? "counting" : "";
  report.passed = hypothesis && lattice && counting;
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

DoubledBasis doubled_basis(int w) {
  if (w < 1) throw std::invalid_argument("doubled_basis: w must be positive");
  DoubledBasis out;
  out.w = w;
  const auto columns = partitions(2 * w);
  std::vector<IntegerVector> rows;
  for (const auto& mu : partitions(w)) {
    const LRDecomposition d = induced_square(mu);
    IntegerVector row(static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) row(static_cast<Eigen::Index>(j)) = d.multiplicity(columns[j]);
    rows.push_back(std::move(row));
    out.labels.push_back("square:" + to_text(mu));
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (all_parts_even(columns[j])) continue;
    IntegerVector row = IntegerVector::Zero(static_cast<Eigen::Index>(columns.size()));
    row(static_cast<Eigen::Index>(j)) = 1;
    rows.push_back(std::move(row));
    out.labels.push_back("chi:" + to_text(columns[j]));
  }
  out.rows.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) out.rows.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return out;
}

VerificationReport verify_doubled_basis(int w, const Limits& limits) {
  require_at_most(w, limits.w_max, "w");
  Stopwatch timer;
  VerificationReport report;
  report.claim = "z-basis-doubled";
  report.params = {{"w", w}};

  const DoubledBasis b = doubled_basis(w);
  const bool square = b.rows.rows() == b.rows.cols();
  bool hnf_identity = false;
  BigInt det = 0;
  if (square) {
    const IntegerMatrix h = hermite_normal_form(b.rows);
    hnf_identity = h.rows() == b.rows.rows() && h == IntegerMatrix::Identity(h.rows(), h.cols());
    det = determinant(b.rows);
  }
  const SquareInductionMatrix p = square_induction_matrix(w);
  json pm = json::array();
  for (Eigen::Index r = 0; r < p.matrix.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < p.matrix.cols(); ++c) row.push_back(to_json(p.matrix(r, c)));
    pm.push_back(std::move(row));
  }

  report.witnesses["counts"] = {{"size", b.rows.rows()}, {"characters", b.rows.cols()}};
  report.witnesses["labels"] = b.labels;
  report.witnesses["hnf_identity"] = hnf_identity;
  report.witnesses["determinant"] = to_json(det);
  report.witnesses["square_induction_matrix"] = std::move(pm);
  report.witnesses["square_induction_order"] = texts(p.order);
  report.witnesses["lower_unitriangular"] = p.lower_unitriangular;
  report.passed = square && hnf_identity && (det == 1 || det == -1) && p.lower_unitriangular;
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

SignSolution solve_gram_signs(const std::vector<std::vector<Rational>>& target,
                              const std::vector<std::vector<Rational>>& source) {
  const std::size_t b = source.size();
  if (target.size() != b) throw std::invalid_argument("solve_gram_signs: size mismatch");
  SignSolution out;
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      const bool agree = target[i][j] == source[i][j] || (i != j && target[i][j] == -source[i][j]);
      if (!agree) {
        out.cycle = i == j ? std::vector<std::size_t>{i} : std::vector<std::size_t>{i, j};
        return out;
      }
    }

  // Breadth-first propagation; a contradiction closes an odd cycle made of
  // the two tree paths back to their common ancestor and the edge (i, j).
  std::vector<int> sign(b, 0);
  std::vector<std::size_t> parent(b, 0);
  for (std::size_t root = 0; root < b; ++root) {
    if (sign[root] != 0) continue;
    sign[root] = 1;
    parent[root] = root;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t i = queue[head];
      for (std::size_t j = 0; j < b; ++j) {
        if (i == j || source[i][j] == 0) continue;
        const int rel = target[i][j] == source[i][j] ? 1 : -1;
        if (sign[j] == 0) {
          sign[j] = rel * sign[i];
          parent[j] = i;
          queue.push_back(j);
        } else if (sign[j] != rel * sign[i]) {
          std::vector<std::size_t> up_i{i}, up_j{j};
          while (parent[up_i.back()] != up_i.back()) up_i.push_back(parent[up_i.back()]);
          while (parent[up_j.back()] != up_j.back()) up_j.push_back(parent[up_j.back()]);
          while (up_i.size() > 1 && up_j.size() > 1 && up_i[up_i.size() - 2] == up_j[up_j.size() - 2]) {
            up_i.pop_back();
            up_j.pop_back();
          }
          out.cycle = up_i;
          for (auto it = up_j.rbegin() + 1; it != up_j.rend(); ++it) out.cycle.push_back(*it);
          return out;
        }
      }
    }
  }
  out.found = true;
  out.signs = std::move(sign);
  return out;
}

VerificationReport verify_perfect_isometry(const TwoBlock& block, const Limits& limits) {
  const int n = block.core.size() + 2 * block.weight;
  require_at_most(n, limits.sym_n_max, "n");
  Stopwatch timer;
  VerificationReport report;
  report.claim = "perfect-isometry";
  report.params = {{"n", n}, {"core", to_text(block.core)}, {"weight", block.weight}};

  if (block.weight == 0) {
    report.witnesses["note"] = "weight-zero block: a single character, nothing to compare";
    report.passed = block.members.size() == 1;
    report.runtime_ms = timer.elapsed_ms();
    return report;
  }

  const auto classes = two_regular_classes(n);
  const std::size_t b = block.members.size();
  std::vector<CharacterVector> chars;
  std::vector<IntegerVector> thetas;
  json images = json::object();
  for (const auto& lambda : block.members) {
    chars.push_back(restrict_two_regular(character(lambda)));
    const TwoQuotientData q = two_quotient(lambda);
    const MultiPartition image = conjugate_second(bipartition(q.quotient.first, q.quotient.second));
    images[to_text(lambda)] = to_text(image);
    thetas.push_back(untwisted_values(image));
  }

  std::vector<std::vector<Rational>> gs(b, std::vector<Rational>(b)), gw(b, std::vector<Rational>(b));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = i; j < b; ++j) {
      gs[i][j] = gs[j][i] = inner_product_over(classes, chars[i], chars[j]);
      gw[i][j] = gw[j][i] = untwisted_inner_product(thetas[i], thetas[j], block.weight, 2);
    }

  auto name = [&](std::size_t i) { return to_text(block.members[i]); };
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (gw[i][j] != 0) ++nonzero;
  const SignSolution solution = solve_gram_signs(gs, gw);
  const bool ok = solution.found;
  json failing = nullptr;
  if (!ok) {
    json cycle = json::array();
    for (auto v : solution.cycle) cycle.push_back(name(v));
    const std::size_t i = solution.cycle.front(), j = solution.cycle.size() > 1 ? solution.cycle[1] : i;
    failing = {{"pair", {name(i), name(j)}},
               {"cycle", std::move(cycle)},
               {"two_regular", gs[i][j].get_str()},
               {"untwisted", gw[i][j].get_str()}};
  }
  const std::vector<int>& sign = solution.signs;
  bool exact = ok;
  for (std::size_t i = 0; i < b && exact; ++i)
    for (std::size_t j = 0; j < b && exact; ++j)
      if (gs[i][j] != Rational(sign[i] * sign[j]) * gw[i][j]) exact = false;

  json signs = json::object();
  if (ok)
    for (std::size_t i = 0; i < b; ++i) signs[name(i)] = sign[i];
  report.witnesses["counts"] = {{"characters", b}, {"nonzero_entries", nonzero}};
  report.witnesses["images"] = std::move(images);
  report.witnesses["signs"] = std::move(signs);
  if (!failing.is_null()) report.witnesses["failing_pair"] = std::move(failing);
  report.passed = ok && exact;
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

VerificationReport verify_untwisted_basic_set(int w, UntwistedVariant variant, const Limits& limits) {
  if (w < 1) throw std::invalid_argument("verify_untwisted_basic_set: w must be positive");
  const bool mixed = variant == UntwistedVariant::Mixed;
  const int group_w = mixed ? 2 * w : w;
  if (mixed) require_at_most(w, limits.w_max, "w");
  else require_at_most(group_w, 2 * limits.w_max, "w");
  Stopwatch timer;
  VerificationReport report;
  report.claim = "untwisted-basic-set";
  report.params = {{"w", w}, {"variant", mixed ? "mixed" : "kernel"}, {"group_weight", group_w}};

  const auto classes = partitions(group_w);
  const auto labels = multipartitions(2, group_w);
  IntegerMatrix full(static_cast<Eigen::Index>(labels.size()), static_cast<Eigen::Index>(classes.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    full.row(static_cast<Eigen::Index>(i)) = untwisted_values(labels[i]).transpose();
    names.push_back(to_text(labels[i]));
  }

  // The basis vectors are built by the direct formulas and then located
  // among the rows computed through the general induction formula.
  std::vector<MultiPartition> chosen_labels;
  std::vector<IntegerVector> direct;
  if (mixed) {
    for (const auto& mu : partitions(w)) {
      chosen_labels.push_back(bipartition(mu, mu));
      const LRDecomposition square = induced_square(mu);
      IntegerVector v(static_cast<Eigen::Index>(classes.size()));
      for (std::size_t j = 0; j < classes.size(); ++j) v(static_cast<Eigen::Index>(j)) = evaluate(square, classes[j]);
      direct.push_back(std::move(v));
    }
  }
  for (const auto& lambda : classes) {
    if (mixed && all_parts_even(lambda)) continue;
    chosen_labels.push_back(bipartition(lambda, {}));
    IntegerVector v(static_cast<Eigen::Index>(classes.size()));
    for (std::size_t j = 0; j < classes.size(); ++j) v(static_cast<Eigen::Index>(j)) = character_value(lambda, classes[j]);
    direct.push_back(std::move(v));
  }

  std::vector<std::size_t> chosen;
  bool values_match = true;
  for (std::size_t k = 0; k < chosen_labels.size(); ++k) {
    const auto it = std::find(labels.begin(), labels.end(), chosen_labels[k]);
    const auto idx = static_cast<std::size_t>(it - labels.begin());
    chosen.push_back(idx);
    if (full.row(static_cast<Eigen::Index>(idx)).transpose() != direct[k]) values_match = false;
  }
  std::sort(chosen.begin(), chosen.end());

  json basis_names = json::array();
  for (const auto& l : chosen_labels) basis_names.push_back(to_text(l));
  report.witnesses["basic_set"] = std::move(basis_names);
  report.witnesses["counts"] = {{"characters", labels.size()}, {"untwisted_classes", classes.size()},
                                {"basic_set", chosen.size()}};
  report.witnesses["direct_values_match"] = values_match;
  const bool lattice = check_lattice_basis(full, chosen, names, static_cast<Eigen::Index>(classes.size()),
                                           report.witnesses);
  report.witnesses.erase("coefficients");  // large and redundant with the lattice verdict here
  report.passed = lattice && values_match;
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

VerificationReport verify_basic_set_theorem(int n, const Limits& limits) {
  require_at_most(n, limits.sym_n_max, "n");
  if (n >= 2) require_at_most(n, limits.alt_n_max, "n");
  Stopwatch timer;
  VerificationReport report;
  report.claim = "basic-set-theorem";
  report.params = {{"n", n}};

  const auto basis = symmetric_basic_set(n);
  auto in_basis = [&](const Partition& p) { return std::find(basis.begin(), basis.end(), p) != basis.end(); };

  bool passed = true;
  report.subreports.push_back(verify_symmetric_basic_set(n, limits));
  if (n >= 2) report.subreports.push_back(verify_alternating_basic_set(n, limits));
  for (const auto& r : report.subreports) passed = passed && r.passed;

  bool hypothesis = true;
  for (const auto& p : enumerate({PartitionFamily::Kind::SelfConjugate, n}))
    if (!in_basis(p)) hypothesis = false;
  report.witnesses["self_conjugate_contained"] = hypothesis;
  passed = passed && hypothesis;

  const auto classes = two_regular_classes(n);
  std::vector<Partition> union_of_blocks;
  for (const auto& block : two_blocks(n)) {
    VerificationReport br;
    br.claim = "block-basic-set";
    br.params = {{"n", n}, {"core", to_text(block.core)}, {"weight", block.weight}};
    Stopwatch block_timer;

    std::vector<Partition> chosen_members;
    std::vector<std::size_t> chosen;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < block.members.size(); ++i) {
      names.push_back(to_text(block.members[i]));
      if (in_basis(block.members[i])) {
        chosen.push_back(i);
        chosen_members.push_back(block.members[i]);
      }
    }
    union_of_blocks.insert(union_of_blocks.end(), chosen_members.begin(), chosen_members.end());

    bool ok = true;
    json shapes = json::object();
    if (block.weight == 0) {
      br.witnesses["branch"] = "weight-zero";
      ok = block.members.size() == 1 && is_self_conjugate(block.members[0]) && chosen.size() == 1;
    } else {
      const bool odd = block.weight % 2 == 1;
      br.witnesses["branch"] = odd ? "odd-weight" : "even-weight";
      for (const auto& lambda : chosen_members) {
        const TwoQuotientData q = two_quotient(lambda);
        const QuotientMembership m = classify_quotient(q.quotient);
        shapes[to_text(lambda)] = to_string(m.branch);
        if (odd && m.branch != QuotientBranch::SingleComponent) ok = false;
        if (!odd && m.branch == QuotientBranch::ConjugatePair &&
            2 * q.quotient.first.size() != block.weight)
          ok = false;
      }
      for (const auto& lambda : block.members)
        if (is_self_conjugate(lambda) && !in_basis(lambda)) ok = false;

      const IntegerMatrix full = rows_on_classes(block.members, classes);
      const Eigen::Index block_rank = lattice_rank(full);
      ok = check_lattice_basis(full, chosen, names, block_rank, br.witnesses) && ok;
      br.witnesses.erase("coefficients");

      VerificationReport wreath =
          odd ? verify_untwisted_basic_set(block.weight, UntwistedVariant::KernelCharacters, limits)
              : verify_untwisted_basic_set(block.weight / 2, UntwistedVariant::Mixed, limits);
      ok = ok && wreath.passed;
      br.subreports.push_back(std::move(wreath));
    }
    br.witnesses["members"] = texts(block.members);
    br.witnesses["basic_set"] = texts(chosen_members);
    br.witnesses["quotient_branches"] = std::move(shapes);
    br.passed = ok;
    br.runtime_ms = block_timer.elapsed_ms();
    passed = passed && ok;
    report.subreports.push_back(std::move(br));
  }

  std::sort(union_of_blocks.begin(), union_of_blocks.end(), std::greater<>());
  const bool consistent = union_of_blocks == basis;
  report.witnesses["blocks_partition_basic_set"] = consistent;
  report.witnesses["counts"] = {{"basic_set", basis.size()}, {"two_regular_classes", classes.size()}};
  report.passed = passed && consistent;
  report.runtime_ms = timer.elapsed_ms();
  return report;
}

}  // namespace charbasis
