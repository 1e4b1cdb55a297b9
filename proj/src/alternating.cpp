#include "charbasis/alternating.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace charbasis {

namespace {

bool splits(const Partition& cycle_type) {
  return cycle_type.size() >= 2 && all_parts_odd(cycle_type) && has_distinct_parts(cycle_type);
}

AltClass make_class(const Partition& type, SplitTag tag) {
  AltClass c;
  c.cycle_type = type;
  c.split = tag != SplitTag::None;
  c.tag = tag;
  c.centralizer_order = centralizer_order(type);
  if (!c.split) c.centralizer_order /= 2;
  c.is_two_regular = all_parts_odd(type);
  return c;
}

AltClassFunction restrict_values(const CharacterVector& chi, std::vector<AltClass> classes) {
  AltClassFunction f;
  f.n = chi.n;
  f.classes = std::move(classes);
  for (const auto& c : f.classes) f.values.push_back(QuadValue::integer(chi.at(c.cycle_type)));
  return f;
}

}  // namespace

std::vector<AltClass> alt_classes(int n) {
  if (n < 2) throw std::invalid_argument("alt_classes: n must be at least 2");
  std::vector<AltClass> out;
  for (const auto& p : partitions(n)) {
    if (cycle_sign(p) != 1) continue;
    if (splits(p)) {
      out.push_back(make_class(p, SplitTag::Plus));
      out.push_back(make_class(p, SplitTag::Minus));
    } else {
      out.push_back(make_class(p, SplitTag::None));
    }
  }
  return out;
}

std::vector<int> class_representative(const AltClass& cls) {
  const int n = cls.cycle_type.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  int start = 0;
  for (int len : cls.cycle_type) {
    for (int i = 0; i < len; ++i)
      perm[static_cast<std::size_t>(start + i)] = start + (i + 1) % len;
    start += len;
  }
  if (cls.tag == SplitTag::Minus) {
    // t ∘ perm ∘ t with t = (0 1)
    auto t = [](int x) { return x == 0 ? 1 : x == 1 ? 0 : x; };
    std::vector<int> conj(perm.size());
    for (int x = 0; x < n; ++x) conj[static_cast<std::size_t>(t(x))] = t(perm[static_cast<std::size_t>(x)]);
    perm = std::move(conj);
  }
  return perm;
}

const QuadValue& AltClassFunction::at(const AltClass& cls) const {
  auto it = std::find(classes.begin(), classes.end(), cls);
  if (it == classes.end()) throw std::out_of_range("class not in A_n class function");
  return values[static_cast<std::size_t>(it - classes.begin())];
}

AltLabel alt_label(const Partition& lambda, SplitTag tag) {
  const Partition conj = conjugate(lambda);
  if (conj == lambda) {
    if (tag == SplitTag::None)
      throw std::invalid_argument("alt_label: self-conjugate partition needs a ± tag");
    return {lambda, tag == SplitTag::Plus ? AltLabel::Kind::SplitPlus : AltLabel::Kind::SplitMinus};
  }
  if (tag != SplitTag::None)
    throw std::invalid_argument("alt_label: only self-conjugate partitions split");
  return {std::min(lambda, conj), AltLabel::Kind::NonSplit};
}

std::string to_text(const AltLabel& label) {
  switch (label.kind) {
    case AltLabel::Kind::SplitPlus: return to_text(label.partition) + "+";
    case AltLabel::Kind::SplitMinus: return to_text(label.partition) + "-";
    case AltLabel::Kind::NonSplit: break;
  }
  return to_text(label.partition);
}

std::vector<AltCharacter> alt_characters(const Partition& lambda) {
  const int n = lambda.size();
  const CharacterVector chi = character(lambda);
  AltClassFunction res = restrict_values(chi, alt_classes(n));

  if (!is_self_conjugate(lambda)) {
    AltCharacter rho;
    static_cast<AltClassFunction&>(rho) = std::move(res);
    rho.label = alt_label(lambda);
    return {std::move(rho)};
  }

  const Partition hooks = diagonal_hooks(lambda);
  const int eps = ((n - hooks.length()) / 2) % 2 == 0 ? 1 : -1;
  std::int64_t radicand = eps;
  for (int h : hooks) radicand *= h;
  const QuadValue s_plus_t = QuadValue::with_radicand(eps, 1, radicand);
  const QuadValue s_minus_t = QuadValue::with_radicand(eps, -1, radicand);

  AltCharacter plus, minus;
  plus.n = minus.n = n;
  plus.classes = minus.classes = res.classes;
  plus.label = alt_label(lambda, SplitTag::Plus);
  minus.label = alt_label(lambda, SplitTag::Minus);
  for (std::size_t j = 0; j < res.classes.size(); ++j) {
    const AltClass& c = res.classes[j];
    if (c.cycle_type == hooks) {
      const bool on_plus = c.tag == SplitTag::Plus;
      plus.values.push_back(on_plus ? s_plus_t : s_minus_t);
      minus.values.push_back(on_plus ? s_minus_t : s_plus_t);
    } else {
      // Half of χ_λ; (2χ + 0√Δ)/2 halves to (χ + 0√Δ)/2.
      QuadValue half(res.values[j].a() / 2, 0, 1);
      plus.values.push_back(half);
      minus.values.push_back(half);
    }
  }
  return {std::move(plus), std::move(minus)};
}

std::vector<AltCharacter> alt_character_table(int n, int n_max) {
  if (n > n_max)
    throw ResourceLimit("character table of A_" + std::to_string(n) + " exceeds n_max = " +
                        std::to_string(n_max));
  std::vector<AltCharacter> out;
  for (const auto& lambda : partitions(n)) {
    const Partition conj = conjugate(lambda);
    if (conj != lambda && conj < lambda) continue;
    for (auto& rho : alt_characters(lambda)) out.push_back(std::move(rho));
  }
  std::sort(out.begin(), out.end(),
            [](const AltCharacter& x, const AltCharacter& y) { return x.label < y.label; });
  return out;
}

AltClassFunction restrict_to_alternating(const CharacterVector& chi) {
  return restrict_values(chi, alt_classes(chi.n));
}

CharacterVector induce_to_symmetric(const AltClassFunction& f) {
  CharacterVector out;
  out.n = f.n;
  const std::vector<AltClass> all = alt_classes(f.n);
  const bool complete = std::all_of(all.begin(), all.end(), [&](const AltClass& c) {
    return std::find(f.classes.begin(), f.classes.end(), c) != f.classes.end();
  });
  std::vector<BigInt> values;
  for (const auto& type : partitions(f.n)) {
    if (cycle_sign(type) != 1) {
      if (complete) {
        out.classes.push_back(type);
        values.emplace_back(0);
      }
      continue;
    }
    QuadValue sum;
    bool present = true;
    for (const auto& c : all) {
      if (c.cycle_type != type) continue;
      auto it = std::find(f.classes.begin(), f.classes.end(), c);
      if (it == f.classes.end()) {
        present = false;
        break;
      }
      const QuadValue& v = f.values[static_cast<std::size_t>(it - f.classes.begin())];
      // |C_{S_n}(x)| / |C_{A_n}(x)| is 2 for a non-split class, 1 for each half of a split one.
      sum += c.split ? v : v + v;
    }
    if (!present) continue;
    out.classes.push_back(type);
    values.push_back(sum.integral());
  }
  out.values.resize(static_cast<Eigen::Index>(values.size()));
  for (std::size_t j = 0; j < values.size(); ++j) out.values(static_cast<Eigen::Index>(j)) = values[j];
  return out;
}

AltClassFunction restrict_two_regular(const AltClassFunction& f) {
  AltClassFunction out;
  out.n = f.n;
  for (std::size_t j = 0; j < f.classes.size(); ++j) {
    if (!f.classes[j].is_two_regular) continue;
    out.classes.push_back(f.classes[j]);
    out.values.push_back(f.values[j]);
  }
  return out;
}

AltCharacter restrict_two_regular(const AltCharacter& rho) {
  AltCharacter out;
  static_cast<AltClassFunction&>(out) = restrict_two_regular(static_cast<const AltClassFunction&>(rho));
  out.label = rho.label;
  return out;
}

Rational inner_product(const AltClassFunction& alpha, const AltClassFunction& beta) {
  Rational rational_part = 0;
  std::map<std::int64_t, Rational> surds;
  for (std::size_t j = 0; j < alpha.classes.size(); ++j) {
    const QuadValue* b = nullptr;
    try {
      b = &beta.at(alpha.classes[j]);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("inner_product: class missing from second argument");
    }
    QuadRational p = alpha.values[j] * b->conj();
    const Rational weight(1, alpha.classes[j].centralizer_order);
    rational_part += p.r * weight;
    if (!p.is_rational()) surds[p.delta] += p.s * weight;
  }
  for (auto& [d, s] : surds)
    if (s != 0) throw std::domain_error("inner_product: irrational result");
  rational_part.canonicalize();
  return rational_part;
}

}  // namespace charbasis
