#include "charbasis/alternating.hpp"
#include "oracles/groups.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace charbasis;

namespace {

std::vector<std::string> class_names(int n) {
  std::vector<std::string> out;
  for (const auto& c : alt_classes(n))
    out.push_back(to_text(c.cycle_type) + (c.tag == SplitTag::Plus ? "+" : c.tag == SplitTag::Minus ? "-" : ""));
  return out;
}

const AltCharacter& find(const std::vector<AltCharacter>& table, const AltLabel& label) {
  auto it = std::find_if(table.begin(), table.end(), [&](const AltCharacter& r) { return r.label == label; });
  REQUIRE(it != table.end());
  return *it;
}

}  // namespace

TEST_CASE("classes") {
  CHECK(class_names(3) == std::vector<std::string>{"3+", "3-", "1+1+1"});
  CHECK(class_names(4) == std::vector<std::string>{"3+1+", "3+1-", "2+2", "1+1+1+1"});
  const auto c5 = alt_classes(5);
  for (const auto& c : c5) {
    if (c.cycle_type == Partition{5}) CHECK(c.split);
    if (c.cycle_type == Partition({3, 1, 1})) CHECK_FALSE(c.split);
  }
  for (int n = 2; n <= 6; ++n) {
    const auto t = oracle::alternating_table(n);
    const auto classes = alt_classes(n);
    CHECK(classes.size() == t.classes.size());
    std::vector<std::size_t> seen;
    for (const auto& c : classes) {
      const auto rep = class_representative(c);
      CHECK(oracle::perm_sign(rep) == 1);
      const std::size_t idx = oracle::class_index(t, rep);
      seen.push_back(idx);
      CHECK(t.group_order / t.classes[idx].size == c.centralizer_order.get_si());
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
}

TEST_CASE("tables agree with explicit enumeration of A_n") {
  for (int n = 2; n <= 6; ++n) {
    const auto t = oracle::alternating_table(n);
    const auto table = alt_character_table(n);
    REQUIRE(table.size() == t.chars.size());
    std::vector<bool> used(t.chars.size(), false);
    for (const auto& rho : table) {
      std::vector<std::size_t> idx;
      for (const auto& c : rho.classes) idx.push_back(oracle::class_index(t, class_representative(c)));
      bool matched = false;
      for (std::size_t k = 0; k < t.chars.size() && !matched; ++k) {
        if (used[k]) continue;
        bool same = true;
        for (std::size_t j = 0; j < idx.size(); ++j)
          if (std::abs(rho.values[j].to_complex() - t.chars[k][idx[j]]) > 1e-8) same = false;
        if (same) used[k] = matched = true;
      }
      CHECK_MESSAGE(matched, "no enumerated character matches " << to_text(rho.label) << " for n = " << n);
    }
  }
}

TEST_CASE("surd values") {
  const auto omega = QuadValue::with_radicand(-1, 1, -3);
  const auto omega_bar = omega.conj();

  // A_3: the split pair labelled by (2,1).
  const auto a3 = alt_characters(Partition({2, 1}));
  REQUIRE(a3.size() == 2);
  CHECK(a3[0].at(alt_classes(3)[0]) == omega);
  CHECK(a3[0].at(alt_classes(3)[1]) == omega_bar);
  CHECK(a3[1].at(alt_classes(3)[0]) == omega_bar);

  // A_4: (2,2) has diagonal hooks (3,1), ε = -1, product 3.
  const auto a4 = alt_characters(Partition({2, 2}));
  REQUIRE(a4.size() == 2);
  const auto classes = alt_classes(4);
  CHECK(a4[0].at(classes[0]) == omega);
  CHECK(a4[0].at(classes[1]) == omega_bar);
  CHECK(a4[0].at(classes[2]) == QuadValue::integer(1));
  CHECK(a4[0].at(classes[3]) == QuadValue::integer(1));

  // A_5: (3,1,1) has hooks (5), ε = +1, so (1 ± √5)/2.
  const auto a5 = alt_characters(Partition({3, 1, 1}));
  CHECK(a5[0].at(alt_classes(5)[0]) == QuadValue::with_radicand(1, 1, 5));

  const auto rho = alt_characters(Partition({3, 1}));
  REQUIRE(rho.size() == 1);
  CHECK(rho[0].label == alt_label(Partition({2, 1, 1})));
  CHECK(rho[0].at(classes[3]).integral() == 3);
  for (const auto& v : rho[0].values) CHECK(v.is_integer());
}

TEST_CASE("labels") {
  CHECK(alt_label(Partition({3, 1})) == alt_label(Partition({2, 1, 1})));
  CHECK(to_text(alt_label(Partition({2, 2}), SplitTag::Plus)) == "2+2+");
  CHECK(to_text(alt_label(Partition({2, 2}), SplitTag::Minus)) == "2+2-");
}

TEST_CASE("orthonormality of the full tables") {
  for (int n = 2; n <= 9; ++n) {
    const auto table = alt_character_table(n);
    for (std::size_t i = 0; i < table.size(); ++i)
      for (std::size_t j = 0; j < table.size(); ++j) CHECK(inner_product(table[i], table[j]) == (i == j ? 1 : 0));
  }
  CHECK_THROWS_AS(alt_character_table(13), ResourceLimit);
}

TEST_CASE("character counts") {
  for (int n = 2; n <= 12; ++n) {
    const std::size_t s = enumerate({PartitionFamily::Kind::SelfConjugate, n}).size();
    const std::size_t p = partitions(n).size();
    CHECK(alt_character_table(n).size() == (p - s) / 2 + 2 * s);
    CHECK(alt_classes(n).size() == alt_character_table(n).size());
  }
}

TEST_CASE("induction back to S_n") {
  const auto table = alt_character_table(4);
  const auto ind = induce_to_symmetric(find(table, alt_label(Partition({3, 1}))));
  const IntegerVector expected = character(Partition({3, 1})).values + character(Partition({2, 1, 1})).values;
  CHECK(ind.values == expected);
  const auto plus = induce_to_symmetric(find(table, alt_label(Partition({2, 2}), SplitTag::Plus)));
  const auto minus = induce_to_symmetric(find(table, alt_label(Partition({2, 2}), SplitTag::Minus)));
  CHECK(plus.values == character(Partition({2, 2})).values);
  CHECK(minus.values == plus.values);
  for (int n = 2; n <= 8; ++n)
    for (const auto& rho : alt_character_table(n)) {
      const auto ind = induce_to_symmetric(rho);
      const BigInt degree = ind.values(ind.values.size() - 1);
      CHECK(degree == 2 * rho.values.back().integral());
    }
}

TEST_CASE("restriction from S_n") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& lambda : partitions(n)) {
      const auto res = restrict_to_alternating(character(lambda));
      const auto parts = alt_characters(lambda);
      for (std::size_t j = 0; j < res.classes.size(); ++j) {
        QuadValue sum = parts[0].values[j];
        if (parts.size() == 2) sum = sum + parts[1].values[j];
        CHECK(res.values[j] == sum);
      }
    }
}

TEST_CASE("2-regular restriction keeps split tags") {
  const auto table = alt_character_table(4);
  const auto r = restrict_two_regular(table.front());
  std::vector<std::string> names;
  for (const auto& c : r.classes)
    names.push_back(to_text(c.cycle_type) + (c.tag == SplitTag::Plus ? "+" : c.tag == SplitTag::Minus ? "-" : ""));
  CHECK(names == std::vector<std::string>{"3+1+", "3+1-", "1+1+1+1"});
  CHECK(restrict_two_regular(alt_character_table(3).front()).classes.size() == 3);
  for (const auto& c : restrict_two_regular(alt_character_table(6).front()).classes)
    CHECK(c.cycle_type != Partition({2, 2, 1, 1}));
}
