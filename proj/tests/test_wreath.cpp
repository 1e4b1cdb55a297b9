#include "charbasis/littlewood_richardson.hpp"
#include "charbasis/symmetric.hpp"
#include "charbasis/wreath.hpp"
#include "oracles/groups.hpp"

#include <doctest.h>

#include <random>

using namespace charbasis;

TEST_CASE("multipartitions") {
  const auto m = multipartitions(2, 2);
  REQUIRE(m.size() == 5);
  CHECK(m.front() == bipartition(Partition{2}, {}));
  CHECK(m.back() == bipartition({}, Partition({1, 1})));
  CHECK(to_text(bipartition(Partition({2, 1}), {})) == "(2+1|0)");
  CHECK(multipartitions(3, 2).size() == 9);
  CHECK(multipartitions(2, 0).size() == 1);
  for (int w = 0; w <= 6; ++w) {
    std::size_t expected = 0;
    for (int a = 0; a <= w; ++a) expected += partitions(a).size() * partitions(w - a).size();
    CHECK(multipartitions(2, w).size() == expected);
  }
}

TEST_CASE("check map") {
  CHECK(conjugate_second(bipartition(Partition({2, 1}), {})) == bipartition(Partition({2, 1}), {}));
  CHECK(conjugate_second(bipartition({}, Partition{2})) == bipartition({}, Partition({1, 1})));
  for (const auto& m : multipartitions(2, 4)) CHECK(conjugate_second(conjugate_second(m)) == m);
  CHECK_THROWS(conjugate_second(MultiPartition{{Partition{1}, {}, {}}}));
}

TEST_CASE("character degrees") {
  CHECK(wreath_character(bipartition(Partition{1}, Partition{1})).degree == 2);
  CHECK(wreath_character(bipartition(Partition({2, 1}), Partition{1})).degree == 8);
  for (int w = 1; w <= 5; ++w) {
    BigInt sum = 0;
    for (const auto& m : multipartitions(2, w)) {
      const BigInt d = wreath_character(m).degree;
      sum += d * d;
    }
    CHECK(sum == (BigInt(1) << w) * factorial(static_cast<unsigned>(w)));
  }
}

TEST_CASE("values on untwisted classes: small cases") {
  CHECK(untwisted_value(bipartition({}, Partition{1}), Partition{1}) == 1);
  for (int w = 1; w <= 5; ++w)
    for (const auto& pi : partitions(w)) CHECK(untwisted_value(bipartition(Partition{w}, {}), pi) == 1);
  CHECK(untwisted_value(bipartition(Partition{1}, Partition{1}), Partition({1, 1})) == 2);
  CHECK(untwisted_value(bipartition(Partition{1}, Partition{1}), Partition{2}) == 0);
  const auto v = untwisted_values(bipartition(Partition({1, 1}), {}));
  CHECK(v == (IntegerVector(2) << -1, 1).finished());  // classes (2), (1,1)
  CHECK_THROWS_AS(untwisted_value(bipartition(Partition{1}, {}), Partition{2}), std::invalid_argument);
}

TEST_CASE("kernel characters reproduce the S_w table") {
  for (int w = 1; w <= 6; ++w) {
    const auto labels = untwisted_basic_labels(2, w);
    CHECK(labels.size() == partitions(w).size());
    const auto table = character_table(w);
    for (std::size_t i = 0; i < labels.size(); ++i)
      CHECK(untwisted_values(labels[i].label).transpose() == table.values.row(static_cast<Eigen::Index>(i)));
  }
}

TEST_CASE("values agree with Clifford induction in an explicit Z_2 wr S_w") {
  for (int w = 1; w <= 4; ++w) {
    const oracle::WreathGroup group(w);
    for (const auto& m : multipartitions(2, w))
      for (const auto& pi : partitions(w)) {
        const auto g = group.untwisted_representative(pi.parts());
        REQUIRE(oracle::WreathGroup::is_untwisted(g));
        CHECK(untwisted_value(m, pi) == group.induced_value(m[0].parts(), m[1].parts(), g));
      }
  }
}

TEST_CASE("centralizers of untwisted classes") {
  for (int w = 1; w <= 4; ++w) {
    const oracle::WreathGroup group(w);
    for (const auto& pi : partitions(w)) {
      const auto g = group.untwisted_representative(pi.parts());
      const auto brute = group.centralizer_order(g);
      CHECK(wreath_centralizer_order(2, untwisted_structure(pi, 2)) == brute);
      CHECK(wreath_class(2, untwisted_structure(pi, 2)).centralizer_order == brute);
      BigInt two_len = BigInt(1) << pi.length();
      CHECK(brute == two_len * centralizer_order(pi));
    }
  }
}

TEST_CASE("inner products over untwisted classes") {
  // w = 1: a single class with centralizer 2.
  CHECK(untwisted_inner_product(untwisted_values(bipartition(Partition{1}, {})),
                                untwisted_values(bipartition({}, Partition{1})), 1, 2) == Rational(1, 2));

  // Brute force: (1/|G|) Σ over the untwisted elements.
  for (int w = 1; w <= 4; ++w) {
    const oracle::WreathGroup group(w);
    std::map<oracle::Parts, std::int64_t> count;
    for (const auto& g : group.elements())
      if (oracle::WreathGroup::is_untwisted(g)) ++count[oracle::WreathGroup::underlying_cycle_type(g)];
    const auto classes = partitions(w);
    const auto order = static_cast<long>(group.elements().size());
    for (const auto& a : multipartitions(2, w))
      for (const auto& b : multipartitions(2, w)) {
        const auto fa = untwisted_values(a);
        const auto fb = untwisted_values(b);
        Rational brute = 0;
        for (std::size_t j = 0; j < classes.size(); ++j) {
          const auto idx = static_cast<Eigen::Index>(j);
          Rational term(fa(idx) * fb(idx) * count.at(classes[j].parts()), order);
          term.canonicalize();
          brute += term;
        }
        CHECK(untwisted_inner_product(fa, fb, w, 2) == brute);
      }
  }

  // Bilinearity on random integer vectors.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    IntegerVector f(5), f2(5), g(5);
    for (int i = 0; i < 5; ++i) {
      f(i) = d(rng);
      f2(i) = d(rng);
      g(i) = d(rng);
    }
    const IntegerVector sum = f + f2;
    CHECK(untwisted_inner_product(sum, g, 4, 2) ==
          untwisted_inner_product(f, g, 4, 2) + untwisted_inner_product(f2, g, 4, 2));
  }
  CHECK_THROWS_AS(untwisted_inner_product(IntegerVector::Ones(2), IntegerVector::Ones(3), 3, 2), std::invalid_argument);
}

TEST_CASE("values agree with the Littlewood-Richardson expansion") {
  for (int w = 1; w <= 8; ++w)
    for (const auto& m : multipartitions(2, w)) {
      const auto d = lr_product({m[0], m[1]});
      for (const auto& pi : partitions(w)) CHECK(untwisted_value(m, pi) == evaluate(d, pi));
    }
}

TEST_CASE("generic ell") {
  // Z_3 wr S_2: (1|1|0) induces the regular character of S_2 on untwisted classes.
  const MultiPartition m{{Partition{1}, Partition{1}, {}}};
  CHECK(untwisted_value(m, Partition({1, 1})) == 2);
  CHECK(untwisted_value(m, Partition{2}) == 0);
  CHECK(wreath_centralizer_order(3, untwisted_structure(Partition{2}, 3)) == 6);
  CHECK(untwisted_basic_labels(3, 3).size() == 3);
}
