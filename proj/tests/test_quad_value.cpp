#include "charbasis/quad_value.hpp"

#include <doctest.h>

#include <cmath>

using namespace charbasis;

TEST_CASE("squarefree decomposition") {
  CHECK(squarefree_decomposition(12) == std::pair<std::int64_t, std::int64_t>{2, 3});
  CHECK(squarefree_decomposition(-3) == std::pair<std::int64_t, std::int64_t>{1, -3});
  CHECK(squarefree_decomposition(-45) == std::pair<std::int64_t, std::int64_t>{3, -5});
  CHECK(squarefree_decomposition(9) == std::pair<std::int64_t, std::int64_t>{3, 1});
  CHECK_THROWS(squarefree_decomposition(0));
}

TEST_CASE("normal form") {
  const auto v = QuadValue::with_radicand(1, 1, 9);  // (1 + 3)/2
  CHECK(v.is_integer());
  CHECK(v.integral() == 2);
  CHECK(QuadValue::with_radicand(-1, -1, 9).integral() == -2);
  const auto w = QuadValue::with_radicand(1, 1, 12);  // (1 + 2√3)/2
  CHECK(w.b() == 2);
  CHECK(w.delta() == 3);
  CHECK(QuadValue(4, 0, 5) == QuadValue::integer(2));
  CHECK(QuadValue(3, 0, 1).rational() == Rational(3, 2));
  CHECK_THROWS_AS(QuadValue(3, 0, 1).integral(), std::domain_error);
  CHECK_THROWS_AS(w.rational(), std::domain_error);
}

TEST_CASE("arithmetic and conjugation") {
  const auto omega = QuadValue::with_radicand(-1, 1, -3);
  const auto omega_bar = QuadValue::with_radicand(-1, -1, -3);
  CHECK(omega.conj() == omega_bar);
  CHECK(omega.galois() == omega_bar);
  CHECK((omega + omega_bar).integral() == -1);
  CHECK((omega - omega_bar) == QuadValue(0, 2, -3));
  const auto golden = QuadValue::with_radicand(1, 1, 5);
  CHECK(golden.conj() == golden);
  CHECK(golden.galois() == QuadValue::with_radicand(1, -1, 5));
  CHECK_THROWS_AS(omega + golden, std::domain_error);
  CHECK((omega + QuadValue::integer(1)) == QuadValue::with_radicand(1, 1, -3));
}

TEST_CASE("products") {
  const auto omega = QuadValue::with_radicand(-1, 1, -3);
  const QuadRational norm = omega * omega.conj();
  CHECK(norm.is_rational());
  CHECK(norm.r == 1);
  const QuadRational sq = omega * omega;  // ω² = ω̄
  CHECK(sq.r == Rational(-1, 2));
  CHECK(sq.s == Rational(-1, 2));
  CHECK(sq.delta == -3);
}

TEST_CASE("complex value and text") {
  const auto omega = QuadValue::with_radicand(-1, 1, -3);
  const auto z = omega.to_complex();
  CHECK(std::abs(z - std::polar(1.0, 2 * M_PI / 3)) < 1e-12);
  CHECK(to_text(omega) == "(-1+1*sqrt(-3))/2");
  CHECK(to_text(QuadValue::integer(-4)) == "-4");
  CHECK(to_text(QuadValue(3, 0, 1)) == "3/2");
}
