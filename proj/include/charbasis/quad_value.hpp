#pragma once

// Exact values in a quadratic field, as taken by the split characters of
// the alternating groups.

#include "charbasis/scalar.hpp"

#include <complex>
#include <cstdint>
#include <string>

namespace charbasis {

/// Splits r = s^2 * d with d squarefree and s > 0. Throws for r = 0.
std::pair<std::int64_t, std::int64_t> squarefree_decomposition(std::int64_t r);

/// The number (a + b√Δ)/2 with Δ squarefree and nonzero.
///
/// Normal form: when b = 0 the radicand is 1; when Δ = 1 the surd is folded
/// into a. Two values combine additively only if their radicands agree or
/// one of them is rational; anything else throws std::domain_error.
class QuadValue {
 public:
  QuadValue() = default;
  QuadValue(BigInt a, BigInt b, std::int64_t delta);

  /// (a + b√r)/2 for any nonzero r; square factors of r move into b.
  static QuadValue with_radicand(BigInt a, BigInt b, std::int64_t r);
  static QuadValue integer(const BigInt& v) { return QuadValue(2 * v, 0, 1); }

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  std::int64_t delta() const noexcept { return delta_; }

  bool is_rational() const noexcept { return b_ == 0; }
  bool is_integer() const noexcept { return b_ == 0 && mpz_even_p(a_.get_mpz_t()); }
  /// Throws std::domain_error when irrational.
  Rational rational() const;
  /// Throws std::domain_error unless the value is an integer.
  BigInt integral() const;

  /// Complex conjugate: flips the surd when Δ < 0.
  QuadValue conj() const;
  /// Galois conjugate: always flips the surd.
  QuadValue galois() const;

  std::complex<double> to_complex() const;

  QuadValue operator-() const { return QuadValue(-a_, -b_, delta_); }
  QuadValue& operator+=(const QuadValue& o);
  QuadValue& operator-=(const QuadValue& o) { return *this += -o; }
  friend QuadValue operator+(QuadValue x, const QuadValue& y) { return x += y; }
  friend QuadValue operator-(QuadValue x, const QuadValue& y) { return x -= y; }

  bool operator==(const QuadValue& o) const {
    return a_ == o.a_ && b_ == o.b_ && delta_ == o.delta_;
  }

 private:
  BigInt a_ = 0;
  BigInt b_ = 0;
  std::int64_t delta_ = 1;
};

/// r + s√Δ with rational r, s: the exact product of two QuadValues.
struct QuadRational {
  Rational r = 0;
  Rational s = 0;
  std::int64_t delta = 1;

  bool is_rational() const { return s == 0; }
};

/// Exact product; throws std::domain_error for incompatible radicands.
QuadRational operator*(const QuadValue& x, const QuadValue& y);

/// "a", "a/2", "(a+b*sqrt(D))/2" style text.
std::string to_text(const QuadValue& v);

}  // namespace charbasis
