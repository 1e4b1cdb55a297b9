#include "charbasis/quad_value.hpp"

#include <cmath>
#include <stdexcept>

namespace charbasis {

std::pair<std::int64_t, std::int64_t> squarefree_decomposition(std::int64_t r) {
  if (r == 0) throw std::invalid_argument("squarefree_decomposition: zero");
  std::int64_t sign = r < 0 ? -1 : 1;
  std::int64_t m = r < 0 ? -r : r;
  std::int64_t s = 1;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      s *= p;
    }
  }
  return {s, sign * m};
}

namespace {

void check_squarefree(std::int64_t delta) {
  if (delta == 0) throw std::invalid_argument("QuadValue: zero radicand");
  if (squarefree_decomposition(delta).first != 1)
    throw std::invalid_argument("QuadValue: radicand " + std::to_string(delta) + " not squarefree");
}

}  // namespace

QuadValue::QuadValue(BigInt a, BigInt b, std::int64_t delta)
    : a_(std::move(a)), b_(std::move(b)), delta_(delta) {
  check_squarefree(delta_);
  if (delta_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) delta_ = 1;
}

QuadValue QuadValue::with_radicand(BigInt a, BigInt b, std::int64_t r) {
  auto [s, d] = squarefree_decomposition(r);
  return QuadValue(std::move(a), b * BigInt(static_cast<long>(s)), d);
}

Rational QuadValue::rational() const {
  if (!is_rational()) throw std::domain_error("QuadValue: value is irrational");
  Rational q(a_, 2);
  q.canonicalize();
  return q;
}

BigInt QuadValue::integral() const {
  if (!is_integer()) throw std::domain_error("QuadValue: value " + to_text(*this) + " is not an integer");
  return a_ / 2;
}

QuadValue QuadValue::conj() const { return delta_ < 0 ? galois() : *this; }

QuadValue QuadValue::galois() const {
  QuadValue v = *this;
  v.b_ = -v.b_;
  return v;
}

std::complex<double> QuadValue::to_complex() const {
  const double a = a_.get_d() / 2.0;
  const double b = b_.get_d() / 2.0;
  const double root = std::sqrt(std::abs(static_cast<double>(delta_)));
  if (delta_ < 0) return {a, b * root};
  return {a + b * root, 0.0};
}

QuadValue& QuadValue::operator+=(const QuadValue& o) {
  if (!is_rational() && !o.is_rational() && delta_ != o.delta_)
    throw std::domain_error("QuadValue: incompatible radicands " + std::to_string(delta_) +
                            " and " + std::to_string(o.delta_));
  const std::int64_t d = is_rational() ? o.delta_ : delta_;
  *this = QuadValue(a_ + o.a_, b_ + o.b_, d);
  return *this;
}

QuadRational operator*(const QuadValue& x, const QuadValue& y) {
  if (!x.is_rational() && !y.is_rational() && x.delta() != y.delta())
    throw std::domain_error("QuadValue: incompatible radicands in product");
  const std::int64_t d = x.is_rational() ? y.delta() : x.delta();
  QuadRational out;
  out.delta = d;
  out.r = Rational(x.a() * y.a() + x.b() * y.b() * BigInt(static_cast<long>(d)), 4);
  out.s = Rational(x.a() * y.b() + x.b() * y.a(), 4);
  out.r.canonicalize();
  out.s.canonicalize();
  if (out.s == 0) out.delta = 1;
  return out;
}

std::string to_text(const QuadValue& v) {
  if (v.is_rational()) return v.rational().get_str();
  return "(" + v.a().get_str() + (v.b() < 0 ? "-" : "+") + BigInt(abs(v.b())).get_str() +
         "*sqrt(" + std::to_string(v.delta()) + "))/2";
}

}  // namespace charbasis
