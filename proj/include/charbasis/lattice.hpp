#pragma once

// Exact integer lattice algebra over Eigen dense matrices: Hermite normal
// form, row-lattice equality, determinants, and the reduction of
// quadratic-valued class functions to integer matrices.
//
// The algorithms are templated on the scalar so that the same code runs
// over GMP integers (the default everywhere in the library) and over
// machine integers in small tests.

#include "charbasis/quad_value.hpp"
#include "charbasis/scalar.hpp"

#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

namespace charbasis {

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <typename T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
T floor_div(T a, T b) {
  T q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt abs_value(const BigInt& a) { return abs(a); }

template <typename T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
T abs_value(T a) {
  return a < 0 ? -a : a;
}

}  // namespace detail

/// Row-style Hermite normal form H together with a unimodular U such that
/// U * M = H. H keeps the shape of M; its zero rows sit at the bottom.
/// Nonzero rows are in echelon form with positive pivots, and every entry
/// above a pivot lies in [0, pivot).
template <typename Scalar>
struct HermiteDecomposition {
  Matrix<Scalar> form;
  Matrix<Scalar> transform;
  Eigen::Index rank = 0;
};

template <typename Derived>
HermiteDecomposition<typename Derived::Scalar> hermite_decomposition(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  HermiteDecomposition<Scalar> out;
  Matrix<Scalar>& h = out.form;
  Matrix<Scalar>& u = out.transform;
  h = m;
  u = Matrix<Scalar>::Identity(m.rows(), m.rows());

  Eigen::Index pivot = 0;
  for (Eigen::Index col = 0; col < h.cols() && pivot < h.rows(); ++col) {
    bool found = false;
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index r = pivot; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        if (best < 0 || detail::abs_value(h(r, col)) < detail::abs_value(h(best, col))) best = r;
      }
      if (best < 0) break;
      found = true;
      if (best != pivot) {
        h.row(best).swap(h.row(pivot));
        u.row(best).swap(u.row(pivot));
      }
      bool cleared = true;
      for (Eigen::Index r = pivot + 1; r < h.rows(); ++r) {
        if (h(r, col) == 0) continue;
        const Scalar q = detail::floor_div(Scalar(h(r, col)), Scalar(h(pivot, col)));
        h.row(r) -= q * h.row(pivot);
        u.row(r) -= q * u.row(pivot);
        if (h(r, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!found) continue;
    if (h(pivot, col) < 0) {
      h.row(pivot) = -h.row(pivot);
      u.row(pivot) = -u.row(pivot);
    }
    for (Eigen::Index r = 0; r < pivot; ++r) {
      const Scalar q = detail::floor_div(Scalar(h(r, col)), Scalar(h(pivot, col)));
      if (q == 0) continue;
      h.row(r) -= q * h.row(pivot);
      u.row(r) -= q * u.row(pivot);
    }
    ++pivot;
  }
  out.rank = pivot;
  return out;
}

/// The canonical basis of the row lattice: the nonzero rows of the HNF.
template <typename Derived>
Matrix<typename Derived::Scalar> hermite_normal_form(const Eigen::MatrixBase<Derived>& m) {
  auto d = hermite_decomposition(m);
  return d.form.topRows(d.rank);
}

template <typename Derived>
Eigen::Index lattice_rank(const Eigen::MatrixBase<Derived>& m) {
  return hermite_decomposition(m).rank;
}

/// True iff the rows of A and B generate the same subgroup of Z^cols.
template <typename DerivedA, typename DerivedB>
bool same_row_lattice(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.cols()) return false;
  const auto ha = hermite_normal_form(a);
  const auto hb = hermite_normal_form(b);
  return ha.rows() == hb.rows() && ha == hb;
}

template <typename DerivedA, typename DerivedB>
Matrix<typename DerivedA::Scalar> stack_rows(const Eigen::MatrixBase<DerivedA>& a,
                                             const Eigen::MatrixBase<DerivedB>& b) {
  Matrix<typename DerivedA::Scalar> out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

/// v ∈ rowspan_Z(B), decided as same_row_lattice(B, B ∪ {v}).
template <typename DerivedB, typename DerivedV>
bool in_row_lattice(const Eigen::MatrixBase<DerivedB>& basis, const Eigen::MatrixBase<DerivedV>& v) {
  return same_row_lattice(basis, stack_rows(basis, v));
}

/// Fraction-free (Bareiss) determinant of a square matrix.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = m;
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return Scalar(1);
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index r = k + 1; r < n; ++r)
        if (a(r, k) != 0) {
          swap = r;
          break;
        }
      if (swap < 0) return Scalar(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = Scalar((a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev);
    prev = a(k, k);
  }
  return Scalar(sign * a(n - 1, n - 1));
}

/// Square with determinant ±1.
template <typename Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  const auto d = determinant(m);
  return d == 1 || d == -1;
}

/// Rational coordinates x with x^T B = v^T, when v lies in the rational row
/// space of B and the rows of B are linearly independent; std::nullopt
/// otherwise.
std::optional<Vector<Rational>> row_coordinates(const IntegerMatrix& basis, const IntegerVector& v);

/// Integer image of quadratic-valued row vectors. Every value is scaled by
/// 2, so (a + b√Δ)/2 becomes a + b√Δ; a column whose entries carry a
/// radicand Δ != 1 becomes the two columns (a, b), any other column just
/// (a). The map is injective and Z-linear on rows, so row-lattice questions
/// transfer unchanged. Throws std::invalid_argument if a column mixes two
/// different radicands, or if rows have different lengths.
IntegerMatrix rationalize_columns(const std::vector<std::vector<QuadValue>>& rows);

}  // namespace charbasis
