#include "charbasis/lattice.hpp"

#include <stdexcept>

namespace charbasis {

IntegerMatrix rationalize_columns(const std::vector<std::vector<QuadValue>>& rows) {
  if (rows.empty()) return IntegerMatrix(0, 0);
  const std::size_t width = rows.front().size();
  std::vector<std::int64_t> radicand(width, 1);
  for (const auto& row : rows) {
    if (row.size() != width) throw std::invalid_argument("rationalize_columns: ragged input");
    for (std::size_t c = 0; c < width; ++c) {
      if (row[c].is_rational()) continue;
      if (radicand[c] != 1 && radicand[c] != row[c].delta())
        throw std::invalid_argument("rationalize_columns: column " + std::to_string(c) +
                                    " mixes radicands " + std::to_string(radicand[c]) + " and " +
                                    std::to_string(row[c].delta()));
      radicand[c] = row[c].delta();
    }
  }
  Eigen::Index cols = 0;
  for (auto d : radicand) cols += d == 1 ? 1 : 2;

  IntegerMatrix out(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Eigen::Index k = 0;
    for (std::size_t c = 0; c < width; ++c) {
      const auto ri = static_cast<Eigen::Index>(r);
      out(ri, k++) = rows[r][c].a();
      if (radicand[c] != 1) out(ri, k++) = rows[r][c].b();
    }
  }
  return out;
}

std::optional<Vector<Rational>> row_coordinates(const IntegerMatrix& basis, const IntegerVector& v) {
  const Eigen::Index k = basis.rows();
  const Eigen::Index m = basis.cols();
  if (v.size() != m) throw std::invalid_argument("row_coordinates: length mismatch");
  // Augmented system basis^T x = v, reduced over Q.
  Matrix<Rational> a(m, k + 1);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) a(i, j) = basis(j, i);
    a(i, k) = v(i);
  }
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < k && row < m; ++col) {
    Eigen::Index p = -1;
    for (Eigen::Index r = row; r < m; ++r)
      if (a(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) return std::nullopt;  // dependent rows in the basis
    a.row(p).swap(a.row(row));
    const Rational inv = 1 / a(row, col);
    for (Eigen::Index j = 0; j <= k; ++j) a(row, j) *= inv;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (Eigen::Index j = 0; j <= k; ++j) a(r, j) -= f * a(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  if (static_cast<Eigen::Index>(pivot_cols.size()) < k) return std::nullopt;
  for (Eigen::Index r = row; r < m; ++r)
    if (a(r, k) != 0) return std::nullopt;
  Vector<Rational> x(k);
  for (Eigen::Index j = 0; j < k; ++j) x(j) = a(j, k);
  return x;
}

}  // namespace charbasis
