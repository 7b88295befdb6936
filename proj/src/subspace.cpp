#include "curlie/subspace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "curlie/errors.hpp"

namespace curlie {

namespace {

constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);

void scale_to_unit_lead(SparseRow& row) {
  Rational inv = 1 / row.front().value;
  for (auto& e : row) e.value *= inv;
}

}  // namespace

Echelon row_reduce(std::vector<SparseRow> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_of_col(cols, kNoPivot);
  std::vector<SparseRow> pivots;
  for (auto& row : rows) {
    while (!row.empty()) {
      std::size_t lead = row.front().col;
      std::size_t p = pivot_of_col[lead];
      if (p == kNoPivot) break;
      Rational factor = -row.front().value;
      add_scaled(row, factor, pivots[p]);
    }
    if (row.empty()) continue;
    scale_to_unit_lead(row);
    pivot_of_col[row.front().col] = pivots.size();
    pivots.push_back(std::move(row));
  }

  std::sort(pivots.begin(), pivots.end(),
            [](const SparseRow& a, const SparseRow& b) { return a.front().col < b.front().col; });
  std::fill(pivot_of_col.begin(), pivot_of_col.end(), kNoPivot);
  for (std::size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i].front().col] = i;

  // Back substitution, last pivot first, so every row used for elimination
  // is already free of other pivot columns.
  for (std::size_t i = pivots.size(); i-- > 0;) {
    std::vector<std::pair<std::size_t, Rational>> targets;
    for (std::size_t k = 1; k < pivots[i].size(); ++k) {
      std::size_t p = pivot_of_col[pivots[i][k].col];
      if (p != kNoPivot) targets.emplace_back(p, pivots[i][k].value);
    }
    for (auto& [p, value] : targets) add_scaled(pivots[i], -value, pivots[p]);
  }

  Echelon out;
  out.pivots.reserve(pivots.size());
  for (const auto& row : pivots) out.pivots.push_back(row.front().col);
  out.rows = std::move(pivots);
  return out;
}

Subspace Subspace::span(std::size_t ambient, std::vector<SparseRow> vectors) {
  for (const auto& v : vectors) {
    if (!v.empty() && v.back().col >= ambient) throw AmbientMismatch("vector exceeds ambient dimension");
  }
  Echelon e = row_reduce(std::move(vectors), ambient);
  Subspace s(ambient);
  s.vectors_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  std::vector<SparseRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw AmbientMismatch("vector length differs from ambient dimension");
    rows.push_back(to_sparse(v));
  }
  return span(ambient, std::move(rows));
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.vectors_.push_back({{i, Rational(1)}});
    s.pivots_.push_back(i);
  }
  return s;
}

Matrix Subspace::basis() const {
  Matrix m(dim(), ambient_);
  for (std::size_t k = 0; k < vectors_.size(); ++k) m.set_row(k, vectors_[k]);
  return m.transpose();
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector length differs from ambient dimension");
  Vector out = v;
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    Rational c = out[pivots_[k]];
    if (is_zero(c)) continue;
    for (const auto& e : vectors_[k]) out[e.col] -= c * e.value;
  }
  return out;
}

SparseRow Subspace::reduce(SparseRow v) const {
  for (std::size_t k = 0; k < vectors_.size(); ++k) {
    auto it = std::lower_bound(v.begin(), v.end(), pivots_[k],
                               [](const Entry& e, std::size_t col) { return e.col < col; });
    if (it == v.end() || it->col != pivots_[k]) continue;
    Rational c = -it->value;
    add_scaled(v, c, vectors_[k]);
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.vectors_.begin(), other.vectors_.end(),
                     [this](const SparseRow& v) { return reduce(v).empty(); });
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw NotASubspace("vector is not in the subspace");
  Vector coords(dim());
  for (std::size_t k = 0; k < dim(); ++k) coords[k] = v[pivots_[k]];
  return coords;
}

std::size_t rank(const Matrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return row_reduce(std::move(rows), m.cols()).pivots.size();
}

Subspace kernel_basis(const Matrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  Echelon e = row_reduce(std::move(rows), m.cols());

  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t p : e.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> slot(m.cols(), kNoPivot);
  std::vector<SparseRow> null_vectors;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    slot[c] = null_vectors.size();
    null_vectors.push_back({});
  }
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    for (const auto& entry : e.rows[k]) {
      if (is_pivot[entry.col]) continue;
      null_vectors[slot[entry.col]].push_back({e.pivots[k], -entry.value});
    }
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    auto& v = null_vectors[slot[c]];
    v.push_back({c, Rational(1)});
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  }
  Subspace k = Subspace::span(m.cols(), std::move(null_vectors));
  if (k.dim() + e.pivots.size() != m.cols()) throw std::logic_error("rank-nullity violated");
  return k;
}

Subspace image_basis(const Matrix& m) {
  Matrix t = m.transpose();
  std::vector<SparseRow> rows;
  rows.reserve(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) rows.push_back(t.row(r));
  return Subspace::span(m.rows(), std::move(rows));
}

std::optional<Vector> solve(const Matrix& m, const Vector& rhs) {
  if (rhs.size() != m.rows()) throw LengthMismatch("right-hand side length differs from row count");
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    SparseRow row = m.row(r);
    if (!is_zero(rhs[r])) row.push_back({m.cols(), rhs[r]});
    rows.push_back(std::move(row));
  }
  Echelon e = row_reduce(std::move(rows), m.cols() + 1);
  Vector x = zero_vector(m.cols());
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    const auto& last = e.rows[k].back();
    if (last.col == m.cols()) x[e.pivots[k]] = last.value;
  }
  return x;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw LengthMismatch("determinant of a non-square matrix");
  std::size_t n = m.rows();
  std::vector<Vector> a(n);
  for (std::size_t r = 0; r < n; ++r) a[r] = m.dense_row(r);
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(a[r][c])) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

bool Quotient::same_coset(const Vector& a, const Vector& b) const { return sub_.contains(a - b); }

Vector Quotient::coordinates(const Vector& v) const {
  Vector r = sub_.reduce(v);
  Vector coords(complement_.dim());
  for (std::size_t k = 0; k < complement_.dim(); ++k) coords[k] = r[complement_.pivots()[k]];
  if (!complement_.contains(r)) throw NotASubspace("vector does not lie in the quotient's total space");
  return coords;
}

Vector Quotient::lift(const Vector& coords) const {
  if (coords.size() != complement_.dim()) throw LengthMismatch("coordinate vector length differs from quotient dimension");
  Vector v = zero_vector(complement_.ambient_dim());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (is_zero(coords[k])) continue;
    for (const auto& e : complement_.vectors()[k]) v[e.col] += coords[k] * e.value;
  }
  return v;
}

Matrix Quotient::coordinate_matrix(const Matrix& m) const {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  Matrix t = m.transpose();
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(coordinates(t.dense_row(c)));
  return Matrix::from_columns(cols, dim());
}

Quotient quotient_data(const Subspace& sub, const Subspace& total) {
  if (sub.ambient_dim() != total.ambient_dim() || !total.contains(sub)) {
    throw NotASubspace("quotient requires sub ⊆ total");
  }
  std::vector<SparseRow> reduced;
  reduced.reserve(total.dim());
  for (const auto& t : total.vectors()) reduced.push_back(sub.reduce(t));
  Subspace complement = Subspace::span(total.ambient_dim(), std::move(reduced));
  if (complement.dim() + sub.dim() != total.dim()) throw std::logic_error("quotient dimension mismatch");
  return Quotient(sub, std::move(complement));
}

SumIntersection sum_and_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("subspaces live in different ambient spaces");
  const std::size_t n = a.ambient_dim();
  // Zassenhaus: rows (u | u) for u in a and (w | 0) for w in b.
  std::vector<SparseRow> rows;
  rows.reserve(a.dim() + b.dim());
  for (const auto& u : a.vectors()) {
    SparseRow row = u;
    for (const auto& e : u) row.push_back({e.col + n, e.value});
    rows.push_back(std::move(row));
  }
  for (const auto& w : b.vectors()) rows.push_back(w);
  Echelon e = row_reduce(std::move(rows), 2 * n);

  std::vector<SparseRow> sum_rows;
  std::vector<SparseRow> meet_rows;
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (e.pivots[k] < n) {
      SparseRow left;
      for (const auto& entry : e.rows[k]) {
        if (entry.col < n) left.push_back(entry);
      }
      sum_rows.push_back(std::move(left));
    } else {
      SparseRow right;
      for (const auto& entry : e.rows[k]) right.push_back({entry.col - n, entry.value});
      meet_rows.push_back(std::move(right));
    }
  }
  SumIntersection out{Subspace::span(n, std::move(sum_rows)), Subspace::span(n, std::move(meet_rows))};
  if (out.sum.dim() + out.intersection.dim() != a.dim() + b.dim()) {
    throw std::logic_error("Grassmann identity violated: " + std::to_string(out.sum.dim()) + " + " +
                           std::to_string(out.intersection.dim()) + " != " + std::to_string(a.dim()) + " + " +
                           std::to_string(b.dim()));
  }
  return out;
}

}  // namespace curlie
