#include "curlie/matrix.hpp"

#include <algorithm>

#include "curlie/errors.hpp"

namespace curlie {

void add_scaled(SparseRow& target, const Rational& factor, const SparseRow& source) {
  if (is_zero(factor) || source.empty()) return;
  SparseRow merged;
  merged.reserve(target.size() + source.size());
  auto t = target.begin();
  auto s = source.begin();
  while (t != target.end() || s != source.end()) {
    if (s == source.end() || (t != target.end() && t->col < s->col)) {
      merged.push_back(std::move(*t++));
    } else if (t == target.end() || s->col < t->col) {
      merged.push_back({s->col, factor * s->value});
      ++s;
    } else {
      Rational sum = t->value + factor * s->value;
      if (!is_zero(sum)) merged.push_back({t->col, std::move(sum)});
      ++t;
      ++s;
    }
  }
  target = std::move(merged);
}

SparseRow to_sparse(const Vector& v) {
  SparseRow row;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) row.push_back({i, v[i]});
  }
  return row;
}

Vector to_dense(const SparseRow& row, std::size_t length) {
  Vector v = zero_vector(length);
  for (const auto& e : row) v[e.col] = e.value;
  return v;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Rational(1)});
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw LengthMismatch("row length differs from column count");
    m.data_[r] = to_sparse(rows[r]);
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw LengthMismatch("column length differs from row count");
    for (std::size_t r = 0; r < rows; ++r) {
      if (!curlie::is_zero(columns[c][r])) m.data_[r].push_back({c, columns[c][r]});
    }
  }
  return m;
}

Rational Matrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Rational(0);
}

void Matrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw IndexOutOfRange("matrix index out of range");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (curlie::is_zero(value)) {
      row.erase(it);
    } else {
      it->value = value;
    }
  } else if (!curlie::is_zero(value)) {
    row.insert(it, {c, value});
  }
}

void Matrix::add(std::size_t r, std::size_t c, const Rational& value) {
  if (curlie::is_zero(value)) return;
  if (r >= rows_ || c >= cols_) throw IndexOutOfRange("matrix index out of range");
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    it->value += value;
    if (curlie::is_zero(it->value)) row.erase(it);
  } else {
    row.insert(it, {c, value});
  }
}

void Matrix::set_row(std::size_t r, SparseRow row) {
  if (r >= rows_) throw IndexOutOfRange("matrix row out of range");
  if (!row.empty() && row.back().col >= cols_) throw IndexOutOfRange("matrix column out of range");
  data_[r] = std::move(row);
}

Vector Matrix::column(std::size_t c) const {
  Vector v = zero_vector(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vector Matrix::dense_row(std::size_t r) const { return to_dense(data_.at(r), cols_); }

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const SparseRow& row) { return row.empty(); });
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  }
  return t;
}

Matrix Matrix::kron_identity(std::size_t m) const {
  Matrix out(rows_ * m, cols_ * m);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t a = 0; a < m; ++a) {
      auto& dst = out.data_[r * m + a];
      dst.reserve(data_[r].size());
      for (const auto& e : data_[r]) dst.push_back({e.col * m + a, e.value});
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw LengthMismatch("matrix product dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  Vector acc = zero_vector(rhs.cols_);
  std::vector<char> touched(rhs.cols_, 0);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < rows_; ++r) {
    cols.clear();
    for (const auto& a : data_[r]) {
      for (const auto& b : rhs.data_[a.col]) {
        if (!touched[b.col]) {
          touched[b.col] = 1;
          cols.push_back(b.col);
          acc[b.col] = a.value * b.value;
        } else {
          acc[b.col] += a.value * b.value;
        }
      }
    }
    std::sort(cols.begin(), cols.end());
    auto& dst = out.data_[r];
    for (std::size_t c : cols) {
      if (!curlie::is_zero(acc[c])) dst.push_back({c, acc[c]});
      touched[c] = 0;
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw LengthMismatch("matrix-vector dimension mismatch");
  Vector out = zero_vector(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out[r] += e.value * v[e.col];
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw LengthMismatch("matrix sum dimension mismatch");
  Matrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) add_scaled(out.data_[r], Rational(1), rhs.data_[r]);
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw LengthMismatch("matrix difference dimension mismatch");
  Matrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) add_scaled(out.data_[r], Rational(-1), rhs.data_[r]);
  return out;
}

Matrix Matrix::scaled(const Rational& c) const {
  if (curlie::is_zero(c)) return Matrix(rows_, cols_);
  Matrix out = *this;
  for (auto& row : out.data_) {
    for (auto& e : row) e.value *= c;
  }
  return out;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) return Matrix();
  std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw LengthMismatch("vstack column mismatch");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) out.set_row(offset + r, b.row(r));
    offset += b.rows();
  }
  return out;
}

}  // namespace curlie
