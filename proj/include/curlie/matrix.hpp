#pragma once

#include <cstddef>
#include <vector>

#include "curlie/rational.hpp"

namespace curlie {

struct Entry {
  std::size_t col;
  Rational value;

  friend bool operator==(const Entry& a, const Entry& b) { return a.col == b.col && a.value == b.value; }
};

/// Sparse row: entries sorted by column, no explicit zeros.
using SparseRow = std::vector<Entry>;

/// target += factor * source
void add_scaled(SparseRow& target, const Rational& factor, const SparseRow& source);

SparseRow to_sparse(const Vector& v);
Vector to_dense(const SparseRow& row, std::size_t length);

/// Row-major sparse matrix over the rationals. Columns of a linear map are
/// indexed by the source basis, rows by the target basis.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  void add(std::size_t r, std::size_t c, const Rational& value);

  const SparseRow& row(std::size_t r) const { return data_[r]; }
  /// Replaces row r; the entries must be sorted by column and nonzero.
  void set_row(std::size_t r, SparseRow row);

  Vector column(std::size_t c) const;
  Vector dense_row(std::size_t r) const;

  std::size_t nonzeros() const;
  bool is_zero() const;

  Matrix transpose() const;
  /// Returns f ⊗ S for a coefficient algebra of dimension m, using the
  /// (outer index major, algebra index minor) flattening.
  Matrix kron_identity(std::size_t m) const;

  Matrix operator*(const Matrix& rhs) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rational& c) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseRow> data_;
};

/// Stacks matrices with equal column counts on top of each other.
Matrix vstack(const std::vector<Matrix>& blocks);

}  // namespace curlie
