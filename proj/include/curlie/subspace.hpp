#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "curlie/matrix.hpp"

namespace curlie {

/// Reduced row echelon form of a list of sparse rows: pivot entries equal 1
/// and every pivot column is zero in all other rows. Rows are ordered by
/// pivot column.
struct Echelon {
  std::vector<SparseRow> rows;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(std::vector<SparseRow> rows, std::size_t cols);

/// A linear subspace of F^ambient stored by its canonical basis (reduced
/// column echelon form, i.e. the RREF of the basis vectors written as rows).
/// Two subspaces are equal iff their stored bases are identical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(std::size_t ambient, std::vector<SparseRow> vectors);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return vectors_.size(); }

  /// Basis vectors as the columns of an ambient × dim matrix.
  Matrix basis() const;
  Vector basis_vector(std::size_t k) const { return to_dense(vectors_.at(k), ambient_); }
  const std::vector<SparseRow>& vectors() const { return vectors_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus the unique element of this subspace agreeing with v on the
  /// pivot coordinates. Zero iff v lies in the subspace.
  Vector reduce(const Vector& v) const;
  SparseRow reduce(SparseRow v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the canonical basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.vectors_ == b.vectors_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<SparseRow> vectors_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& m);
Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);

/// A particular solution of m·x = rhs, or nothing if the system is
/// inconsistent. Free variables are set to zero.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

Rational determinant(const Matrix& m);

/// total / sub with a canonical complement of sub inside total.
class Quotient {
 public:
  Quotient() = default;
  Quotient(Subspace sub, Subspace complement) : sub_(std::move(sub)), complement_(std::move(complement)) {}

  std::size_t dim() const { return complement_.dim(); }
  const Subspace& sub() const { return sub_; }
  const Subspace& complement() const { return complement_; }
  /// Complement basis vectors as columns.
  Matrix representatives() const { return complement_.basis(); }

  /// Canonical representative of the coset v + sub.
  Vector coset_reduce(const Vector& v) const { return sub_.reduce(v); }
  bool same_coset(const Vector& a, const Vector& b) const;
  /// Coordinates of v + sub in the representative basis. Throws
  /// NotASubspace if v does not lie in total.
  Vector coordinates(const Vector& v) const;
  Vector lift(const Vector& coords) const;
  /// Applies coordinates() to every column of m.
  Matrix coordinate_matrix(const Matrix& m) const;

 private:
  Subspace sub_;
  Subspace complement_;
};

/// Throws NotASubspace unless sub ⊆ total.
Quotient quotient_data(const Subspace& sub, const Subspace& total);

struct SumIntersection {
  Subspace sum;
  Subspace intersection;
};

/// Throws AmbientMismatch for different ambient dimensions.
SumIntersection sum_and_intersect(const Subspace& a, const Subspace& b);

}  // namespace curlie
