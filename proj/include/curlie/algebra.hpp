#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "curlie/matrix.hpp"

namespace curlie {

/// Dense table t(i,j,k) of structure constants: e_i * e_j = Σ_k t(i,j,k) e_k.
/// This is the unvalidated form in which algebras are entered.
class StructureTable {
 public:
  explicit StructureTable(std::size_t dim = 0) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * dim_ + j) * dim_ + k]; }

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> data_;
};

struct Violation {
  std::string kind;
  std::vector<std::size_t> indices;
  std::string detail;
};

struct ValidationReport {
  std::string subject;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

ValidationReport validate_lie(const StructureTable& table);
ValidationReport validate_assoc(const StructureTable& table, std::size_t unit_index);

struct Term {
  std::size_t index;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) { return a.index == b.index && a.coeff == b.coeff; }
};

/// Sparse linear combination of basis vectors, sorted by index.
using Combination = std::vector<Term>;

/// Recorded on algebras produced by the current construction g ⊗ S.
struct CurrentFactors {
  std::size_t base_dim;
  std::size_t coeff_dim;

  friend bool operator==(const CurrentFactors&, const CurrentFactors&) = default;
};

class LieAlgebra {
 public:
  /// Validates antisymmetry and the Jacobi identity; throws ValidationError.
  static LieAlgebra create(std::string name, std::vector<std::string> labels, const StructureTable& table);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [x_i, x_j] as a sparse combination.
  Combination bracket(std::size_t i, std::size_t j) const;
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  StructureTable table() const;

  bool marked_semisimple() const { return semisimple_; }
  void mark_semisimple(bool flag) { semisimple_ = flag; }

  const std::optional<CurrentFactors>& current_factors() const { return current_; }
  void set_current_factors(CurrentFactors f) { current_ = f; }

  /// Equality of dimension and structure constants; names and labels ignored.
  bool same_constants(const LieAlgebra& other) const { return dim_ == other.dim_ && upper_ == other.upper_; }

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  // [x_i, x_j] for i < j; the lower triangle follows by antisymmetry.
  std::vector<Combination> upper_;
  bool semisimple_ = false;
  std::optional<CurrentFactors> current_;
};

class CommAssocAlgebra {
 public:
  /// Validates commutativity, associativity and the unit law for the given
  /// unit position, then reorders the basis so the unit comes first.
  static CommAssocAlgebra create(std::string name, std::vector<std::string> labels, const StructureTable& table,
                                 std::size_t unit_index);

  /// Basis order that moves `unit_index` to the front and keeps the others
  /// in their original order: new position p holds old basis vector order[p].
  static std::vector<std::size_t> unit_first_order(std::size_t dim, std::size_t unit_index);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t unit_index() const { return 0; }
  /// Position of the unit in the basis as originally supplied.
  std::size_t original_unit_index() const { return original_unit_; }
  bool was_normalized() const { return original_unit_ != 0; }

  const Combination& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  Vector multiply(const Vector& s, const Vector& t) const;
  StructureTable table() const;

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Combination> products_;
  std::size_t original_unit_ = 0;
};

/// Coordinate functionals ω_j of a basis of S, and the induced maps
/// ω̂_j : V ⊗ S → V, v ⊗ s ↦ ω_j(s) v.
class DualBasis {
 public:
  explicit DualBasis(std::size_t dim) : dim_(dim) {}
  explicit DualBasis(const CommAssocAlgebra& s) : dim_(s.dim()) {}

  Rational omega(std::size_t j, const Vector& s) const;
  Vector omega_hat(std::size_t j, const Vector& vs, std::size_t module_dim) const;

 private:
  std::size_t dim_;
};

ValidationReport validate_representation(const LieAlgebra& g, std::size_t module_dim,
                                         const std::vector<Matrix>& actions);

class Representation {
 public:
  /// Validates ρ([x_i,x_j]) = [ρ(x_i), ρ(x_j)]; throws ValidationError.
  static Representation create(LieAlgebra algebra, std::string name, std::size_t module_dim,
                               std::vector<Matrix> actions);

  const LieAlgebra& algebra() const { return algebra_; }
  const std::string& name() const { return name_; }
  std::size_t module_dim() const { return module_dim_; }
  const Matrix& action(std::size_t i) const { return actions_.at(i); }
  const std::vector<Matrix>& actions() const { return actions_; }
  Vector act(const Vector& x, const Vector& v) const;

 private:
  LieAlgebra algebra_;
  std::string name_;
  std::size_t module_dim_ = 0;
  std::vector<Matrix> actions_;
};

}  // namespace curlie
