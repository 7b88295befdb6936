#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "curlie/algebra.hpp"
#include "curlie/report.hpp"

namespace curlie {

std::uint64_t binomial(std::size_t n, std::size_t k);

using Tuple = std::vector<std::size_t>;

/// Sorts `t` in place and returns the sign of the sorting permutation, or 0
/// if an index repeats.
int sort_with_sign(Tuple& t);

/// Strictly increasing p-tuples from {0, ..., n-1} in lexicographic order.
class WedgeBasis {
 public:
  WedgeBasis(std::size_t n, std::size_t p);

  std::size_t n() const { return n_; }
  std::size_t degree() const { return p_; }
  std::size_t size() const { return count_; }
  Tuple tuple(std::size_t r) const;
  /// Lexicographic rank of a strictly increasing tuple.
  std::size_t rank(const Tuple& t) const;

 private:
  std::size_t n_;
  std::size_t p_;
  std::size_t count_;
  std::vector<std::size_t> flat_;
};

/// C^p(g;V): basis element (tuple rank r, module index v) sits at r·dim V + v.
/// C^0 = V; for p > n the space is zero.
class CochainSpace {
 public:
  CochainSpace(std::size_t lie_dim, std::size_t module_dim, std::size_t degree);

  std::size_t lie_dim() const { return lie_dim_; }
  std::size_t module_dim() const { return module_dim_; }
  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return wedge_->size() * module_dim_; }
  const WedgeBasis& wedge() const { return *wedge_; }

  std::size_t index(const Tuple& t, std::size_t v) const { return wedge_->rank(t) * module_dim_ + v; }

  friend bool operator==(const CochainSpace& a, const CochainSpace& b) {
    return a.lie_dim_ == b.lie_dim_ && a.module_dim_ == b.module_dim_ && a.degree_ == b.degree_;
  }

 private:
  std::size_t lie_dim_;
  std::size_t module_dim_;
  std::size_t degree_;
  std::shared_ptr<const WedgeBasis> wedge_;
};

struct Cochain {
  CochainSpace space;
  Vector coeffs;

  Cochain(CochainSpace s, Vector c);
  static Cochain zero(const CochainSpace& s) { return Cochain(s, zero_vector(s.dim())); }
};

/// λ(y_1, ..., y_p) for arbitrary Lie algebra vectors, via p×p minors.
/// Throws ArityMismatch when args.size() != p.
Vector evaluate(const Cochain& c, const std::vector<Vector>& args);
/// λ(x_{i_1}, ..., x_{i_p}) for basis vectors in any order.
Vector evaluate_on_basis(const Cochain& c, const Tuple& indices);

/// Matrix of d : C^p(g;V) → C^{p+1}(g;V).
Matrix differential_matrix(const Representation& rep, std::size_t p);

/// Caches the differentials d_0, ..., d_n of one representation.
class ChevalleyEilenbergComplex {
 public:
  explicit ChevalleyEilenbergComplex(Representation rep);

  const Representation& rep() const { return rep_; }
  std::size_t lie_dim() const { return rep_.algebra().dim(); }
  std::size_t module_dim() const { return rep_.module_dim(); }
  CochainSpace space(std::size_t p) const { return CochainSpace(lie_dim(), module_dim(), p); }
  /// d_p : C^p → C^{p+1}; zero matrix of the right shape for p ≥ n.
  const Matrix& d(std::size_t p) const;

 private:
  Representation rep_;
  std::vector<Matrix> d_;
};

/// Asserts d_{p+1} d_p = 0 for 0 ≤ p ≤ n.
VerificationReport verify_complex(const ChevalleyEilenbergComplex& complex);

}  // namespace curlie
