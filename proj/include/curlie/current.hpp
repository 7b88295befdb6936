#pragma once

#include <cstddef>
#include <vector>

#include "curlie/algebra.hpp"

namespace curlie {

/// Position of x_i ⊗ s_a (or v_i ⊗ s_a) in a tensor product with S, using
/// outer-index-major, algebra-index-minor order.
struct TensorIndex {
  std::size_t outer;
  std::size_t algebra;

  std::size_t flat(std::size_t m) const { return outer * m + algebra; }
  static TensorIndex split(std::size_t flat, std::size_t m) { return {flat / m, flat % m}; }
};

/// g ⊗ S with [x⊗s, y⊗t] = [x,y] ⊗ st.
LieAlgebra current_algebra(const LieAlgebra& g, const CommAssocAlgebra& s);

/// R(x⊗s)(v⊗t) = ρ(x)(v) ⊗ st on V ⊗ S.
Representation current_representation(const Representation& rep, const CommAssocAlgebra& s);

/// Components (v_1, ..., v_m) with x = Σ_j v_j ⊗ s_j.
std::vector<Vector> decompose_components(const Vector& x, std::size_t module_dim, std::size_t m);
Vector reassemble(const std::vector<Vector>& components);

}  // namespace curlie
