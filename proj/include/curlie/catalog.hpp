#pragma once

#include <cstddef>
#include <string>

#include "curlie/algebra.hpp"

namespace curlie::catalog {

LieAlgebra abelian(std::size_t n);
/// Two-dimensional non-abelian algebra with [x,y] = y.
LieAlgebra solvable2();
/// Basis (x, y, z) with [x,y] = z.
LieAlgebra heisenberg3();
/// Basis (e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h. Marked semisimple.
LieAlgebra sl2();

CommAssocAlgebra trivial_field();
/// F[x]/(x^m) with basis 1, x, ..., x^{m-1}.
CommAssocAlgebra truncated_poly(std::size_t m);
/// F[e]/(e^2).
CommAssocAlgebra dual_numbers();
/// F[x]/(x^2 - x) with basis 1, x.
CommAssocAlgebra split2();

Representation trivial(const LieAlgebra& g, std::size_t module_dim = 1);
Representation adjoint(const LieAlgebra& g);
/// Defining representation of the built-in Lie algebras (sl2 on F^2,
/// heisenberg3 on F^3, solvable2 on F^2, abelian(n) by diagonal units).
Representation natural(const LieAlgebra& g);

/// Name lookup: "abelian<n>", "solvable2", "heisenberg3", "sl2".
/// Throws ParseError for unknown names.
LieAlgebra lie_by_name(const std::string& name);
/// "field"/"trivial_field", "dual2"/"dual_numbers", "truncated_poly<m>", "split2".
CommAssocAlgebra assoc_by_name(const std::string& name);
/// "trivial", "adjoint", "natural".
Representation rep_by_name(const LieAlgebra& g, const std::string& name);

}  // namespace curlie::catalog
