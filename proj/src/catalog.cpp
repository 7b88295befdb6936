#include "curlie/catalog.hpp"

#include <charconv>

#include "curlie/errors.hpp"

namespace curlie::catalog {

namespace {

std::vector<std::string> indexed_labels(const std::string& stem, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(stem + std::to_string(i + 1));
  return labels;
}

void set_bracket(StructureTable& t, std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  t(i, j, k) = c;
  t(j, i, k) = -c;
}

Matrix unit_matrix(std::size_t d, std::size_t r, std::size_t c, const Rational& value = 1) {
  Matrix m(d, d);
  m.set(r, c, value);
  return m;
}

std::optional<std::size_t> numeric_suffix(const std::string& name, const std::string& stem) {
  if (name.size() <= stem.size() || name.compare(0, stem.size(), stem) != 0) return std::nullopt;
  std::size_t value = 0;
  const char* first = name.data() + stem.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

LieAlgebra abelian(std::size_t n) {
  return LieAlgebra::create("abelian" + std::to_string(n), indexed_labels("x", n), StructureTable(n));
}

LieAlgebra solvable2() {
  StructureTable t(2);
  set_bracket(t, 0, 1, 1, 1);
  return LieAlgebra::create("solvable2", {"x", "y"}, t);
}

LieAlgebra heisenberg3() {
  StructureTable t(3);
  set_bracket(t, 0, 1, 2, 1);
  return LieAlgebra::create("heisenberg3", {"x", "y", "z"}, t);
}

LieAlgebra sl2() {
  StructureTable t(3);
  set_bracket(t, 1, 0, 0, 2);
  set_bracket(t, 1, 2, 2, -2);
  set_bracket(t, 0, 2, 1, 1);
  auto g = LieAlgebra::create("sl2", {"e", "h", "f"}, t);
  g.mark_semisimple(true);
  return g;
}

CommAssocAlgebra truncated_poly(std::size_t m) {
  if (m == 0) throw ValidationError("truncated_poly needs m >= 1");
  StructureTable t(m);
  std::vector<std::string> labels{"1"};
  for (std::size_t i = 1; i < m; ++i) labels.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; i + j < m; ++j) t(i, j, i + j) = 1;
  }
  return CommAssocAlgebra::create("truncated_poly" + std::to_string(m), labels, t, 0);
}

CommAssocAlgebra trivial_field() {
  StructureTable t(1);
  t(0, 0, 0) = 1;
  return CommAssocAlgebra::create("trivial_field", {"1"}, t, 0);
}

CommAssocAlgebra dual_numbers() {
  StructureTable t(2);
  t(0, 0, 0) = 1;
  t(0, 1, 1) = 1;
  t(1, 0, 1) = 1;
  return CommAssocAlgebra::create("dual2", {"1", "eps"}, t, 0);
}

CommAssocAlgebra split2() {
  StructureTable t(2);
  t(0, 0, 0) = 1;
  t(0, 1, 1) = 1;
  t(1, 0, 1) = 1;
  t(1, 1, 1) = 1;
  return CommAssocAlgebra::create("split2", {"1", "x"}, t, 0);
}

Representation trivial(const LieAlgebra& g, std::size_t module_dim) {
  return Representation::create(g, "trivial", module_dim, std::vector<Matrix>(g.dim(), Matrix(module_dim, module_dim)));
}

Representation adjoint(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> rho(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : g.bracket(i, j)) rho[i].set(t.index, j, t.coeff);
    }
  }
  return Representation::create(g, "adjoint", n, std::move(rho));
}

Representation natural(const LieAlgebra& g) {
  std::vector<Matrix> rho;
  std::size_t d = 0;
  if (g.same_constants(sl2())) {
    d = 2;
    rho = {unit_matrix(2, 0, 1), unit_matrix(2, 0, 0) + unit_matrix(2, 1, 1, -1), unit_matrix(2, 1, 0)};
  } else if (g.same_constants(heisenberg3())) {
    d = 3;
    rho = {unit_matrix(3, 0, 1), unit_matrix(3, 1, 2), unit_matrix(3, 0, 2)};
  } else if (g.same_constants(solvable2())) {
    d = 2;
    rho = {unit_matrix(2, 0, 0), unit_matrix(2, 0, 1)};
  } else if (g.same_constants(abelian(g.dim()))) {
    d = g.dim();
    for (std::size_t i = 0; i < d; ++i) rho.push_back(unit_matrix(d, i, i));
  } else {
    throw ValidationError("no natural representation known for " + g.name());
  }
  return Representation::create(g, "natural", d, std::move(rho));
}

LieAlgebra lie_by_name(const std::string& name) {
  if (name == "sl2") return sl2();
  if (name == "solvable2") return solvable2();
  if (name == "heisenberg3") return heisenberg3();
  if (auto n = numeric_suffix(name, "abelian")) return abelian(*n);
  throw ParseError("unknown Lie algebra: " + name);
}

CommAssocAlgebra assoc_by_name(const std::string& name) {
  if (name == "field" || name == "trivial_field") return trivial_field();
  if (name == "dual2" || name == "dual_numbers") return dual_numbers();
  if (name == "split2") return split2();
  if (auto m = numeric_suffix(name, "truncated_poly")) return truncated_poly(*m);
  throw ParseError("unknown commutative algebra: " + name);
}

Representation rep_by_name(const LieAlgebra& g, const std::string& name) {
  if (name == "trivial") return trivial(g);
  if (name == "adjoint") return adjoint(g);
  if (name == "natural") return natural(g);
  throw ParseError("unknown representation: " + name);
}

}  // namespace curlie::catalog
