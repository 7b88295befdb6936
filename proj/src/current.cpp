#include "curlie/current.hpp"

#include "curlie/errors.hpp"

namespace curlie {

LieAlgebra current_algebra(const LieAlgebra& g, const CommAssocAlgebra& s) {
  const std::size_t n = g.dim();
  const std::size_t m = s.dim();
  StructureTable t(n * m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < m; ++a) labels.push_back(g.labels()[i] + "⊗" + s.labels()[a]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto br = g.bracket(i, j);
      if (br.empty()) continue;
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          for (const auto& x : br) {
            for (const auto& y : s.product(a, b)) t(i * m + a, j * m + b, x.index * m + y.index) = x.coeff * y.coeff;
          }
        }
      }
    }
  }
  auto out = LieAlgebra::create(g.name() + "⊗" + s.name(), std::move(labels), t);
  out.set_current_factors({n, m});
  return out;
}

Representation current_representation(const Representation& rep, const CommAssocAlgebra& s) {
  const std::size_t n = rep.algebra().dim();
  const std::size_t d = rep.module_dim();
  const std::size_t m = s.dim();
  std::vector<Matrix> actions;
  actions.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      Matrix r(d * m, d * m);
      for (std::size_t w = 0; w < d; ++w) {
        for (const auto& e : rep.action(i).row(w)) {
          for (std::size_t b = 0; b < m; ++b) {
            for (const auto& y : s.product(a, b)) r.add(w * m + y.index, e.col * m + b, e.value * y.coeff);
          }
        }
      }
      actions.push_back(std::move(r));
    }
  }
  return Representation::create(current_algebra(rep.algebra(), s), rep.name() + "⊗" + s.name(), d * m,
                                std::move(actions));
}

std::vector<Vector> decompose_components(const Vector& x, std::size_t module_dim, std::size_t m) {
  if (x.size() != module_dim * m) throw LengthMismatch("vector length differs from dim V * dim S");
  std::vector<Vector> out(m, zero_vector(module_dim));
  for (std::size_t v = 0; v < module_dim; ++v) {
    for (std::size_t j = 0; j < m; ++j) out[j][v] = x[v * m + j];
  }
  return out;
}

Vector reassemble(const std::vector<Vector>& components) {
  const std::size_t m = components.size();
  const std::size_t d = m ? components.front().size() : 0;
  Vector x = zero_vector(d * m);
  for (std::size_t j = 0; j < m; ++j) {
    if (components[j].size() != d) throw LengthMismatch("components have different lengths");
    for (std::size_t v = 0; v < d; ++v) x[v * m + j] = components[j][v];
  }
  return x;
}

}  // namespace curlie
