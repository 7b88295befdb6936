#include "curlie/algebra.hpp"

#include <sstream>

#include "curlie/errors.hpp"

namespace curlie {

namespace {

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::ostringstream out;
  out << '(';
  for (std::size_t t = 0; t < idx.size(); ++t) out << (t ? "," : "") << idx[t];
  out << ')';
  return out.str();
}

Combination sparse_entry(const StructureTable& table, std::size_t i, std::size_t j) {
  Combination out;
  for (std::size_t k = 0; k < table.dim(); ++k) {
    if (!is_zero(table(i, j, k))) out.push_back({k, table(i, j, k)});
  }
  return out;
}

void check_table_shape(const StructureTable& table, std::size_t labels) {
  if (labels != table.dim()) throw LengthMismatch("basis label count differs from dimension");
}

}  // namespace

std::string ValidationReport::summary() const {
  if (ok()) return subject + ": valid";
  std::ostringstream out;
  out << subject << ": " << violations.size() << " violation(s)";
  for (const auto& v : violations) {
    out << "\n  " << v.kind << ' ' << join_indices(v.indices);
    if (!v.detail.empty()) out << ": " << v.detail;
  }
  return out.str();
}

ValidationReport validate_lie(const StructureTable& c) {
  ValidationReport report{"lie algebra", {}};
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (c(i, j, k) + c(j, i, k) != 0) {
          report.violations.push_back({"antisymmetry", {i, j, k},
                                       "c[i][j][k] + c[j][i][k] = " + to_string(c(i, j, k) + c(j, i, k))});
        }
      }
    }
  }
  // Jacobi: [x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]] = 0.
  auto nested = [&](std::size_t a, std::size_t b, std::size_t d, std::size_t out) {
    Rational s = 0;
    for (std::size_t l = 0; l < n; ++l) {
      if (!is_zero(c(b, d, l))) s += c(b, d, l) * c(a, l, out);
    }
    return s;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t out = 0; out < n; ++out) {
          Rational s = nested(i, j, k, out) + nested(j, k, i, out) + nested(k, i, j, out);
          if (!is_zero(s)) {
            report.violations.push_back({"jacobi", {i, j, k}, "component " + std::to_string(out) + " = " + to_string(s)});
            break;
          }
        }
      }
    }
  }
  return report;
}

ValidationReport validate_assoc(const StructureTable& a, std::size_t unit) {
  ValidationReport report{"commutative associative algebra", {}};
  const std::size_t m = a.dim();
  if (unit >= m) {
    report.violations.push_back({"unit_index", {unit}, "unit index out of range"});
    return report;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        if (a(i, j, k) != a(j, i, k)) {
          report.violations.push_back({"commutativity", {i, j, k}, ""});
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t out = 0; out < m; ++out) {
          Rational left = 0;
          Rational right = 0;
          for (std::size_t l = 0; l < m; ++l) {
            left += a(i, j, l) * a(l, k, out);
            right += a(j, k, l) * a(i, l, out);
          }
          if (left != right) {
            report.violations.push_back({"associativity", {i, j, k}, "component " + std::to_string(out)});
            break;
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      Rational expected = (i == k) ? 1 : 0;
      if (a(unit, i, k) != expected || a(i, unit, k) != expected) {
        report.violations.push_back({"unit", {unit, i, k}, "unit does not act as identity"});
        break;
      }
    }
  }
  return report;
}

LieAlgebra LieAlgebra::create(std::string name, std::vector<std::string> labels, const StructureTable& table) {
  check_table_shape(table, labels.size());
  auto report = validate_lie(table);
  report.subject = name.empty() ? report.subject : name;
  if (!report.ok()) throw ValidationError(report.summary());
  LieAlgebra g;
  g.name_ = std::move(name);
  g.dim_ = table.dim();
  g.labels_ = std::move(labels);
  for (std::size_t i = 0; i < g.dim_; ++i) {
    for (std::size_t j = i + 1; j < g.dim_; ++j) g.upper_.push_back(sparse_entry(table, i, j));
  }
  return g;
}

std::size_t LieAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // position of (i,j), i<j, in row-major order over the strict upper triangle
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

Combination LieAlgebra::bracket(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw IndexOutOfRange("Lie algebra basis index out of range");
  if (i == j) return {};
  if (i < j) return upper_[pair_index(i, j)];
  Combination out = upper_[pair_index(j, i)];
  for (auto& t : out) t.coeff = -t.coeff;
  return out;
}

Rational LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& t : bracket(i, j)) {
    if (t.index == k) return t.coeff;
  }
  return 0;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw LengthMismatch("bracket argument length differs from dimension");
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || is_zero(y[j])) continue;
      Rational w = x[i] * y[j];
      for (const auto& t : bracket(i, j)) out[t.index] += w * t.coeff;
    }
  }
  return out;
}

StructureTable LieAlgebra::table() const {
  StructureTable t(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& term : bracket(i, j)) t(i, j, term.index) = term.coeff;
    }
  }
  return t;
}

std::vector<std::size_t> CommAssocAlgebra::unit_first_order(std::size_t dim, std::size_t unit_index) {
  std::vector<std::size_t> order{unit_index};
  for (std::size_t i = 0; i < dim; ++i) {
    if (i != unit_index) order.push_back(i);
  }
  return order;
}

CommAssocAlgebra CommAssocAlgebra::create(std::string name, std::vector<std::string> labels,
                                          const StructureTable& table, std::size_t unit_index) {
  check_table_shape(table, labels.size());
  if (table.dim() == 0) throw ValidationError("commutative associative algebra must have a unit");
  auto report = validate_assoc(table, unit_index);
  report.subject = name.empty() ? report.subject : name;
  if (!report.ok()) throw ValidationError(report.summary());

  const std::size_t m = table.dim();
  auto order = unit_first_order(m, unit_index);
  std::vector<std::size_t> position(m);
  for (std::size_t p = 0; p < m; ++p) position[order[p]] = p;

  CommAssocAlgebra s;
  s.name_ = std::move(name);
  s.dim_ = m;
  s.original_unit_ = unit_index;
  for (std::size_t p = 0; p < m; ++p) s.labels_.push_back(labels[order[p]]);
  s.products_.resize(m * m);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = 0; q < m; ++q) {
      Combination prod;
      for (std::size_t k = 0; k < m; ++k) {
        const auto& v = table(order[p], order[q], order[k]);
        if (!is_zero(v)) prod.push_back({k, v});
      }
      s.products_[p * m + q] = std::move(prod);
    }
  }
  return s;
}

Vector CommAssocAlgebra::multiply(const Vector& s, const Vector& t) const {
  if (s.size() != dim_ || t.size() != dim_) throw LengthMismatch("product argument length differs from dimension");
  Vector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(s[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(t[j])) continue;
      Rational w = s[i] * t[j];
      for (const auto& term : product(i, j)) out[term.index] += w * term.coeff;
    }
  }
  return out;
}

StructureTable CommAssocAlgebra::table() const {
  StructureTable t(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& term : product(i, j)) t(i, j, term.index) = term.coeff;
    }
  }
  return t;
}

Rational DualBasis::omega(std::size_t j, const Vector& s) const {
  if (j >= dim_) throw IndexOutOfRange("dual basis index out of range");
  if (s.size() != dim_) throw LengthMismatch("algebra vector length differs from dimension");
  return s[j];
}

Vector DualBasis::omega_hat(std::size_t j, const Vector& vs, std::size_t module_dim) const {
  if (j >= dim_) throw IndexOutOfRange("dual basis index out of range");
  if (vs.size() != module_dim * dim_) throw LengthMismatch("tensor vector length differs from dim V * dim S");
  Vector out = zero_vector(module_dim);
  for (std::size_t v = 0; v < module_dim; ++v) out[v] = vs[v * dim_ + j];
  return out;
}

ValidationReport validate_representation(const LieAlgebra& g, std::size_t d, const std::vector<Matrix>& rho) {
  ValidationReport report{"representation", {}};
  if (rho.size() != g.dim()) {
    report.violations.push_back({"generator_count", {rho.size()}, "expected one matrix per basis vector"});
    return report;
  }
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho[i].rows() != d || rho[i].cols() != d) {
      report.violations.push_back({"shape", {i}, "matrix is not module_dim x module_dim"});
    }
  }
  if (!report.ok()) return report;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Matrix lhs(d, d);
      for (const auto& t : g.bracket(i, j)) lhs = lhs + rho[t.index].scaled(t.coeff);
      Matrix rhs = rho[i] * rho[j] - rho[j] * rho[i];
      if (!(lhs == rhs)) report.violations.push_back({"commutator", {i, j}, "rho([x_i,x_j]) != [rho(x_i),rho(x_j)]"});
    }
  }
  return report;
}

Representation Representation::create(LieAlgebra algebra, std::string name, std::size_t module_dim,
                                      std::vector<Matrix> actions) {
  auto report = validate_representation(algebra, module_dim, actions);
  report.subject = name.empty() ? report.subject : name;
  if (!report.ok()) throw ValidationError(report.summary());
  Representation r;
  r.algebra_ = std::move(algebra);
  r.name_ = std::move(name);
  r.module_dim_ = module_dim;
  r.actions_ = std::move(actions);
  return r;
}

Vector Representation::act(const Vector& x, const Vector& v) const {
  if (x.size() != algebra_.dim()) throw LengthMismatch("Lie algebra vector length differs from dimension");
  if (v.size() != module_dim_) throw LengthMismatch("module vector length differs from module dimension");
  Vector out = zero_vector(module_dim_);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!is_zero(x[i])) out = out + x[i] * (actions_[i] * v);
  }
  return out;
}

}  // namespace curlie
