#include "curlie/cohomology.hpp"

#include "curlie/current.hpp"
#include "curlie/errors.hpp"

namespace curlie {

CohomologyGroup::CohomologyGroup(std::size_t degree, Subspace cocycles, Subspace coboundaries)
    : degree_(degree), cocycles_(std::move(cocycles)), coboundaries_(std::move(coboundaries)),
      quotient_(quotient_data(coboundaries_, cocycles_)) {}

Vector CohomologyGroup::coordinates(const Vector& cocycle) const {
  if (cocycle.size() != cochain_dim()) throw LengthMismatch("cochain length differs from cochain space dimension");
  if (!cocycles_.contains(cocycle)) throw NotACocycle("vector is not a cocycle in degree " + std::to_string(degree_));
  return quotient_.coordinates(cocycle);
}

Matrix CohomologyGroup::coordinate_matrix(const Matrix& cocycles) const {
  std::vector<Vector> cols;
  cols.reserve(cocycles.cols());
  for (std::size_t c = 0; c < cocycles.cols(); ++c) cols.push_back(coordinates(cocycles.column(c)));
  return Matrix::from_columns(cols, dim());
}

bool CohomologyGroup::same_class(const Vector& a, const Vector& b) const {
  return coordinates(a) == coordinates(b);
}

CohomologyGroup cohomology(const ChevalleyEilenbergComplex& complex, std::size_t p) {
  const std::size_t n = complex.lie_dim();
  const std::size_t dim = complex.space(p).dim();
  Subspace cocycles = p <= n ? kernel_basis(complex.d(p)) : Subspace(dim);
  Subspace coboundaries = (p >= 1 && p <= n + 1) ? image_basis(complex.d(p - 1)) : Subspace(dim);
  return CohomologyGroup(p, std::move(cocycles), std::move(coboundaries));
}

std::vector<std::size_t> cohomology_dims(const Representation& rep, std::optional<std::size_t> max_degree) {
  ChevalleyEilenbergComplex complex(rep);
  const std::size_t top = max_degree.value_or(complex.lie_dim());
  std::vector<std::size_t> dims;
  for (std::size_t p = 0; p <= top; ++p) dims.push_back(cohomology(complex, p).dim());
  return dims;
}

bool SesReport::passed() const {
  for (const auto& r : rows) {
    if (!r.passed()) return false;
  }
  return true;
}

CurrentCohomology::CurrentCohomology(const Representation& rep, const CommAssocAlgebra& s)
    : maps_(rep.algebra().dim(), s), base_(rep), current_(current_representation(rep, s)) {
  const std::size_t slots = top_degree() + 1;
  base_h_.resize(slots);
  current_h_.resize(slots);
  r_.resize(slots);
  q_.resize(slots);
  alpha_.resize(slots);
}

const CohomologyGroup& CurrentCohomology::base_h(std::size_t p) const {
  if (p >= base_h_.size()) throw IndexOutOfRange("degree above the current algebra dimension");
  if (!base_h_[p]) base_h_[p] = cohomology(base_, p);
  return *base_h_[p];
}

const CohomologyGroup& CurrentCohomology::current_h(std::size_t p) const {
  if (p >= current_h_.size()) throw IndexOutOfRange("degree above the current algebra dimension");
  if (!current_h_[p]) current_h_[p] = cohomology(current_, p);
  return *current_h_[p];
}

const Subspace& CurrentCohomology::R_subspace(std::size_t p) const {
  if (p >= r_.size()) throw IndexOutOfRange("degree above the current algebra dimension");
  if (!r_[p]) {
    r_[p] = p == 0 ? Subspace(current_.space(0).dim()) : kernel_basis(maps_.components(module_dim(), p));
  }
  return *r_[p];
}

Subspace CurrentCohomology::Q_cochains(std::size_t p) const {
  const auto& h = current_h(p);
  auto zr = sum_and_intersect(h.cocycles(), R_subspace(p)).intersection;
  return sum_and_intersect(zr, h.coboundaries()).sum;
}

const Subspace& CurrentCohomology::Q_space(std::size_t p) const {
  if (p >= q_.size()) throw IndexOutOfRange("degree above the current algebra dimension");
  if (!q_[p]) {
    const auto& h = current_h(p);
    auto zr = sum_and_intersect(h.cocycles(), R_subspace(p)).intersection;
    std::vector<Vector> coords;
    for (std::size_t k = 0; k < zr.dim(); ++k) coords.push_back(h.coordinates(zr.basis_vector(k)));
    q_[p] = Subspace::span(h.dim(), coords);
  }
  return *q_[p];
}

Matrix CurrentCohomology::phi(std::size_t p) const {
  const auto& z = base_h(p).cocycles();
  CochainMap iota(CochainSpace(base_.lie_dim(), z.dim(), 0), maps_.base_space(module_dim(), p), z.basis());
  return current_h(p).coordinate_matrix(maps_.lift(iota).matrix);
}

Matrix CurrentCohomology::pi_tensor(std::size_t p) const {
  const auto& h = base_h(p);
  return h.coordinate_matrix(h.cocycles().basis()).kron_identity(coeff_dim());
}

namespace {

Quotient modulo_coboundaries(const CohomologyGroup& h) {
  return quotient_data(h.coboundaries(), Subspace::full(h.cochain_dim()));
}

Quotient modulo_cocycles(const CohomologyGroup& h) {
  return quotient_data(h.cocycles(), Subspace::full(h.cochain_dim()));
}

}  // namespace

Matrix CurrentCohomology::T_pi_prime(std::size_t p) const {
  const auto& h = base_h(p);
  Quotient zprime = modulo_coboundaries(h);
  Matrix pi_prime = zprime.coordinate_matrix(Matrix::identity(h.cochain_dim()));
  CochainMap f(maps_.base_space(module_dim(), p), CochainSpace(base_.lie_dim(), zprime.dim(), 0), pi_prime);
  return maps_.lift(f).matrix;
}

Matrix CurrentCohomology::psi(std::size_t p) const { return T_pi_prime(p) * current_h(p).representatives(); }

const Matrix& CurrentCohomology::alpha(std::size_t p) const {
  if (p >= alpha_.size()) throw IndexOutOfRange("degree above the current algebra dimension");
  if (!alpha_[p]) {
    const auto& hc = current_h(p);
    const auto& hb = base_h(p);
    const std::size_t m = coeff_dim();
    const Matrix comps = maps_.components(module_dim(), p) * hc.representatives();
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < hc.dim(); ++k) {
      const Vector column = comps.column(k);
      const auto parts = decompose_components(column, hb.cochain_dim(), m);
      Vector out = zero_vector(hb.dim() * m);
      for (std::size_t j = 0; j < m; ++j) {
        const Vector coords = hb.coordinates(parts[j]);
        for (std::size_t h = 0; h < hb.dim(); ++h) out[h * m + j] = coords[h];
      }
      cols.push_back(std::move(out));
    }
    alpha_[p] = Matrix::from_columns(cols, hb.dim() * m);
  }
  return *alpha_[p];
}

Matrix CurrentCohomology::iota_prime_tensor(std::size_t p) const {
  const auto& h = base_h(p);
  return modulo_coboundaries(h).coordinate_matrix(h.representatives()).kron_identity(coeff_dim());
}

Matrix CurrentCohomology::zeta_tensor(std::size_t p) const {
  const auto& h = base_h(p);
  Quotient zprime = modulo_coboundaries(h);
  return modulo_cocycles(h).coordinate_matrix(zprime.representatives()).kron_identity(coeff_dim());
}

Vector CurrentCohomology::phi_of(std::size_t p, const Vector& z_coords) const { return phi(p) * z_coords; }

Vector CurrentCohomology::psi_of(std::size_t p, const Vector& cocycle) const {
  if (!current_h(p).cocycles().contains(cocycle)) throw NotACocycle("Ψ needs a cocycle representative");
  return T_pi_prime(p) * cocycle;
}

Vector CurrentCohomology::alpha_of(std::size_t p, const Vector& cocycle) const {
  return alpha(p) * current_h(p).coordinates(cocycle);
}

VerificationReport verify_alpha_diagram(const CurrentCohomology& cc) {
  VerificationReport report("alpha");
  for (std::size_t p = 0; p <= cc.top_degree(); ++p) {
    const int deg = static_cast<int>(p);
    try {
      report.add("alpha∘Phi = pi⊗S", deg, cc.alpha(p) * cc.phi(p) == cc.pi_tensor(p));
    } catch (const NotACocycle& e) {
      report.add("alpha∘Phi = pi⊗S", deg, false, e.what());
    }
    report.add("(iota'⊗S)∘alpha = Psi", deg, cc.iota_prime_tensor(p) * cc.alpha(p) == cc.psi(p));
    report.add("B(g⊗S) ⊆ ker T(pi')", deg, (cc.T_pi_prime(p) * cc.current_h(p).coboundaries().basis()).is_zero());
  }
  return report;
}

VerificationReport verify_zeta_psi(const CurrentCohomology& cc) {
  VerificationReport report("zeta_psi");
  for (std::size_t p = 0; p <= cc.top_degree(); ++p) {
    report.add("(zeta⊗S)∘Psi = 0", static_cast<int>(p), (cc.zeta_tensor(p) * cc.psi(p)).is_zero());
  }
  return report;
}

VerificationReport verify_naturality(const CurrentCohomology& v, const CurrentCohomology& w, const GradedMap& f) {
  VerificationReport report("naturality");
  if (!is_chain_map(f, v.base(), w.base())) {
    report.hypothesis_failed = true;
    report.hypothesis_detail = "f does not commute with d";
    return report;
  }
  const std::size_t m = v.coeff_dim();
  const auto lifted = lift_graded(v.maps(), f, v.module_dim(), w.module_dim());
  for (std::size_t p = 0; p <= v.top_degree(); ++p) {
    const auto& hv = v.base_h(p);
    const auto& hw = w.base_h(p);
    Matrix hf = p < f.size() ? hw.coordinate_matrix(f[p] * hv.representatives()) : Matrix(hw.dim(), hv.dim());
    Matrix hTf = w.current_h(p).coordinate_matrix(lifted[p] * v.current_h(p).representatives());
    bool ok = w.alpha(p) * hTf == hf.kron_identity(m) * v.alpha(p);
    report.add("alpha_W∘H(T f) = (H(f)⊗S)∘alpha_V", static_cast<int>(p), ok);
  }
  return report;
}

VerificationReport verify_degree_zero(const CurrentCohomology& cc) {
  VerificationReport report("degree0");
  const auto& hb = cc.base_h(0);
  const auto& hc = cc.current_h(0);
  const std::size_t m = cc.coeff_dim();
  std::vector<Vector> tensors;
  for (std::size_t k = 0; k < hb.cocycles().dim(); ++k) {
    const Vector z = hb.cocycles().basis_vector(k);
    for (std::size_t a = 0; a < m; ++a) {
      std::vector<Vector> parts(m, zero_vector(z.size()));
      parts[a] = z;
      tensors.push_back(reassemble(parts));
    }
  }
  report.add("H^0(g⊗S) = H^0(g)⊗S", 0, hc.cocycles() == Subspace::span(hc.cochain_dim(), tensors));
  report.add("alpha^0 = Id", 0, cc.alpha(0) == Matrix::identity(hc.dim()));
  report.add("Phi^0 = Id", 0, cc.phi(0) == Matrix::identity(hc.dim()));
  return report;
}

namespace {

/// Λ − D(U(Σ θ_j ⊗ s_j)) with d θ_j = 𝓛(Λ_j), or nothing if some 𝓛(Λ_j)
/// is not a coboundary.
std::optional<Vector> strip_coboundary(const CurrentCohomology& cc, std::size_t p, const Vector& lambda,
                                       bool unit_weighted) {
  const std::size_t m = cc.coeff_dim();
  const std::size_t d = cc.module_dim();
  const auto& maps = cc.maps();
  const Vector comps = maps.components(d, p) * lambda;
  const std::size_t base_dim = cc.base().space(p).dim();
  const auto parts = decompose_components(comps, base_dim, m);
  const Matrix& dprev = cc.base().d(p - 1);
  const std::size_t prev_dim = cc.base().space(p - 1).dim();
  std::vector<Vector> theta;
  for (const auto& part : parts) {
    if (dprev.rows() != part.size()) {
      // above the top base degree both sides are zero
      theta.push_back(zero_vector(prev_dim));
      continue;
    }
    auto sol = solve(dprev, part);
    if (!sol) return std::nullopt;
    theta.push_back(std::move(*sol));
  }
  const Vector stacked = reassemble(theta);
  const Matrix ext = unit_weighted ? maps.extend_unit_weighted(d, p - 1) : maps.extend(d, p - 1);
  const Vector delta = stacked.empty() ? zero_vector(ext.rows()) : ext * stacked;
  return lambda - cc.current().d(p - 1) * delta;
}

bool in_R_and_Z(const CurrentCohomology& cc, std::size_t p, const Vector& theta) {
  return cc.current_h(p).cocycles().contains(theta) && cc.R_subspace(p).contains(theta);
}

}  // namespace

SesReport verify_ses(const CurrentCohomology& cc) {
  SesReport report;
  const std::size_t m = cc.coeff_dim();
  for (std::size_t p = 0; p <= cc.top_degree(); ++p) {
    const auto& hc = cc.current_h(p);
    const auto& hb = cc.base_h(p);
    const Matrix& a = cc.alpha(p);
    SesRow row;
    row.degree = p;
    row.dim_current_h = hc.dim();
    row.dim_q = cc.Q_space(p).dim();
    row.dim_base_h = hb.dim();
    row.m = m;
    row.alpha_surjective = rank(a) == m * hb.dim();
    const Subspace kernel = kernel_basis(a);
    row.kernel_equals_q = kernel == cc.Q_space(p);
    row.dims_exact = row.dim_current_h == row.dim_q + m * row.dim_base_h;
    row.coboundaries_in_cocycles = hc.cocycles().contains(hc.coboundaries()) && hb.cocycles().contains(hb.coboundaries());
    row.kernel_witness = true;
    if (p == 0) {
      row.kernel_witness = kernel.dim() == 0;
    } else {
      const Matrix reps = hc.representatives();
      for (std::size_t k = 0; k < kernel.dim() && row.kernel_witness; ++k) {
        const Vector lambda = reps * kernel.basis_vector(k);
        auto theta = strip_coboundary(cc, p, lambda, true);
        row.kernel_witness = theta && in_R_and_Z(cc, p, *theta);
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

VerificationReport ses_as_checks(const SesReport& ses) {
  VerificationReport report("ses");
  for (const auto& r : ses.rows) {
    const int deg = static_cast<int>(r.degree);
    report.add("alpha surjective", deg, r.alpha_surjective);
    report.add("ker alpha = Q", deg, r.kernel_equals_q);
    report.add("dim H(g⊗S) = dim Q + m·dim H(g)", deg, r.dims_exact,
               std::to_string(r.dim_current_h) + " = " + std::to_string(r.dim_q) + " + " + std::to_string(r.m) + "·" +
                   std::to_string(r.dim_base_h));
    report.add("ker alpha classes have Z∩R representatives", deg, r.kernel_witness);
    report.add("B ⊆ Z", deg, r.coboundaries_in_cocycles);
  }
  return report;
}

VerificationReport verify_semisimple(const CurrentCohomology& cc) {
  const auto& g = cc.base().rep().algebra();
  if (!g.marked_semisimple()) throw HypothesisFailed(g.name() + " is not marked semisimple");
  for (std::size_t p = 0; p <= cc.base().lie_dim(); ++p) {
    if (cc.base_h(p).dim() != 0) {
      throw HypothesisFailed("H^" + std::to_string(p) + "(g;V) has dimension " + std::to_string(cc.base_h(p).dim()) +
                             ", the vanishing hypothesis fails");
    }
  }
  VerificationReport report("semisimple");
  const std::size_t d = cc.module_dim();
  const std::size_t m = cc.coeff_dim();
  for (std::size_t p = 0; p <= cc.top_degree(); ++p) {
    const int deg = static_cast<int>(p);
    const auto& hc = cc.current_h(p);
    report.add("Z = Z∩R + B", deg, cc.Q_cochains(p) == hc.cocycles());
    report.add("Q = H(g⊗S)", deg, cc.Q_space(p) == Subspace::full(hc.dim()));
    if (p == 0) {
      report.add("H^0(g⊗S) = 0", deg, hc.dim() == 0);
      continue;
    }
    const auto& maps = cc.maps();
    const Matrix lhs = cc.current().d(p - 1) * maps.extend(d, p - 1);
    const Matrix dprev = p - 1 <= cc.base().lie_dim() ? cc.base().d(p - 1) : Matrix();
    const Matrix rhs = dprev.rows() == maps.base_space(d, p).dim() && dprev.cols() == maps.base_space(d, p - 1).dim()
                           ? maps.extend(d, p) * dprev.kron_identity(m)
                           : Matrix(lhs.rows(), lhs.cols());
    report.add("D∘Omega = Omega∘d", deg, lhs == rhs);
    bool ok = true;
    for (std::size_t k = 0; k < hc.cocycles().dim() && ok; ++k) {
      auto theta = strip_coboundary(cc, p, hc.cocycles().basis_vector(k), false);
      ok = theta && in_R_and_Z(cc, p, *theta);
    }
    report.add("cocycle = D Omega + Theta with Theta ∈ Z∩R", deg, ok);
  }
  return report;
}

}  // namespace curlie
