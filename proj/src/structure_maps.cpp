#include "curlie/structure_maps.hpp"

#include "curlie/errors.hpp"

namespace curlie {

CochainMap::CochainMap(CochainSpace s, CochainSpace t, Matrix m)
    : source(std::move(s)), target(std::move(t)), matrix(std::move(m)) {
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
    throw LengthMismatch("cochain map matrix shape differs from its spaces");
  }
}

CurrentMaps::CurrentMaps(std::size_t base_dim, CommAssocAlgebra s) : n_(base_dim), s_(std::move(s)) {}

std::size_t CurrentMaps::one_rank(const Tuple& base, std::size_t p) const {
  Tuple t(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) t[i] = base[i] * coeff_dim();
  return WedgeBasis(current_dim(), p).rank(t);
}

const std::vector<std::vector<CurrentMaps::Expansion>>& CurrentMaps::expansions(std::size_t p) const {
  auto it = expansion_cache_.find(p);
  if (it != expansion_cache_.end()) return it->second;

  const std::size_t m = coeff_dim();
  WedgeBasis base(n_, p);
  WedgeBasis current(current_dim(), p);
  Vector unit = zero_vector(m);
  unit[0] = 1;

  std::vector<std::vector<Expansion>> out(base.size());
  for (std::size_t r = 0; r < base.size(); ++r) {
    const Tuple t = base.tuple(r);
    std::vector<std::size_t> b(p, 0);
    while (true) {
      Tuple J(p);
      Vector tbar = unit;
      for (std::size_t i = 0; i < p; ++i) {
        J[i] = t[i] * m + b[i];
        Vector factor = zero_vector(m);
        factor[b[i]] = 1;
        tbar = s_.multiply(tbar, factor);
      }
      out[r].push_back({current.rank(J), std::move(tbar)});
      std::size_t i = p;
      while (i > 0 && b[i - 1] == m - 1) b[--i] = 0;
      if (i == 0) break;
      ++b[i - 1];
    }
  }
  return expansion_cache_.emplace(p, std::move(out)).first->second;
}

Matrix CurrentMaps::chi(std::size_t d, std::size_t p, std::size_t j) const {
  const std::size_t m = coeff_dim();
  if (j >= m) throw IndexOutOfRange("component index out of range");
  const std::size_t tuples = WedgeBasis(current_dim(), p).size();
  Matrix out(tuples * d, tuples * d * m);
  for (std::size_t R = 0; R < tuples; ++R) {
    for (std::size_t v = 0; v < d; ++v) out.set_row(R * d + v, {{R * d * m + v * m + j, Rational(1)}});
  }
  return out;
}

Matrix CurrentMaps::restrict_L(std::size_t d, std::size_t p) const {
  WedgeBasis base(n_, p);
  const std::size_t tuples = WedgeBasis(current_dim(), p).size();
  Matrix out(base.size() * d, tuples * d);
  for (std::size_t r = 0; r < base.size(); ++r) {
    const std::size_t R = one_rank(base.tuple(r), p);
    for (std::size_t v = 0; v < d; ++v) out.set_row(r * d + v, {{R * d + v, Rational(1)}});
  }
  return out;
}

Matrix CurrentMaps::components(std::size_t d, std::size_t p) const {
  const std::size_t m = coeff_dim();
  WedgeBasis base(n_, p);
  const std::size_t tuples = WedgeBasis(current_dim(), p).size();
  Matrix out(base.size() * d * m, tuples * d * m);
  for (std::size_t r = 0; r < base.size(); ++r) {
    const std::size_t R = one_rank(base.tuple(r), p);
    for (std::size_t v = 0; v < d; ++v) {
      for (std::size_t j = 0; j < m; ++j) {
        out.set_row((r * d + v) * m + j, {{R * d * m + v * m + j, Rational(1)}});
      }
    }
  }
  return out;
}

Matrix CurrentMaps::extend(std::size_t d, std::size_t p) const {
  const std::size_t m = coeff_dim();
  const auto& exp = expansions(p);
  const std::size_t tuples = WedgeBasis(current_dim(), p).size();
  Matrix out(tuples * d * m, exp.size() * d * m);
  for (std::size_t r = 0; r < exp.size(); ++r) {
    for (const auto& e : exp[r]) {
      for (std::size_t a = 0; a < m; ++a) {
        Vector sa = zero_vector(m);
        sa[a] = 1;
        const Vector prod = s_.multiply(sa, e.tbar);
        for (std::size_t c = 0; c < m; ++c) {
          if (is_zero(prod[c])) continue;
          for (std::size_t w = 0; w < d; ++w) out.add(e.row_tuple * d * m + w * m + c, (r * d + w) * m + a, prod[c]);
        }
      }
    }
  }
  return out;
}

Matrix CurrentMaps::extend_unit_weighted(std::size_t d, std::size_t p) const {
  const std::size_t m = coeff_dim();
  const auto& exp = expansions(p);
  const std::size_t tuples = WedgeBasis(current_dim(), p).size();
  Matrix out(tuples * d * m, exp.size() * d * m);
  for (std::size_t r = 0; r < exp.size(); ++r) {
    for (const auto& e : exp[r]) {
      if (is_zero(e.tbar[0])) continue;
      for (std::size_t w = 0; w < d; ++w) {
        for (std::size_t j = 0; j < m; ++j) out.add(e.row_tuple * d * m + w * m + j, (r * d + w) * m + j, e.tbar[0]);
      }
    }
  }
  return out;
}

CochainMap CurrentMaps::lift(const CochainMap& f) const {
  if (f.source.lie_dim() != n_ || f.target.lie_dim() != n_) {
    throw LengthMismatch("cochain map is not over the base Lie algebra");
  }
  const std::size_t ps = f.source.degree();
  const std::size_t pt = f.target.degree();
  if (ps > 0 && pt > 0 && ps != pt) throw DegreeMismatch("lift needs equal degrees or a module on one side");
  if (ps > 0 && pt > 0) return lift_T_cochain_map(*this, f);
  if (ps == 0 && pt > 0) return lift_T_from_module(*this, f);
  if (ps > 0) return lift_T_to_module(*this, f);
  return lift_T_module_map(*this, f);
}

namespace {

void require_current_source(const CurrentMaps& maps, const CochainSpace& sp) {
  if (sp.lie_dim() != maps.current_dim()) throw NotACurrentSource("cochain is not defined on the current algebra");
}

}  // namespace

Cochain CurrentMaps::chi(const Cochain& big, std::size_t j) const {
  require_current_source(*this, big.space);
  const std::size_t m = coeff_dim();
  if (big.space.module_dim() % m != 0) throw NotACurrentSource("module is not a tensor product with S");
  if (j >= m) throw IndexOutOfRange("component index out of range");
  const std::size_t d = big.space.module_dim() / m;
  CochainSpace target(current_dim(), d, big.space.degree());
  return Cochain(target, chi(d, big.space.degree(), j) * big.coeffs);
}

Cochain CurrentMaps::restrict_L(const Cochain& c) const {
  require_current_source(*this, c.space);
  const std::size_t d = c.space.module_dim();
  const std::size_t p = c.space.degree();
  return Cochain(base_space(d, p), restrict_L(d, p) * c.coeffs);
}

CochainMap lift_T_cochain_map(const CurrentMaps& maps, const CochainMap& f) {
  const std::size_t p = f.source.degree();
  if (p == 0 || f.target.degree() != p) throw DegreeMismatch("expected a map C^p -> C^p with p > 0");
  const std::size_t dv = f.source.module_dim();
  const std::size_t dw = f.target.module_dim();
  Matrix m = maps.extend(dw, p) * (f.matrix.kron_identity(maps.coeff_dim()) * maps.components(dv, p));
  return CochainMap(maps.current_space(dv, p), maps.current_space(dw, p), std::move(m));
}

CochainMap lift_T_from_module(const CurrentMaps& maps, const CochainMap& f) {
  const std::size_t p = f.target.degree();
  if (f.source.degree() != 0 || p == 0) throw DegreeMismatch("expected a map V -> C^p with p > 0");
  const std::size_t dv = f.source.module_dim();
  const std::size_t dw = f.target.module_dim();
  Matrix m = maps.extend(dw, p) * f.matrix.kron_identity(maps.coeff_dim());
  return CochainMap(maps.current_space(dv, 0), maps.current_space(dw, p), std::move(m));
}

CochainMap lift_T_to_module(const CurrentMaps& maps, const CochainMap& f) {
  const std::size_t p = f.source.degree();
  if (f.target.degree() != 0 || p == 0) throw DegreeMismatch("expected a map C^p -> W with p > 0");
  const std::size_t dv = f.source.module_dim();
  const std::size_t dw = f.target.module_dim();
  Matrix m = f.matrix.kron_identity(maps.coeff_dim()) * maps.components(dv, p);
  return CochainMap(maps.current_space(dv, p), maps.current_space(dw, 0), std::move(m));
}

CochainMap lift_T_module_map(const CurrentMaps& maps, const CochainMap& f) {
  if (f.source.degree() != 0 || f.target.degree() != 0) throw DegreeMismatch("expected a map V -> W");
  return CochainMap(maps.current_space(f.source.module_dim(), 0), maps.current_space(f.target.module_dim(), 0),
                    f.matrix.kron_identity(maps.coeff_dim()));
}

bool is_T_identity_fixed(const CurrentMaps& maps, std::size_t d, const Cochain& big) {
  const std::size_t p = big.space.degree();
  auto base = maps.base_space(d, p);
  auto lifted = maps.lift(CochainMap(base, base, Matrix::identity(base.dim())));
  return lifted.matrix * big.coeffs == big.coeffs;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < cols; ++c) {
      long value = static_cast<long>(rng() % 7) - 3;
      if (value != 0) row.push_back({c, Rational(value)});
    }
    m.set_row(r, std::move(row));
  }
  return m;
}

const std::vector<CompositionCase>& all_composition_cases() {
  static const std::vector<CompositionCase> cases{
      CompositionCase::CochainCochain,       CompositionCase::ModuleCochainModule,
      CompositionCase::CochainCochainModule, CompositionCase::CochainModuleModule,
      CompositionCase::ModuleModuleCochain,  CompositionCase::CochainModuleCochain,
  };
  return cases;
}

std::string to_string(CompositionCase c) {
  switch (c) {
    case CompositionCase::CochainCochain: return "C^p(U)->C^p(V)->C^p(W)";
    case CompositionCase::ModuleCochainModule: return "U->C^p(V)->W";
    case CompositionCase::CochainCochainModule: return "C^p(U)->C^p(V)->W";
    case CompositionCase::CochainModuleModule: return "C^p(U)->V->W";
    case CompositionCase::ModuleModuleCochain: return "U->V->C^p(W)";
    case CompositionCase::CochainModuleCochain: return "C^p(U)->V->C^p(W)";
  }
  return "unknown";
}

bool T_composition_holds(const CurrentMaps& maps, const CochainMap& f, const CochainMap& g) {
  CochainMap gf(f.source, g.target, g.matrix * f.matrix);
  return maps.lift(gf).matrix == maps.lift(g).matrix * maps.lift(f).matrix;
}

VerificationReport verify_T_composition(const CurrentMaps& maps, CompositionCase c, ModuleDims dims, std::size_t p,
                                        std::size_t trials, std::uint64_t seed) {
  VerificationReport report("functor");
  if (p == 0) throw DegreeMismatch("composition cases need a positive degree");
  std::mt19937_64 rng(seed);
  const bool x_cochain = c == CompositionCase::CochainCochain || c == CompositionCase::CochainCochainModule ||
                         c == CompositionCase::CochainModuleModule || c == CompositionCase::CochainModuleCochain;
  const bool y_cochain = c == CompositionCase::CochainCochain || c == CompositionCase::ModuleCochainModule ||
                         c == CompositionCase::CochainCochainModule;
  const bool z_cochain = c == CompositionCase::CochainCochain || c == CompositionCase::ModuleModuleCochain ||
                         c == CompositionCase::CochainModuleCochain;
  auto X = maps.base_space(dims.u, x_cochain ? p : 0);
  auto Y = maps.base_space(dims.v, y_cochain ? p : 0);
  auto Z = maps.base_space(dims.w, z_cochain ? p : 0);
  std::size_t failures = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    CochainMap f(X, Y, random_matrix(Y.dim(), X.dim(), rng));
    CochainMap g(Y, Z, random_matrix(Z.dim(), Y.dim(), rng));
    if (!T_composition_holds(maps, f, g)) ++failures;
  }
  report.add("T(g∘f) = T(g)∘T(f) " + to_string(c), static_cast<int>(p), failures == 0,
             std::to_string(trials - failures) + "/" + std::to_string(trials) + " trials equal");
  return report;
}

VerificationReport verify_restriction_commutes(const CurrentMaps& maps, const ChevalleyEilenbergComplex& base,
                                 const ChevalleyEilenbergComplex& current) {
  VerificationReport report("restriction");
  const std::size_t d = base.module_dim();
  const std::size_t m = maps.coeff_dim();
  for (std::size_t p = 0; p <= maps.current_dim(); ++p) {
    bool ok = true;
    const Matrix L0 = maps.restrict_L(d, p);
    const Matrix L1 = maps.restrict_L(d, p + 1);
    const Matrix& D = current.d(p);
    const Matrix dbase = p < base.lie_dim() ? base.d(p) : Matrix(L1.rows(), L0.rows());
    for (std::size_t j = 0; j < m && ok; ++j) {
      const Matrix chi0 = maps.chi(d, p, j);
      const Matrix chi1 = maps.chi(d, p + 1, j);
      Matrix lhs = p < maps.current_dim() ? L1 * (chi1 * D) : Matrix(L1.rows(), chi0.cols());
      Matrix rhs = dbase * (L0 * chi0);
      ok = lhs == rhs;
    }
    report.add("L∘chi_j∘D = d∘L∘chi_j", static_cast<int>(p), ok);
  }
  return report;
}

bool is_chain_map(const GradedMap& f, const ChevalleyEilenbergComplex& v, const ChevalleyEilenbergComplex& w) {
  const std::size_t n = v.lie_dim();
  if (f.size() != n + 1) return false;
  for (std::size_t p = 0; p < n; ++p) {
    if (!(w.d(p) * f[p] == f[p + 1] * v.d(p))) return false;
  }
  return true;
}

GradedMap homotopy_chain_map(const ChevalleyEilenbergComplex& v, const ChevalleyEilenbergComplex& w,
                             std::mt19937_64& rng) {
  const std::size_t n = v.lie_dim();
  // h[p] : C^p(V) → C^{p-1}(W) for 1 ≤ p ≤ n
  std::vector<Matrix> h(n + 2);
  for (std::size_t p = 1; p <= n; ++p) h[p] = random_matrix(w.space(p - 1).dim(), v.space(p).dim(), rng);
  GradedMap f;
  for (std::size_t p = 0; p <= n; ++p) {
    Matrix term(w.space(p).dim(), v.space(p).dim());
    if (p >= 1) term = term + w.d(p - 1) * h[p];
    if (p + 1 <= n) term = term + h[p + 1] * v.d(p);
    f.push_back(std::move(term));
  }
  return f;
}

GradedMap scalar_identity(const ChevalleyEilenbergComplex& v, const Rational& c) {
  GradedMap f;
  for (std::size_t p = 0; p <= v.lie_dim(); ++p) f.push_back(Matrix::identity(v.space(p).dim()).scaled(c));
  return f;
}

GradedMap zero_map(const ChevalleyEilenbergComplex& v, const ChevalleyEilenbergComplex& w) {
  GradedMap f;
  for (std::size_t p = 0; p <= v.lie_dim(); ++p) f.emplace_back(w.space(p).dim(), v.space(p).dim());
  return f;
}

std::vector<Matrix> lift_graded(const CurrentMaps& maps, const GradedMap& f, std::size_t dv, std::size_t dw) {
  std::vector<Matrix> out;
  for (std::size_t p = 0; p <= maps.current_dim(); ++p) {
    auto src = maps.base_space(dv, p);
    auto dst = maps.base_space(dw, p);
    Matrix fp = p < f.size() ? f[p] : Matrix(dst.dim(), src.dim());
    out.push_back(maps.lift(CochainMap(src, dst, fp)).matrix);
  }
  return out;
}

VerificationReport verify_map_of_complexes(const CurrentMaps& maps, const GradedMap& f,
                                           const ChevalleyEilenbergComplex& base_v,
                                           const ChevalleyEilenbergComplex& base_w,
                                           const ChevalleyEilenbergComplex& current_v,
                                           const ChevalleyEilenbergComplex& current_w) {
  VerificationReport report("complexmap");
  if (!is_chain_map(f, base_v, base_w)) {
    report.hypothesis_failed = true;
    report.hypothesis_detail = "f does not commute with d";
    return report;
  }
  const auto lifted = lift_graded(maps, f, base_v.module_dim(), base_w.module_dim());
  for (std::size_t p = 0; p < maps.current_dim(); ++p) {
    bool ok = current_w.d(p) * lifted[p] == lifted[p + 1] * current_v.d(p);
    report.add("D∘T(f) = T(f)∘D", static_cast<int>(p), ok);
  }
  return report;
}

}  // namespace curlie
