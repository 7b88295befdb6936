#include "curlie/cochain.hpp"

#include <algorithm>

#include "curlie/errors.hpp"
#include "curlie/subspace.hpp"

namespace curlie {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int sort_with_sign(Tuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] > t[j]; --j) {
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i - 1] == t[i]) return 0;
  }
  return sign;
}

WedgeBasis::WedgeBasis(std::size_t n, std::size_t p) : n_(n), p_(p), count_(binomial(n, p)) {
  flat_.reserve(count_ * p);
  if (count_ == 0 || p == 0) return;
  Tuple t(p);
  for (std::size_t i = 0; i < p; ++i) t[i] = i;
  while (true) {
    flat_.insert(flat_.end(), t.begin(), t.end());
    std::size_t i = p;
    while (i > 0 && t[i - 1] == n - p + i - 1) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < p; ++j) t[j] = t[j - 1] + 1;
  }
}

Tuple WedgeBasis::tuple(std::size_t r) const {
  if (r >= count_) throw IndexOutOfRange("wedge basis rank out of range");
  return Tuple(flat_.begin() + r * p_, flat_.begin() + (r + 1) * p_);
}

std::size_t WedgeBasis::rank(const Tuple& t) const {
  if (t.size() != p_) throw ArityMismatch("tuple length differs from degree");
  if (p_ == 0) return 0;
  std::uint64_t r = count_ - 1;
  for (std::size_t i = 0; i < p_; ++i) {
    if (t[i] >= n_ || (i > 0 && t[i] <= t[i - 1])) throw IndexOutOfRange("tuple is not strictly increasing in range");
    r -= binomial(n_ - 1 - t[i], p_ - i);
  }
  return static_cast<std::size_t>(r);
}

CochainSpace::CochainSpace(std::size_t lie_dim, std::size_t module_dim, std::size_t degree)
    : lie_dim_(lie_dim), module_dim_(module_dim), degree_(degree),
      wedge_(std::make_shared<const WedgeBasis>(lie_dim, degree)) {}

Cochain::Cochain(CochainSpace s, Vector c) : space(std::move(s)), coeffs(std::move(c)) {
  if (coeffs.size() != space.dim()) throw LengthMismatch("coefficient vector length differs from cochain space dimension");
}

Vector evaluate(const Cochain& c, const std::vector<Vector>& args) {
  const auto& sp = c.space;
  const std::size_t p = sp.degree();
  const std::size_t d = sp.module_dim();
  if (args.size() != p) throw ArityMismatch("argument count differs from cochain degree");
  for (const auto& a : args) {
    if (a.size() != sp.lie_dim()) throw LengthMismatch("argument length differs from Lie algebra dimension");
  }
  if (p == 0) return c.coeffs;
  Vector out = zero_vector(d);
  for (std::size_t r = 0; r < sp.wedge().size(); ++r) {
    bool nonzero = false;
    for (std::size_t v = 0; v < d && !nonzero; ++v) nonzero = !is_zero(c.coeffs[r * d + v]);
    if (!nonzero) continue;
    const Tuple t = sp.wedge().tuple(r);
    Matrix minor(p, p);
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) minor.set(a, b, args[b][t[a]]);
    }
    Rational det = determinant(minor);
    if (is_zero(det)) continue;
    for (std::size_t v = 0; v < d; ++v) out[v] += det * c.coeffs[r * d + v];
  }
  return out;
}

Vector evaluate_on_basis(const Cochain& c, const Tuple& indices) {
  const auto& sp = c.space;
  const std::size_t d = sp.module_dim();
  if (indices.size() != sp.degree()) throw ArityMismatch("argument count differs from cochain degree");
  for (std::size_t i : indices) {
    if (i >= sp.lie_dim()) throw IndexOutOfRange("Lie algebra basis index out of range");
  }
  Tuple t = indices;
  int sign = sort_with_sign(t);
  Vector out = zero_vector(d);
  if (sign == 0) return out;
  std::size_t base = sp.wedge().rank(t) * d;
  for (std::size_t v = 0; v < d; ++v) out[v] = sign * c.coeffs[base + v];
  return out;
}

namespace {

Tuple without(const Tuple& t, std::size_t a) {
  Tuple out;
  out.reserve(t.size() - 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != a) out.push_back(t[i]);
  }
  return out;
}

SparseRow combine(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.col < y.col; });
  SparseRow row;
  for (auto& e : entries) {
    if (!row.empty() && row.back().col == e.col) {
      row.back().value += e.value;
      if (is_zero(row.back().value)) row.pop_back();
    } else if (!is_zero(e.value)) {
      row.push_back(std::move(e));
    }
  }
  return row;
}

}  // namespace

Matrix differential_matrix(const Representation& rep, std::size_t p) {
  const LieAlgebra& g = rep.algebra();
  const std::size_t n = g.dim();
  const std::size_t d = rep.module_dim();
  CochainSpace source(n, d, p);
  CochainSpace target(n, d, p + 1);
  Matrix out(target.dim(), source.dim());
  if (out.rows() == 0 || out.cols() == 0) return out;
  const WedgeBasis& tw = target.wedge();
  const WedgeBasis& sw = source.wedge();

  std::vector<Entry> entries;
  for (std::size_t r = 0; r < tw.size(); ++r) {
    const Tuple J = tw.tuple(r);
    for (std::size_t w = 0; w < d; ++w) {
      entries.clear();
      // (-1)^a ρ(x_{J[a]}) λ(J without position a)
      for (std::size_t a = 0; a <= p; ++a) {
        const Rational sign = (a % 2 == 0) ? 1 : -1;
        const std::size_t base = sw.rank(without(J, a)) * d;
        for (const auto& e : rep.action(J[a]).row(w)) entries.push_back({base + e.col, sign * e.value});
      }
      // (-1)^{a+b} λ([x_{J[a]}, x_{J[b]}], rest)
      for (std::size_t a = 0; a <= p; ++a) {
        for (std::size_t b = a + 1; b <= p; ++b) {
          const auto br = g.bracket(J[a], J[b]);
          if (br.empty()) continue;
          const int outer = ((a + b) % 2 == 0) ? 1 : -1;
          const Tuple rest = without(without(J, b), a);
          for (const auto& term : br) {
            if (std::binary_search(rest.begin(), rest.end(), term.index)) continue;
            Tuple t;
            t.reserve(p);
            std::size_t smaller = 0;
            for (std::size_t x : rest) smaller += (x < term.index) ? 1 : 0;
            t.insert(t.end(), rest.begin(), rest.begin() + smaller);
            t.push_back(term.index);
            t.insert(t.end(), rest.begin() + smaller, rest.end());
            const int sign = (smaller % 2 == 0) ? outer : -outer;
            entries.push_back({sw.rank(t) * d + w, sign * term.coeff});
          }
        }
      }
      out.set_row(r * d + w, combine(std::move(entries)));
      entries = {};
    }
  }
  return out;
}

ChevalleyEilenbergComplex::ChevalleyEilenbergComplex(Representation rep) : rep_(std::move(rep)) {
  const std::size_t n = lie_dim();
  d_.reserve(n + 1);
  for (std::size_t p = 0; p <= n; ++p) d_.push_back(differential_matrix(rep_, p));
}

const Matrix& ChevalleyEilenbergComplex::d(std::size_t p) const {
  static const Matrix empty;
  if (p < d_.size()) return d_[p];
  return empty;
}

VerificationReport verify_complex(const ChevalleyEilenbergComplex& complex) {
  VerificationReport report("complex");
  for (std::size_t p = 0; p <= complex.lie_dim(); ++p) {
    const Matrix& d0 = complex.d(p);
    const Matrix& d1 = complex.d(p + 1);
    bool ok = d1.cols() == d0.rows() ? (d1 * d0).is_zero() : d0.rows() == 0;
    report.add("d∘d = 0", static_cast<int>(p), ok);
  }
  return report;
}

}  // namespace curlie
