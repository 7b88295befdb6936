#pragma once

// Slow reference implementations written directly from the pointwise
// definitions. They share no code with the library beyond the scalar and
// vector types.

#include <cstddef>
#include <functional>
#include <vector>

#include "curlie/algebra.hpp"

namespace oracle {

using curlie::Rational;
using curlie::Vector;
using Indices = std::vector<std::size_t>;

inline std::vector<Indices> increasing_tuples(std::size_t n, std::size_t p) {
  std::vector<Indices> out;
  Indices cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == p) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Cochain stored as one module vector per increasing tuple, in the same
/// lexicographic order as increasing_tuples.
struct Form {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t d = 0;
  std::vector<Indices> tuples;
  std::vector<Vector> values;

  Form(std::size_t n_, std::size_t p_, std::size_t d_) : n(n_), p(p_), d(d_), tuples(increasing_tuples(n_, p_)) {
    values.assign(tuples.size(), Vector(d_, Rational(0)));
  }

  static Form from_flat(std::size_t n, std::size_t p, std::size_t d, const Vector& flat) {
    Form f(n, p, d);
    for (std::size_t r = 0; r < f.tuples.size(); ++r) {
      for (std::size_t v = 0; v < d; ++v) f.values[r][v] = flat.at(r * d + v);
    }
    return f;
  }

  Vector flat() const {
    Vector out;
    for (const auto& v : values) out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  /// Value on basis vectors in any order, with repeats giving zero.
  Vector on_basis(Indices idx) const {
    int sign = 1;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b + 1 < idx.size() - a; ++b) {
        if (idx[b] == idx[b + 1]) return Vector(d, Rational(0));
        if (idx[b] > idx[b + 1]) {
          std::swap(idx[b], idx[b + 1]);
          sign = -sign;
        }
      }
    }
    for (std::size_t b = 0; b + 1 < idx.size(); ++b) {
      if (idx[b] == idx[b + 1]) return Vector(d, Rational(0));
    }
    for (std::size_t r = 0; r < tuples.size(); ++r) {
      if (tuples[r] == idx) {
        Vector out = values[r];
        for (auto& x : out) x *= sign;
        return out;
      }
    }
    return Vector(d, Rational(0));
  }

  /// Multilinear expansion over every index tuple.
  Vector on_vectors(const std::vector<Vector>& args) const {
    Vector out(d, Rational(0));
    Indices idx(p, 0);
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t t, Rational w) {
      if (curlie::is_zero(w)) return;
      if (t == p) {
        Vector val = on_basis(idx);
        for (std::size_t v = 0; v < d; ++v) out[v] += w * val[v];
        return;
      }
      for (std::size_t i = 0; i < n; ++i) {
        idx[t] = i;
        rec(t + 1, w * args[t][i]);
      }
    };
    rec(0, Rational(1));
    return out;
  }
};

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v[i] = 1;
  return v;
}

inline Vector mat_vec(const std::vector<Vector>& rows_of_m, const Vector& x) {
  Vector out(rows_of_m.size(), Rational(0));
  for (std::size_t r = 0; r < rows_of_m.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += rows_of_m[r][c] * x[c];
  }
  return out;
}

/// (dλ)(y_0..y_p) = Σ_a (-1)^a ρ(y_a) λ(..ŷ_a..) + Σ_{a<b} (-1)^{a+b} λ([y_a,y_b], ..ŷ_a..ŷ_b..).
inline Form differential(const curlie::Representation& rep, const Form& lambda) {
  const auto& g = rep.algebra();
  const std::size_t n = g.dim();
  const std::size_t d = rep.module_dim();
  Form out(n, lambda.p + 1, d);
  for (std::size_t r = 0; r < out.tuples.size(); ++r) {
    const auto& J = out.tuples[r];
    std::vector<Vector> ys;
    for (std::size_t j : J) ys.push_back(unit_vector(n, j));
    Vector acc(d, Rational(0));
    for (std::size_t a = 0; a < ys.size(); ++a) {
      std::vector<Vector> rest;
      for (std::size_t t = 0; t < ys.size(); ++t) {
        if (t != a) rest.push_back(ys[t]);
      }
      Vector val = lambda.on_vectors(rest);
      Vector acted(d, Rational(0));
      for (std::size_t w = 0; w < d; ++w) {
        for (std::size_t v = 0; v < d; ++v) acted[w] += rep.action(J[a]).at(w, v) * val[v];
      }
      for (std::size_t w = 0; w < d; ++w) acc[w] += (a % 2 ? -1 : 1) * acted[w];
    }
    for (std::size_t a = 0; a < ys.size(); ++a) {
      for (std::size_t b = a + 1; b < ys.size(); ++b) {
        std::vector<Vector> args{g.bracket(ys[a], ys[b])};
        for (std::size_t t = 0; t < ys.size(); ++t) {
          if (t != a && t != b) args.push_back(ys[t]);
        }
        Vector val = lambda.on_vectors(args);
        for (std::size_t w = 0; w < d; ++w) acc[w] += ((a + b) % 2 ? -1 : 1) * val[w];
      }
    }
    out.values[r] = acc;
  }
  return out;
}

/// Matrix of a linear map given by its action on flat vectors, built column
/// by column and returned as rows.
inline std::vector<Vector> matrix_of(std::size_t in_dim, const std::function<Vector(const Vector&)>& f) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < in_dim; ++c) cols.push_back(f(unit_vector(in_dim, c)));
  const std::size_t out_dim = cols.empty() ? 0 : cols.front().size();
  std::vector<Vector> rows(out_dim, Vector(in_dim, Rational(0)));
  for (std::size_t c = 0; c < in_dim; ++c) {
    for (std::size_t r = 0; r < out_dim; ++r) rows[r][c] = cols[c][r];
  }
  return rows;
}

/// Product of S-basis elements s_{a_1} ⋯ s_{a_p} in S (the unit for p = 0).
inline Vector product_of(const curlie::CommAssocAlgebra& s, const Indices& factors) {
  Vector acc = unit_vector(s.dim(), 0);
  const auto t = s.table();
  for (std::size_t a : factors) {
    Vector next(s.dim(), Rational(0));
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t k = 0; k < s.dim(); ++k) next[k] += acc[i] * t(i, a, k);
    }
    acc = next;
  }
  return acc;
}

/// Restriction of a current cochain with values in V⊗S to arguments
/// x_i ⊗ 1, followed by the j-th S-component of the value.
inline Form restrict_component(const Form& big, std::size_t base_n, std::size_t m, std::size_t j) {
  const std::size_t d = big.d / m;
  Form out(base_n, big.p, d);
  for (std::size_t r = 0; r < out.tuples.size(); ++r) {
    Indices idx;
    for (std::size_t i : out.tuples[r]) idx.push_back(i * m);
    Vector val = big.on_basis(idx);
    for (std::size_t v = 0; v < d; ++v) out.values[r][v] = val[v * m + j];
  }
  return out;
}

/// Current cochain (x_{i_1}⊗s_{a_1}, …) ↦ Σ_j μ_j(x_{i_1}, …) ⊗ s_j·s_{a_1}⋯s_{a_p}
/// for base cochains μ_j with values in a module of dimension d.
inline Form extend_components(const std::vector<Form>& mu, const curlie::CommAssocAlgebra& s) {
  const std::size_t m = s.dim();
  const std::size_t n = mu.front().n;
  const std::size_t d = mu.front().d;
  const auto st = s.table();
  Form out(n * m, mu.front().p, d * m);
  for (std::size_t r = 0; r < out.tuples.size(); ++r) {
    Indices xs;
    Indices as;
    for (std::size_t f : out.tuples[r]) {
      xs.push_back(f / m);
      as.push_back(f % m);
    }
    Vector tbar = product_of(s, as);
    for (std::size_t j = 0; j < m; ++j) {
      Vector val = mu[j].on_basis(xs);
      for (std::size_t c = 0; c < m; ++c) {
        Rational coef = 0;
        for (std::size_t b = 0; b < m; ++b) coef += tbar[b] * st(j, b, c);
        if (curlie::is_zero(coef)) continue;
        for (std::size_t v = 0; v < d; ++v) out.values[r][v * m + c] += coef * val[v];
      }
    }
  }
  return out;
}

}  // namespace oracle
