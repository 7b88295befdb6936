#include <gtest/gtest.h>

#include <random>

#include "curlie/catalog.hpp"
#include "curlie/cochain.hpp"
#include "curlie/current.hpp"
#include "curlie/errors.hpp"
#include "oracle.hpp"

using namespace curlie;

namespace {

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(static_cast<long>(rng() % 7) - 3);
  return v;
}

std::vector<Representation> sample_reps() {
  std::vector<Representation> reps;
  for (const auto& g : {catalog::abelian(3), catalog::solvable2(), catalog::heisenberg3(), catalog::sl2()}) {
    reps.push_back(catalog::trivial(g));
    reps.push_back(catalog::adjoint(g));
    reps.push_back(catalog::natural(g));
  }
  reps.push_back(current_representation(catalog::adjoint(catalog::solvable2()), catalog::dual_numbers()));
  return reps;
}

}  // namespace

TEST(Wedge, BinomialAndRanks) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(3, 4), 0u);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (std::size_t p = 0; p <= n + 1; ++p) {
      WedgeBasis w(n, p);
      auto expected = oracle::increasing_tuples(n, p);
      ASSERT_EQ(w.size(), expected.size());
      for (std::size_t r = 0; r < w.size(); ++r) {
        EXPECT_EQ(w.tuple(r), expected[r]);
        EXPECT_EQ(w.rank(expected[r]), r);
      }
    }
  }
}

TEST(Wedge, SortWithSign) {
  Tuple t{2, 0, 1};
  EXPECT_EQ(sort_with_sign(t), 1);
  EXPECT_EQ(t, (Tuple{0, 1, 2}));
  Tuple u{1, 0};
  EXPECT_EQ(sort_with_sign(u), -1);
  Tuple r{1, 1};
  EXPECT_EQ(sort_with_sign(r), 0);
}

TEST(CochainSpace, Dimensions) {
  EXPECT_EQ(CochainSpace(3, 2, 2).dim(), 6u);
  EXPECT_EQ(CochainSpace(3, 2, 0).dim(), 2u);
  EXPECT_EQ(CochainSpace(3, 2, 4).dim(), 0u);
  EXPECT_EQ(CochainSpace(6, 6, 3).dim(), 120u);
}

TEST(Evaluate, Examples) {
  // λ = 2 (x0∧x1)^* on a two-dimensional algebra with trivial one-dimensional values
  Cochain lambda(CochainSpace(2, 1, 2), Vector{Rational(2)});
  EXPECT_EQ(evaluate_on_basis(lambda, {0, 1}), Vector{Rational(2)});
  EXPECT_EQ(evaluate_on_basis(lambda, {1, 0}), Vector{Rational(-2)});
  EXPECT_EQ(evaluate_on_basis(lambda, {1, 1}), Vector{Rational(0)});
  EXPECT_EQ(evaluate(lambda, {Vector{Rational(1), Rational(1)}, Vector{Rational(1), Rational(-1)}}),
            Vector{Rational(-4)});
  EXPECT_THROW(evaluate(lambda, {Vector{Rational(1), Rational(0)}}), ArityMismatch);
  Cochain zero = Cochain::zero(CochainSpace(2, 1, 0));
  EXPECT_EQ(evaluate(zero, {}), Vector{Rational(0)});
}

TEST(Evaluate, AgreesWithMultilinearExpansion) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const std::size_t p = rng() % (n + 1);
    const std::size_t d = 1 + rng() % 3;
    CochainSpace space(n, d, p);
    Vector coeffs = random_vector(space.dim(), rng);
    auto form = oracle::Form::from_flat(n, p, d, coeffs);
    std::vector<Vector> args;
    for (std::size_t t = 0; t < p; ++t) args.push_back(random_vector(n, rng));
    EXPECT_EQ(evaluate(Cochain(space, coeffs), args), form.on_vectors(args));
  }
}

TEST(Differential, MatchesPointwiseFormula) {
  for (const auto& rep : sample_reps()) {
    const std::size_t n = rep.algebra().dim();
    const std::size_t d = rep.module_dim();
    for (std::size_t p = 0; p < n; ++p) {
      Matrix dm = differential_matrix(rep, p);
      const std::size_t in_dim = CochainSpace(n, d, p).dim();
      auto expected = oracle::matrix_of(in_dim, [&](const Vector& x) {
        return oracle::differential(rep, oracle::Form::from_flat(n, p, d, x)).flat();
      });
      ASSERT_EQ(dm.rows(), expected.size());
      for (std::size_t r = 0; r < dm.rows(); ++r) EXPECT_EQ(dm.dense_row(r), expected[r]) << rep.name() << " p=" << p;
    }
  }
}

TEST(Differential, Sl2TrivialDegreeOne) {
  auto d1 = differential_matrix(catalog::trivial(catalog::sl2()), 1);
  // pairs in order (e,h), (e,f), (h,f)
  EXPECT_EQ(d1.column(0), (Vector{Rational(2), Rational(0), Rational(0)}));
  EXPECT_EQ(d1.column(1), (Vector{Rational(0), Rational(-1), Rational(0)}));
  EXPECT_EQ(d1.column(2), (Vector{Rational(0), Rational(0), Rational(2)}));
}

TEST(Differential, Sl2AdjointDegreeZero) {
  auto d0 = differential_matrix(catalog::adjoint(catalog::sl2()), 0);
  ASSERT_EQ(d0.rows(), 9u);
  // d(e)(h) = [h,e] = 2e and d(e)(f) = [f,e] = -h
  EXPECT_EQ(d0.at(1 * 3 + 0, 0), 2);
  EXPECT_EQ(d0.at(2 * 3 + 1, 0), -1);
  EXPECT_EQ(d0.at(0 * 3 + 0, 0), 0);
}

TEST(Differential, SquaresToZero) {
  for (const auto& rep : sample_reps()) {
    ChevalleyEilenbergComplex complex(rep);
    EXPECT_TRUE(verify_complex(complex).passed()) << rep.name();
    for (std::size_t p = 0; p + 1 <= complex.lie_dim(); ++p) {
      EXPECT_TRUE((complex.d(p + 1) * complex.d(p)).is_zero());
    }
  }
}

TEST(Differential, TopDegreeIsZeroMap) {
  ChevalleyEilenbergComplex c(catalog::adjoint(catalog::heisenberg3()));
  EXPECT_EQ(c.d(3).rows(), 0u);
  EXPECT_EQ(c.d(3).cols(), 3u);
}
