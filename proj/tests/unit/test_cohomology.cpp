#include <gtest/gtest.h>

#include <random>

#include "curlie/catalog.hpp"
#include "curlie/cohomology.hpp"
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

/// dim H^p from ranks of differentials built by the pointwise oracle.
std::vector<std::size_t> reference_dims(const Representation& rep) {
  const std::size_t n = rep.algebra().dim();
  const std::size_t d = rep.module_dim();
  std::vector<std::size_t> ranks(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t in_dim = CochainSpace(n, d, p).dim();
    auto rows = oracle::matrix_of(in_dim, [&](const Vector& x) {
      return oracle::differential(rep, oracle::Form::from_flat(n, p, d, x)).flat();
    });
    ranks[p] = rank(Matrix::from_rows(rows, in_dim));
  }
  std::vector<std::size_t> dims;
  for (std::size_t p = 0; p <= n; ++p) {
    dims.push_back(CochainSpace(n, d, p).dim() - ranks[p] - (p ? ranks[p - 1] : 0));
  }
  return dims;
}

}  // namespace

TEST(Cohomology, KnownDimensions) {
  using V = std::vector<std::size_t>;
  EXPECT_EQ(cohomology_dims(catalog::trivial(catalog::abelian(3))), (V{1, 3, 3, 1}));
  EXPECT_EQ(cohomology_dims(catalog::adjoint(catalog::sl2())), (V{0, 0, 0, 0}));
  EXPECT_EQ(cohomology_dims(catalog::trivial(catalog::sl2())), (V{1, 0, 0, 1}));
  EXPECT_EQ(cohomology_dims(catalog::trivial(catalog::solvable2())), (V{1, 1, 0}));
  EXPECT_EQ(cohomology_dims(catalog::trivial(catalog::heisenberg3())), (V{1, 2, 2, 1}));
  EXPECT_EQ(cohomology_dims(catalog::trivial(catalog::abelian(1)), 3), (V{1, 1, 0, 0}));
}

TEST(Cohomology, AgreesWithReferenceRanks) {
  for (const auto& g : {catalog::solvable2(), catalog::heisenberg3(), catalog::sl2()}) {
    for (const auto& rep : {catalog::trivial(g), catalog::adjoint(g), catalog::natural(g)}) {
      EXPECT_EQ(cohomology_dims(rep), reference_dims(rep)) << g.name() << " " << rep.name();
    }
  }
  auto big = current_representation(catalog::natural(catalog::solvable2()), catalog::dual_numbers());
  EXPECT_EQ(cohomology_dims(big), reference_dims(big));
}

TEST(Cohomology, ClassCoordinates) {
  ChevalleyEilenbergComplex c(catalog::trivial(catalog::solvable2()));
  auto h1 = cohomology(c, 1);
  ASSERT_EQ(h1.dim(), 1u);
  // x* is a cocycle representing the generator, y* is not closed
  Vector x_star{Rational(1), Rational(0)};
  EXPECT_EQ(h1.coordinates(x_star).size(), 1u);
  EXPECT_THROW(h1.coordinates(Vector{Rational(0), Rational(1)}), NotACocycle);
  auto h2 = cohomology(c, 2);
  EXPECT_EQ(h2.dim(), 0u);
  EXPECT_EQ(cohomology(c, 5).dim(), 0u);
}

TEST(CurrentCohomologyTest, AbelianLineWithDualNumbers) {
  CurrentCohomology cc(catalog::trivial(catalog::abelian(1)), catalog::dual_numbers());
  EXPECT_EQ(cc.current_h(0).dim(), 2u);
  EXPECT_EQ(cc.current_h(1).dim(), 4u);
  EXPECT_EQ(cc.current_h(2).dim(), 2u);
  EXPECT_EQ(cc.R_subspace(0).dim(), 0u);
  EXPECT_EQ(cc.R_subspace(1).dim(), 2u);
  EXPECT_EQ(cc.Q_space(0).dim(), 0u);
  EXPECT_EQ(cc.Q_space(1).dim(), 2u);
  EXPECT_EQ(cc.Q_space(2).dim(), 2u);
  EXPECT_EQ(cc.alpha(0), Matrix::identity(2));
  EXPECT_EQ(rank(cc.alpha(1)), 2u);
  EXPECT_EQ(cc.alpha(2).rows(), 0u);
}

TEST(CurrentCohomologyTest, SesHoldsOnSamples) {
  for (const auto& rep : {catalog::trivial(catalog::abelian(1)), catalog::trivial(catalog::solvable2()),
                          catalog::natural(catalog::heisenberg3()), catalog::adjoint(catalog::sl2())}) {
    for (const auto& s : {catalog::dual_numbers(), catalog::split2()}) {
      CurrentCohomology cc(rep, s);
      auto ses = verify_ses(cc);
      EXPECT_TRUE(ses.passed()) << rep.algebra().name() << " " << s.name();
      for (const auto& row : ses.rows) {
        EXPECT_EQ(row.dim_current_h, row.dim_q + row.m * row.dim_base_h);
        EXPECT_EQ(row.dim_base_h, cc.base_h(row.degree).dim());
      }
    }
  }
}

TEST(CurrentCohomologyTest, DiagramsCommute) {
  for (const auto& rep : {catalog::trivial(catalog::solvable2()), catalog::adjoint(catalog::sl2())}) {
    CurrentCohomology cc(rep, catalog::dual_numbers());
    EXPECT_TRUE(verify_alpha_diagram(cc).passed());
    EXPECT_TRUE(verify_zeta_psi(cc).passed());
    EXPECT_TRUE(verify_degree_zero(cc).passed());
  }
}

TEST(CurrentCohomologyTest, ClassMapsIgnoreCoboundaries) {
  std::mt19937_64 rng(61);
  CurrentCohomology cc(catalog::natural(catalog::solvable2()), catalog::dual_numbers());
  const auto& D = cc.current().d(0);
  const auto& D1 = cc.current().d(1);
  auto z = cc.current_h(1).cocycles();
  for (int t = 0; t < 50; ++t) {
    Vector lambda = z.basis() * random_vector(z.dim(), rng);
    Vector shifted = lambda + D * random_vector(D.cols(), rng);
    EXPECT_TRUE(is_zero(D1 * shifted));
    EXPECT_EQ(cc.psi_of(1, shifted), cc.psi_of(1, lambda));
    EXPECT_EQ(cc.alpha_of(1, shifted), cc.alpha_of(1, lambda));
  }
}

TEST(CurrentCohomologyTest, AlphaRestrictsComponentsToUnitArguments) {
  // α of a cocycle Λ is Σ_j [𝓛(Λ_j)] ⊗ s_j; compare with the oracle restriction
  std::mt19937_64 rng(62);
  auto rep = catalog::trivial(catalog::solvable2());
  auto s = catalog::split2();
  CurrentCohomology cc(rep, s);
  auto z = cc.current_h(1).cocycles();
  for (int t = 0; t < 20; ++t) {
    Vector lambda = z.basis() * random_vector(z.dim(), rng);
    auto big = oracle::Form::from_flat(4, 1, 2, lambda);
    Vector expected(cc.base_h(1).dim() * 2, Rational(0));
    for (std::size_t j = 0; j < 2; ++j) {
      Vector h = cc.base_h(1).coordinates(oracle::restrict_component(big, 2, 2, j).flat());
      for (std::size_t k = 0; k < h.size(); ++k) expected[k * 2 + j] = h[k];
    }
    EXPECT_EQ(cc.alpha_of(1, lambda), expected);
  }
}

TEST(CurrentCohomologyTest, Naturality) {
  std::mt19937_64 rng(63);
  auto g = catalog::solvable2();
  auto s = catalog::dual_numbers();
  CurrentCohomology v(catalog::adjoint(g), s);
  CurrentCohomology w(catalog::natural(g), s);
  for (int t = 0; t < 5; ++t) {
    auto f = homotopy_chain_map(v.base(), w.base(), rng);
    EXPECT_TRUE(verify_naturality(v, w, f).passed());
  }
  EXPECT_TRUE(verify_naturality(v, v, scalar_identity(v.base(), Rational(3))).passed());
}

TEST(Semisimple, Sl2AdjointVanishingRoute) {
  for (const auto& s : {catalog::dual_numbers(), catalog::split2()}) {
    CurrentCohomology cc(catalog::adjoint(catalog::sl2()), s);
    auto r = verify_semisimple(cc);
    EXPECT_TRUE(r.passed()) << s.name();
    for (std::size_t p = 0; p <= 3; ++p) EXPECT_EQ(cc.current_h(p).dim(), cc.Q_space(p).dim());
  }
}

TEST(Semisimple, HypothesisFailures) {
  CurrentCohomology trivial(catalog::trivial(catalog::sl2()), catalog::dual_numbers());
  EXPECT_THROW(verify_semisimple(trivial), HypothesisFailed);
  CurrentCohomology solvable(catalog::adjoint(catalog::solvable2()), catalog::dual_numbers());
  EXPECT_THROW(verify_semisimple(solvable), HypothesisFailed);
}
