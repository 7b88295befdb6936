#include <gtest/gtest.h>

#include <random>

#include "curlie/catalog.hpp"
#include "curlie/errors.hpp"

using namespace curlie;

namespace {

StructureTable sl2_table() {
  // basis e, h, f
  StructureTable t(3);
  t(1, 0, 0) = 2;
  t(0, 1, 0) = -2;
  t(1, 2, 2) = -2;
  t(2, 1, 2) = 2;
  t(0, 2, 1) = 1;
  t(2, 0, 1) = -1;
  return t;
}

bool has_kind(const ValidationReport& r, const std::string& kind) {
  for (const auto& v : r.violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

Vector random_vector(std::size_t n, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(static_cast<long>(rng() % 7) - 3);
  return v;
}

}  // namespace

TEST(ValidateLie, AcceptsSl2) { EXPECT_TRUE(validate_lie(sl2_table()).ok()); }

TEST(ValidateLie, RejectsAntisymmetryBreak) {
  auto t = sl2_table();
  t(0, 2, 1) = 2;
  auto r = validate_lie(t);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_kind(r, "antisymmetry"));
}

TEST(ValidateLie, RejectsNonzeroSelfBracket) {
  StructureTable t(2);
  t(0, 0, 1) = 1;
  EXPECT_TRUE(has_kind(validate_lie(t), "antisymmetry"));
}

TEST(ValidateLie, RejectsJacobiBreak) {
  // antisymmetric but [x,y]=y, [y,z]=x, [x,z]=0 fails Jacobi
  StructureTable t(3);
  t(0, 1, 1) = 1;
  t(1, 0, 1) = -1;
  t(1, 2, 0) = 1;
  t(2, 1, 0) = -1;
  auto r = validate_lie(t);
  EXPECT_TRUE(has_kind(r, "jacobi"));
  EXPECT_FALSE(has_kind(r, "antisymmetry"));
  EXPECT_THROW(LieAlgebra::create("bad", {"x", "y", "z"}, t), ValidationError);
}

TEST(ValidateLie, RandomPerturbationsOfSl2AreDetected) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    auto t = sl2_table();
    std::size_t i = rng() % 3;
    std::size_t j = rng() % 3;
    std::size_t k = rng() % 3;
    t(i, j, k) += 1 + static_cast<long>(rng() % 3);
    EXPECT_FALSE(validate_lie(t).ok());
  }
}

TEST(ValidateAssoc, DualNumbers) {
  StructureTable t(2);
  t(0, 0, 0) = 1;
  t(0, 1, 1) = 1;
  t(1, 0, 1) = 1;
  EXPECT_TRUE(validate_assoc(t, 0).ok());
  EXPECT_TRUE(has_kind(validate_assoc(t, 1), "unit"));
  auto bad = t;
  bad(0, 1, 1) = 2;
  EXPECT_FALSE(validate_assoc(bad, 0).ok());
}

TEST(ValidateAssoc, DetectsNonAssociative) {
  // basis 1, a, b with a*a = b, a*b = a, b*b = a: (a*a)*b = a but a*(a*b) = b
  StructureTable t(3);
  for (std::size_t i = 0; i < 3; ++i) {
    t(0, i, i) = 1;
    t(i, 0, i) = 1;
  }
  t(1, 1, 2) = 1;
  t(1, 2, 1) = 1;
  t(2, 1, 1) = 1;
  t(2, 2, 1) = 1;
  EXPECT_TRUE(has_kind(validate_assoc(t, 0), "associativity"));
}

TEST(Catalog, AllEntriesValidate) {
  for (const auto& g : {catalog::abelian(1), catalog::abelian(3), catalog::solvable2(), catalog::heisenberg3(),
                        catalog::sl2()}) {
    EXPECT_TRUE(validate_lie(g.table()).ok()) << g.name();
    for (const auto& rep : {catalog::trivial(g), catalog::trivial(g, 2), catalog::adjoint(g), catalog::natural(g)}) {
      EXPECT_TRUE(validate_representation(g, rep.module_dim(), rep.actions()).ok()) << g.name() << " " << rep.name();
    }
  }
  for (const auto& s : {catalog::trivial_field(), catalog::dual_numbers(), catalog::split2(),
                        catalog::truncated_poly(1), catalog::truncated_poly(4)}) {
    EXPECT_TRUE(validate_assoc(s.table(), 0).ok()) << s.name();
  }
}

TEST(Catalog, Sl2BracketsAndSemisimpleMark) {
  auto g = catalog::sl2();
  EXPECT_TRUE(g.marked_semisimple());
  EXPECT_EQ(g.constant(1, 0, 0), 2);
  EXPECT_EQ(g.constant(1, 2, 2), -2);
  EXPECT_EQ(g.constant(0, 2, 1), 1);
  EXPECT_EQ(g.constant(2, 0, 1), -1);
  EXPECT_FALSE(catalog::heisenberg3().marked_semisimple());
}

TEST(Catalog, LookupByName) {
  EXPECT_EQ(catalog::lie_by_name("abelian4").dim(), 4u);
  EXPECT_EQ(catalog::assoc_by_name("truncated_poly3").dim(), 3u);
  EXPECT_EQ(catalog::assoc_by_name("field").dim(), 1u);
  EXPECT_THROW(catalog::lie_by_name("so3x"), ParseError);
  EXPECT_THROW(catalog::assoc_by_name("quaternions"), ParseError);
}

TEST(CommAssoc, UnitIsMovedFirstAndProductsArePreserved) {
  // dual numbers with the unit supplied second: basis (e, 1)
  StructureTable t(2);
  t(1, 1, 1) = 1;
  t(1, 0, 0) = 1;
  t(0, 1, 0) = 1;
  auto s = CommAssocAlgebra::create("swapped", {"e", "1"}, t, 1);
  EXPECT_TRUE(s.was_normalized());
  EXPECT_EQ(s.original_unit_index(), 1u);
  EXPECT_EQ(s.labels()[0], "1");
  EXPECT_EQ(s.table(), catalog::dual_numbers().table());

  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    Vector a = random_vector(2, rng);
    Vector b = random_vector(2, rng);
    // product in the original basis, computed from the raw table
    Vector raw = zero_vector(2);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t k = 0; k < 2; ++k) raw[k] += a[i] * b[j] * t(i, j, k);
      }
    }
    Vector a2{a[1], a[0]};
    Vector b2{b[1], b[0]};
    Vector normalized = s.multiply(a2, b2);
    EXPECT_EQ(normalized[0], raw[1]);
    EXPECT_EQ(normalized[1], raw[0]);
  }
}

TEST(CommAssoc, RequiresAUnit) {
  StructureTable t(1);
  EXPECT_THROW(CommAssocAlgebra::create("zero", {"a"}, t, 0), ValidationError);
}

TEST(DualBasisMaps, OmegaHatPicksComponents) {
  DualBasis w(2);
  Vector vs{Rational(1), Rational(2), Rational(3), Rational(4)};  // v0⊗s0, v0⊗s1, v1⊗s0, v1⊗s1
  EXPECT_EQ(w.omega_hat(0, vs, 2), (Vector{Rational(1), Rational(3)}));
  EXPECT_EQ(w.omega_hat(1, vs, 2), (Vector{Rational(2), Rational(4)}));
  EXPECT_EQ(w.omega(1, Vector{Rational(5), Rational(7)}), 7);
  EXPECT_THROW(w.omega(2, Vector{Rational(5), Rational(7)}), IndexOutOfRange);
  EXPECT_THROW(w.omega_hat(0, vs, 3), LengthMismatch);
}

TEST(Representation, RejectsNonHomomorphism) {
  auto g = catalog::sl2();
  auto rho = catalog::natural(g).actions();
  rho[1] = rho[1].scaled(Rational(2));
  EXPECT_THROW(Representation::create(g, "bad", 2, rho), ValidationError);
  auto r = validate_representation(g, 2, {rho[0]});
  EXPECT_TRUE(has_kind(r, "generator_count"));
}

TEST(Representation, AdjointMatchesBracket) {
  std::mt19937_64 rng(23);
  for (const auto& g : {catalog::sl2(), catalog::heisenberg3(), catalog::solvable2()}) {
    auto ad = catalog::adjoint(g);
    for (int trial = 0; trial < 20; ++trial) {
      Vector x = random_vector(g.dim(), rng);
      Vector y = random_vector(g.dim(), rng);
      EXPECT_EQ(ad.act(x, y), g.bracket(x, y));
    }
  }
}
