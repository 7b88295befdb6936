#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "curlie/algebra.hpp"
#include "curlie/cochain.hpp"
#include "curlie/report.hpp"

namespace curlie {

/// A linear map between cochain spaces over the same Lie algebra. Degree-0
/// spaces stand for the module itself (C^0(g;V) = V).
struct CochainMap {
  CochainSpace source;
  CochainSpace target;
  Matrix matrix;

  CochainMap(CochainSpace s, CochainSpace t, Matrix m);
};

/// Matrices of the maps relating cochains of g and of g ⊗ S. Base spaces
/// are C^p(g;V) with index r·d + v; current spaces are C^p(g⊗S;V⊗S) with
/// module index v·m + a. A "tensored" base space C^p(g;V) ⊗ S uses index
/// c·m + j for c a base cochain index.
class CurrentMaps {
 public:
  CurrentMaps(std::size_t base_dim, CommAssocAlgebra s);

  std::size_t base_dim() const { return n_; }
  std::size_t coeff_dim() const { return s_.dim(); }
  std::size_t current_dim() const { return n_ * s_.dim(); }
  const CommAssocAlgebra& coefficients() const { return s_; }

  CochainSpace base_space(std::size_t d, std::size_t p) const { return CochainSpace(n_, d, p); }
  CochainSpace current_space(std::size_t d, std::size_t p) const { return CochainSpace(current_dim(), d * coeff_dim(), p); }

  /// χ_j : C^p(g⊗S; V⊗S) → C^p(g⊗S; V), Λ ↦ ω̂_j ∘ Λ (j is 0-based).
  Matrix chi(std::size_t d, std::size_t p, std::size_t j) const;
  /// 𝓛 : C^p(g⊗S; V) → C^p(g; V), restriction to arguments x ⊗ 1.
  Matrix restrict_L(std::size_t d, std::size_t p) const;
  /// Λ ↦ Σ_j 𝓛(Λ_j) ⊗ s_j, from C^p(g⊗S;V⊗S) to C^p(g;V) ⊗ S.
  Matrix components(std::size_t d, std::size_t p) const;
  /// λ ⊗ s ↦ ((x_1⊗t_1, …) ↦ λ(x_1, …) ⊗ s·t̄), from C^p(g;V) ⊗ S to C^p(g⊗S;V⊗S).
  Matrix extend(std::size_t d, std::size_t p) const;
  /// λ ⊗ s_j ↦ ((x_1⊗t_1, …) ↦ ω_1(t̄) λ(x_1, …) ⊗ s_j).
  Matrix extend_unit_weighted(std::size_t d, std::size_t p) const;

  /// 𝒯(f) for the four admissible signatures; throws DegreeMismatch when
  /// both degrees are positive and different.
  CochainMap lift(const CochainMap& f) const;

  Cochain chi(const Cochain& big, std::size_t j) const;
  Cochain restrict_L(const Cochain& small_module_cochain) const;

 private:
  struct Expansion {
    std::size_t row_tuple;  // rank of the current tuple
    Vector tbar;            // product of the S-factors
  };
  const std::vector<std::vector<Expansion>>& expansions(std::size_t p) const;
  std::size_t one_rank(const Tuple& base, std::size_t p) const;

  std::size_t n_;
  CommAssocAlgebra s_;
  mutable std::map<std::size_t, std::vector<std::vector<Expansion>>> expansion_cache_;
};

CochainMap lift_T_cochain_map(const CurrentMaps& maps, const CochainMap& f);
CochainMap lift_T_from_module(const CurrentMaps& maps, const CochainMap& f);
CochainMap lift_T_to_module(const CurrentMaps& maps, const CochainMap& f);
CochainMap lift_T_module_map(const CurrentMaps& maps, const CochainMap& f);

/// Fixed-point condition 𝒯(Id)(Λ) = Λ in degree p.
bool is_T_identity_fixed(const CurrentMaps& maps, std::size_t d, const Cochain& big);

/// Entries drawn uniformly from {-3, ..., 3}.
Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

enum class CompositionCase {
  CochainCochain,   // C^p(U) → C^p(V) → C^p(W)
  ModuleCochainModule,  // U → C^p(V) → W
  CochainCochainModule, // C^p(U) → C^p(V) → W
  CochainModuleModule,  // C^p(U) → V → W
  ModuleModuleCochain,  // U → V → C^p(W)
  CochainModuleCochain, // C^p(U) → V → C^p(W)
};

const std::vector<CompositionCase>& all_composition_cases();
std::string to_string(CompositionCase c);

struct ModuleDims {
  std::size_t u;
  std::size_t v;
  std::size_t w;
};

/// 𝒯(g∘f) = 𝒯(g)∘𝒯(f) for `trials` random pairs of the given signature.
VerificationReport verify_T_composition(const CurrentMaps& maps, CompositionCase c, ModuleDims dims, std::size_t p,
                                        std::size_t trials, std::uint64_t seed);
/// Same identity for one explicit pair.
bool T_composition_holds(const CurrentMaps& maps, const CochainMap& f, const CochainMap& g);

/// 𝓛∘χ_j∘D = d∘𝓛∘χ_j for every j and every degree of the current complex.
VerificationReport verify_restriction_commutes(const CurrentMaps& maps, const ChevalleyEilenbergComplex& base,
                                 const ChevalleyEilenbergComplex& current);

/// A family f_p : C^p(g;V) → C^p(g;W), p = 0..n.
using GradedMap = std::vector<Matrix>;

bool is_chain_map(const GradedMap& f, const ChevalleyEilenbergComplex& v, const ChevalleyEilenbergComplex& w);
/// f_p = d_{p-1} h_p + h_{p+1} d_p with random h_p : C^p(V) → C^{p-1}(W), h_0 = 0.
GradedMap homotopy_chain_map(const ChevalleyEilenbergComplex& v, const ChevalleyEilenbergComplex& w,
                             std::mt19937_64& rng);
GradedMap scalar_identity(const ChevalleyEilenbergComplex& v, const Rational& c);
GradedMap zero_map(const ChevalleyEilenbergComplex& v, const ChevalleyEilenbergComplex& w);
/// 𝒯(f_p) in every degree 0..dim(g⊗S) (zero above the top base degree).
std::vector<Matrix> lift_graded(const CurrentMaps& maps, const GradedMap& f, std::size_t dv, std::size_t dw);

/// If d∘f = f∘d then D∘𝒯(f) = 𝒯(f)∘D; the hypothesis is checked first.
VerificationReport verify_map_of_complexes(const CurrentMaps& maps, const GradedMap& f,
                                           const ChevalleyEilenbergComplex& base_v,
                                           const ChevalleyEilenbergComplex& base_w,
                                           const ChevalleyEilenbergComplex& current_v,
                                           const ChevalleyEilenbergComplex& current_w);

}  // namespace curlie
