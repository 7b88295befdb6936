#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "curlie/algebra.hpp"
#include "curlie/cochain.hpp"
#include "curlie/report.hpp"
#include "curlie/structure_maps.hpp"
#include "curlie/subspace.hpp"

namespace curlie {

/// H^p = Z^p / B^p with canonical coset representatives.
class CohomologyGroup {
 public:
  CohomologyGroup(std::size_t degree, Subspace cocycles, Subspace coboundaries);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return quotient_.dim(); }
  std::size_t cochain_dim() const { return cocycles_.ambient_dim(); }
  const Subspace& cocycles() const { return cocycles_; }
  const Subspace& coboundaries() const { return coboundaries_; }
  const Quotient& quotient() const { return quotient_; }
  /// Representatives of a basis of H as columns of a (dim C^p) × (dim H) matrix.
  Matrix representatives() const { return quotient_.representatives(); }

  /// Coordinates of the class of a cocycle; throws NotACocycle otherwise.
  Vector coordinates(const Vector& cocycle) const;
  /// Applies coordinates() to every column.
  Matrix coordinate_matrix(const Matrix& cocycles) const;
  Vector coset_reduce(const Vector& cocycle) const { return quotient_.coset_reduce(cocycle); }
  bool same_class(const Vector& a, const Vector& b) const;
  Vector representative(const Vector& coords) const { return quotient_.lift(coords); }

 private:
  std::size_t degree_;
  Subspace cocycles_;
  Subspace coboundaries_;
  Quotient quotient_;
};

/// H^p(g;V) computed from a complex; degrees above dim g give zero groups.
CohomologyGroup cohomology(const ChevalleyEilenbergComplex& complex, std::size_t p);

/// Convenience: builds the complex of `rep` and returns dims of H^0..H^max.
std::vector<std::size_t> cohomology_dims(const Representation& rep, std::optional<std::size_t> max_degree = {});

struct SesRow {
  std::size_t degree = 0;
  std::size_t dim_current_h = 0;
  std::size_t dim_q = 0;
  std::size_t dim_base_h = 0;
  std::size_t m = 0;
  bool alpha_surjective = false;
  bool kernel_equals_q = false;
  bool dims_exact = false;
  /// Every class in ker α was rewritten as Θ + DΔ with Θ ∈ Z ∩ R.
  bool kernel_witness = false;
  bool coboundaries_in_cocycles = false;

  bool passed() const {
    return alpha_surjective && kernel_equals_q && dims_exact && kernel_witness && coboundaries_in_cocycles;
  }
};

struct SesReport {
  std::vector<SesRow> rows;
  bool passed() const;
};

/// Cohomology of g and of g ⊗ S with coefficients in V and V ⊗ S, and the
/// maps Φ, Ψ, α between them. All maps are matrices in the canonical bases
/// of the groups involved; H(g;V) ⊗ S uses index h·m + j.
class CurrentCohomology {
 public:
  CurrentCohomology(const Representation& rep, const CommAssocAlgebra& s);

  const CurrentMaps& maps() const { return maps_; }
  const ChevalleyEilenbergComplex& base() const { return base_; }
  const ChevalleyEilenbergComplex& current() const { return current_; }
  std::size_t module_dim() const { return base_.module_dim(); }
  std::size_t coeff_dim() const { return maps_.coeff_dim(); }
  std::size_t top_degree() const { return maps_.current_dim(); }

  const CohomologyGroup& base_h(std::size_t p) const;
  const CohomologyGroup& current_h(std::size_t p) const;

  /// ℛ^p: current cochains vanishing on all (x_1⊗1, …, x_p⊗1); ℛ^0 = 0.
  const Subspace& R_subspace(std::size_t p) const;
  /// Z ∩ ℛ + B inside C^p(g⊗S;V⊗S).
  Subspace Q_cochains(std::size_t p) const;
  /// 𝒬^p as a subspace of H^p(g⊗S;V⊗S) in class coordinates.
  const Subspace& Q_space(std::size_t p) const;

  /// Φ : Z^p(g;V) ⊗ S → H^p(g⊗S;V⊗S), induced by 𝒯(ι).
  Matrix phi(std::size_t p) const;
  /// π ⊗ S : Z^p ⊗ S → H^p(g;V) ⊗ S.
  Matrix pi_tensor(std::size_t p) const;
  /// 𝒯(π′) : C^p(g⊗S;V⊗S) → Z′^p ⊗ S with Z′ = C/B.
  Matrix T_pi_prime(std::size_t p) const;
  /// Ψ : H^p(g⊗S;V⊗S) → Z′^p ⊗ S.
  Matrix psi(std::size_t p) const;
  /// α : H^p(g⊗S;V⊗S) → H^p(g;V) ⊗ S by Σ_j (𝓛(Λ_j) + B) ⊗ s_j.
  const Matrix& alpha(std::size_t p) const;
  /// ι′ ⊗ S : H^p ⊗ S → Z′^p ⊗ S.
  Matrix iota_prime_tensor(std::size_t p) const;
  /// ζ ⊗ S : Z′^p ⊗ S → B′^p ⊗ S with B′ = C/Z.
  Matrix zeta_tensor(std::size_t p) const;

  /// Element versions. `phi_of` takes coordinates in the Z-basis ⊗ S and
  /// returns H-coordinates; `psi_of`/`alpha_of` take a current cocycle.
  Vector phi_of(std::size_t p, const Vector& z_coords) const;
  Vector psi_of(std::size_t p, const Vector& cocycle) const;
  Vector alpha_of(std::size_t p, const Vector& cocycle) const;

 private:
  CurrentMaps maps_;
  ChevalleyEilenbergComplex base_;
  ChevalleyEilenbergComplex current_;
  mutable std::vector<std::optional<CohomologyGroup>> base_h_;
  mutable std::vector<std::optional<CohomologyGroup>> current_h_;
  mutable std::vector<std::optional<Subspace>> r_;
  mutable std::vector<std::optional<Subspace>> q_;
  mutable std::vector<std::optional<Matrix>> alpha_;
};

/// α∘Φ = π⊗S and (ι′⊗S)∘α = Ψ in every degree, plus B(g⊗S) ⊆ ker 𝒯(π′).
VerificationReport verify_alpha_diagram(const CurrentCohomology& cc);
/// (ζ⊗S)∘Ψ = 0 in every degree.
VerificationReport verify_zeta_psi(const CurrentCohomology& cc);
/// α_W ∘ 𝓗(𝒯f) = (𝓗(f)⊗S) ∘ α_V for a chain map f : C(g;V) → C(g;W).
VerificationReport verify_naturality(const CurrentCohomology& v, const CurrentCohomology& w, const GradedMap& f);
/// Degree-0 collapse: H^0(g⊗S) = H^0(g)⊗S as subspaces and α^0 = Id.
VerificationReport verify_degree_zero(const CurrentCohomology& cc);
SesReport verify_ses(const CurrentCohomology& cc);
VerificationReport ses_as_checks(const SesReport& ses);
/// Requires g marked semisimple; throws HypothesisFailed unless H(g;V) = 0.
/// Compares H(g⊗S;V⊗S) with 𝒬 and runs the constructive Ω route.
VerificationReport verify_semisimple(const CurrentCohomology& cc);

}  // namespace curlie
