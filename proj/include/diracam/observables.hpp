#pragma once

#include "diracam/exec.hpp"
#include "diracam/field.hpp"
#include "diracam/gamma.hpp"
#include "diracam/perturbation.hpp"
#include "diracam/quadrature.hpp"
#include "diracam/spinor.hpp"
#include "diracam/units.hpp"

namespace diracam {

/// Absolute floor for relative-residual denominators.
inline constexpr double kResidualFloor = 1e-30;

/// |a − b| / max(|a|, |b|, floor)
double relative_difference(double a, double b);

/// ∫ψ† (½σ) ψ, components (S₁, S₂, S₃).
Vec3 unperturbed_spin(const SpinorField& psi, const SpinOperators& ops, Exec exec = Exec::parallel);

/// ΔS = |e| ∫ A × ρ_E. Throws std::invalid_argument if A₀ ≠ 0 anywhere.
Vec3 delta_S(const FieldConfiguration& a, const DipoleDensity& rho, const UnitsContext& u,
             Exec exec = Exec::parallel);

/// ΔS₃ for the symmetric gauge of a field H₃ ẑ:
///   −|e| (H₃/2) ∫ (x₂ρ_E2 + x₁ρ_E1)
double delta_S3_constant(double h3, const DipoleDensity& rho, const UnitsContext& u, Exec exec = Exec::parallel);

/// How ℓ acts on the potential inside ΔL.
enum class OamPath {
  analytic,           // exact gradient of a closed-form potential
  finite_difference,  // central differences on the sampled potential
};

struct OamOptions {
  OamPath path = OamPath::analytic;
  Stencil stencil = Stencil::one_sided;
  Exec exec = Exec::parallel;
};

/// Tolerance on the imaginary part of ΔL before it is discarded.
inline constexpr double kOamImagTolerance = 1e-8;

/// ΔL_i = −i|e| ∫ Σ_j ρ_Ej (ℓ_i A_j) for axis i ∈ {1,2,3}.
/// Throws std::invalid_argument if A₀ ≠ 0, std::logic_error for the analytic
/// path without a gradient, std::runtime_error if the result is not real.
double delta_L(const FieldConfiguration& a, const DipoleDensity& rho, const UnitsContext& u, int axis,
               const OamOptions& options = {});
double delta_L3(const FieldConfiguration& a, const DipoleDensity& rho, const UnitsContext& u,
                const OamOptions& options = {});

/// ΔJ_i = (|e|/2) ∫ ε_ijk H_j (x × ρ_E)_k for a constant field.
Vec3 delta_J(const ConstantMagneticField& field, const DipoleDensity& rho, const UnitsContext& u,
             Exec exec = Exec::parallel);

/// First-order change of ∫ψ†(½σ)ψ under ψ → ψ + Δψ, assembled from the
/// spinors directly rather than through ρ_E.
Vec3 spin_shift_functional(const SpinorField& psi, const SpinorField& dpsi, const SpinOperators& ops,
                           Exec exec = Exec::parallel);

/// First-order change of ∫ψ†ℓ_axis ψ under ψ → ψ + Δψ with finite-difference ℓ.
double oam_shift_functional(const SpinorField& psi, const SpinorField& dpsi, int axis,
                            Stencil stencil = Stencil::one_sided, Exec exec = Exec::parallel);

/// Re(λ₊λ₋*) + Im(λ₊λ₋*)
double mixing_factor(const PlaneWaveElectron& state);

/// ⟨ΔS₃⟩ = −2 (|e|/m_e)(|k|/E₀)[⟨A₁⟩ Re(λ₊λ₋*) − ⟨A₂⟩ Im(λ₊λ₋*)]
double expectation_delta_S3(const PlaneWaveElectron& state, double avg_a1, double avg_a2, const UnitsContext& u);
/// Same with |k|/E₀ replaced by `velocity`.
double expectation_delta_S3(const PlaneWaveElectron& state, double avg_a1, double avg_a2, const UnitsContext& u,
                            double velocity);

/// Coefficient quoted in the literature for 10⁻⁵ T over a 1 m apparatus.
inline constexpr double kReferenceCoefficient = 0.029;

struct HeadlineEstimate {
  double field_eV2;         // H₃
  double scale_inverse_eV;  // d
  double coefficient;       // multiplies Re(λ₊λ₋*) + Im(λ₊λ₋*)
  double mixing;            // Re(λ₊λ₋*) + Im(λ₊λ₋*) of the state
  double value;             // ⟨ΔS₃⟩ = coefficient × mixing
};

/// Ultrarelativistic (|k|/E₀ = 1) estimate of ⟨ΔS₃⟩ for a field of
/// `tesla` along z over an apparatus of `meters`.
HeadlineEstimate headline_estimate(double tesla, double meters, const PlaneWaveElectron& state,
                                   const UnitsContext& u);

struct MixingMaximum {
  double value;        // max |Re + Im|
  double plus_weight;  // |λ₊|² at the maximum
  double phase;        // arg(λ₊λ₋*) at the maximum
};

/// Grid search of |Re(λ₊λ₋*) + Im(λ₊λ₋*)| over |λ₊|² ∈ [0,1] and relative
/// phase ∈ [0, 2π).
MixingMaximum mixing_factor_maximum(int weight_steps, int phase_steps);

// Constant-field pipeline used by the CLI and the acceptance suite.

enum class L3Route {
  analytic,           // ΔL₃ from ρ_E with the exact ℓ₃A
  finite_difference,  // ΔL₃ from ρ_E with central-difference ℓ₃A
  functional,         // ΔL₃ from ψ and Δψ with central-difference ℓ₃
};

struct ConstantFieldScenario {
  PlaneWaveElectron state;
  LatticeBox box;
  ConstantMagneticField field;
  UnitsContext units;
  L3Route l3_route = L3Route::analytic;
  Stencil stencil = Stencil::one_sided;
  /// Build ρ_E from ψ + Δψ instead of ψ. Formally beyond first order.
  bool corrected_density = false;
};

struct AngularMomentumShift {
  Vec3 dS{};  // ΔS via ρ_E
  Vec3 dL{};  // ΔL₁, ΔL₂ analytic; ΔL₃ via the scenario's route
  Vec3 dJ{};  // Levi-Civita form
  double conservation_residual = 0.0;  // |ΔL₃ + ΔS₃|
  double expectation_dS3 = 0.0;        // closed form with apparatus averages
};

/// Expectation values divide by ∫ψ†ψ, which is 1 up to rounding under box
/// normalisation. The apparatus scale for the closed form is the box's x₁ extent.
AngularMomentumShift evaluate_shifts(const ConstantFieldScenario& scenario, Exec exec = Exec::parallel);

}  // namespace diracam
