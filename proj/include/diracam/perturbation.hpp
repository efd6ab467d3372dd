#pragma once

#include <span>
#include <vector>

#include "diracam/exec.hpp"
#include "diracam/field.hpp"
#include "diracam/gamma.hpp"
#include "diracam/spinor.hpp"
#include "diracam/units.hpp"

namespace diracam {

/// ρ_E = (i/m_e) ψ†γψ sampled per site. Real because γⁱ is anti-hermitian.
class DipoleDensity {
 public:
  DipoleDensity(LatticeBox box, std::vector<Vec3> data, double imag_residue = 0.0);

  const LatticeBox& box() const { return box_; }
  std::size_t size() const { return data_.size(); }
  const Vec3& operator[](std::size_t site) const { return data_[site]; }
  const std::vector<Vec3>& data() const { return data_; }
  /// max|Im ρ| / max(ψ†ψ/m_e) observed before truncation to real.
  double imag_residue() const { return imag_residue_; }

 private:
  LatticeBox box_;
  std::vector<Vec3> data_;
  double imag_residue_;
};

/// First-order shift Δψ under the four-potential, component by component:
///   Δψ₁ = c (A₀ψ₃ + A₁ψ₄ − iA₂ψ₄ + A₃ψ₃)
///   Δψ₂ = c (A₀ψ₄ + A₁ψ₃ + iA₂ψ₃ − A₃ψ₄)
///   Δψ₃ = c (A₀ψ₁ − A₁ψ₂ + iA₂ψ₂ − A₃ψ₁)
///   Δψ₄ = c (A₀ψ₂ − A₁ψ₁ − iA₂ψ₁ + A₃ψ₂)
/// with c = |e|/m_e. Throws std::invalid_argument on lattice mismatch.
SpinorField delta_psi(const FieldConfiguration& a, const SpinorField& psi, const UnitsContext& u,
                      Exec exec = Exec::parallel);
SpinorField delta_psi(std::span<const FourPotential> a, const SpinorField& psi, const UnitsContext& u,
                      Exec exec = Exec::parallel);

/// Same shift for a purely magnetic potential; rejects any nonzero A₀.
SpinorField magnetic_delta_psi(const FieldConfiguration& a, const SpinorField& psi, const UnitsContext& u,
                               Exec exec = Exec::parallel);

/// Relative tolerance on the imaginary residue of ρ_E.
inline constexpr double kRhoImagTolerance = 1e-10;

/// Throws std::runtime_error if the imaginary residue exceeds
/// kRhoImagTolerance, which only happens with a broken gamma set.
DipoleDensity rho_E(const SpinorField& psi, const UnitsContext& u, const GammaSet& g,
                    Exec exec = Exec::parallel);
DipoleDensity rho_E(const SpinorField& psi, const UnitsContext& u, Exec exec = Exec::parallel);

}  // namespace diracam
