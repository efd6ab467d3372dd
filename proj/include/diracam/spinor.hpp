#pragma once

#include <vector>

#include "diracam/algebra.hpp"
#include "diracam/exec.hpp"
#include "diracam/lattice.hpp"

namespace diracam {

enum class SpinLabel { up, down };

/// Free electron of momentum k in the superposition λ₊|↑,k⟩ + λ₋|↓,k⟩.
/// Spin labels refer to the rest-frame S₃ eigenbasis.
struct PlaneWaveElectron {
  Vec3 momentum{};  // eV
  double mass = 0.0;  // eV
  Complex lambda_plus{1.0, 0.0};
  Complex lambda_minus{0.0, 0.0};

  /// E₀ = √(|k|² + m²)
  double energy() const;
};

/// |λ₊|² + |λ₋|²
double state_norm(const PlaneWaveElectron& state);

/// Throws std::invalid_argument if mass ≤ 0 or the amplitudes are off the
/// unit sphere by more than 1e-10.
void validate(const PlaneWaveElectron& state);

/// u_s(k) = √(E+m) (ξ_s, σ·k ξ_s / (E+m)), normalised to u†u = 2E.
/// Solves (γ^μ k_μ − m) u = 0. Throws std::invalid_argument if m ≤ 0.
Spinor4 plane_wave_spinor(const Vec3& k, SpinLabel s, double mass);

/// ‖(γ⁰E − γ·k − m) u‖ / ((E + m)‖u‖) for the Dirac representation; the
/// energy scale makes the residual dimensionless.
double dirac_residual(const Vec3& k, double mass, const Spinor4& u);

/// Sampled four-component field on a lattice.
class SpinorField {
 public:
  SpinorField(LatticeBox box, std::vector<Spinor4> data);
  /// Zero field on `box`.
  explicit SpinorField(LatticeBox box);

  const LatticeBox& box() const { return box_; }
  std::size_t size() const { return data_.size(); }
  const Spinor4& operator[](std::size_t site) const { return data_[site]; }
  Spinor4& operator[](std::size_t site) { return data_[site]; }
  const std::vector<Spinor4>& data() const { return data_; }

 private:
  LatticeBox box_;
  std::vector<Spinor4> data_;
};

SpinorField operator+(const SpinorField& a, const SpinorField& b);

/// ψ(x) = [λ₊u↑ + λ₋u↓] e^{ik·x} / √(2E₀V), evaluated at an arbitrary point.
Spinor4 superposition_value(const PlaneWaveElectron& state, double volume, const Vec3& x);

/// Box-normalised superposition sampled at every site, so ∫ψ†ψ = 1.
/// Commensurate momenta (k·L/2π integral) use exact integer phase arithmetic.
SpinorField superposition_field(const PlaneWaveElectron& state, const LatticeBox& box,
                                Exec exec = Exec::parallel);

/// Nearest momentum commensurate with a periodic length L: 2πn/L.
double nearest_lattice_momentum(double k, double length);

}  // namespace diracam
