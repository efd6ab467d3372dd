#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "diracam/algebra.hpp"
#include "diracam/exec.hpp"
#include "diracam/lattice.hpp"

namespace diracam {

/// (A₀, A₁, A₂, A₃) at one point, eV.
struct FourPotential {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  double spatial(int j) const { return j == 0 ? a1 : (j == 1 ? a2 : a3); }
  bool operator==(const FourPotential&) const = default;
};

/// gradient[j][b] = ∂_b A_{j+1}, both indices 0-based spatial.
using PotentialGradient = std::array<Vec3, 3>;

/// Classical four-potential at fixed time x₀ = 0, either a closed-form
/// function of position (optionally with its analytic gradient) or values
/// sampled on one particular lattice.
class FieldConfiguration {
 public:
  enum class Kind { closed_form, sampled };

  using PotentialFn = std::function<FourPotential(const Vec3&)>;
  using GradientFn = std::function<PotentialGradient(const Vec3&)>;

  static FieldConfiguration closed_form(PotentialFn potential, GradientFn gradient = {});
  static FieldConfiguration sampled(LatticeBox box, std::vector<FourPotential> values);

  Kind kind() const { return kind_; }
  bool has_analytic_gradient() const { return static_cast<bool>(gradient_); }

  /// Values at every site of `box`. For a sampled field the box must be the
  /// one it was sampled on (std::invalid_argument otherwise).
  std::vector<FourPotential> sample(const LatticeBox& box, Exec exec = Exec::parallel) const;

  /// Closed form only.
  FourPotential at(const Vec3& x) const;
  /// Throws std::logic_error when no analytic gradient was supplied.
  PotentialGradient gradient(const Vec3& x) const;

 private:
  FieldConfiguration() = default;

  Kind kind_ = Kind::closed_form;
  PotentialFn potential_;
  GradientFn gradient_;
  std::optional<LatticeBox> box_;
  std::vector<FourPotential> values_;
};

/// Constant magnetic field H, eV².
struct ConstantMagneticField {
  Vec3 h{};
};

/// Symmetric gauge A(x) = ½ H × x, A₀ = 0, with its exact gradient.
FieldConfiguration constant_field_potential(const ConstantMagneticField& field);

/// Spatially uniform potential (zero gradient).
FieldConfiguration uniform_potential(const FourPotential& value);

/// Apparatus averages (⟨A₁⟩, ⟨A₂⟩) = (−½H₃d, +½H₃d) for a field along z over
/// a box of scale d cornered at the origin. Throws if d ≤ 0.
std::pair<double, double> average_potential(double h3, double d);

}  // namespace diracam
