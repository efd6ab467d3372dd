#pragma once

#include <numbers>
#include <string_view>

namespace diracam {

// Natural units throughout: ħ = c = 1, energies in eV, lengths in eV⁻¹,
// magnetic fields in eV². CODATA 2018 values.
namespace constants {
inline constexpr double fine_structure = 7.2973525693e-3;
inline constexpr double electron_mass_eV = 0.51099895000e6;
inline constexpr double hbar_eV_s = 6.582119569e-16;
inline constexpr double speed_of_light_m_s = 299792458.0;
inline constexpr double hbar_c_eV_m = 197.3269804e6 * 1e-15;
}  // namespace constants

enum class ChargeConvention {
  physical,  // |e| = √(4πα), Heaviside–Lorentz
  unit,      // |e| = 1
};

std::string_view to_string(ChargeConvention c);
/// Throws std::invalid_argument for anything but "physical" or "unit".
ChargeConvention parse_charge_convention(std::string_view text);

/// Coupling and conversion constants for one run. The field conversion is
/// the physical one regardless of the coupling convention: a tesla is a
/// fixed number of eV².
struct UnitsContext {
  ChargeConvention charge_convention = ChargeConvention::physical;
  double electron_mass = constants::electron_mass_eV;
  double tesla_to_eV2;
  double meter_to_inverse_eV;

  UnitsContext() : UnitsContext(ChargeConvention::physical) {}
  explicit UnitsContext(ChargeConvention convention);

  /// |e| under the selected convention.
  double charge() const;
  /// |e| / m_e, the coefficient of the first-order spinor shift.
  double coupling_over_mass() const { return charge() / electron_mass; }
};

/// √(4πα)
double physical_charge();

double tesla_to_natural(double tesla, const UnitsContext& u);
double natural_to_tesla(double eV2, const UnitsContext& u);
double meter_to_natural(double meters, const UnitsContext& u);
double natural_to_meter(double inverse_eV, const UnitsContext& u);

}  // namespace diracam
