#include "diracam/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace diracam {

std::string_view to_string(ChargeConvention c) { return c == ChargeConvention::physical ? "physical" : "unit"; }

ChargeConvention parse_charge_convention(std::string_view text) {
  if (text == "physical") return ChargeConvention::physical;
  if (text == "unit") return ChargeConvention::unit;
  throw std::invalid_argument("unknown charge convention '" + std::string(text) + "' (physical|unit)");
}

double physical_charge() { return std::sqrt(4.0 * std::numbers::pi * constants::fine_structure); }

// e·B for B = 1 T is ħc²/e_SI·(1 T) = ħ[eV s]·c² eV²; dividing by the
// physical coupling gives B itself in eV².
UnitsContext::UnitsContext(ChargeConvention convention)
    : charge_convention(convention),
      tesla_to_eV2(constants::hbar_eV_s * constants::speed_of_light_m_s * constants::speed_of_light_m_s /
                   physical_charge()),
      meter_to_inverse_eV(1.0 / constants::hbar_c_eV_m) {}

double UnitsContext::charge() const {
  return charge_convention == ChargeConvention::physical ? physical_charge() : 1.0;
}

double tesla_to_natural(double tesla, const UnitsContext& u) { return tesla * u.tesla_to_eV2; }
double natural_to_tesla(double eV2, const UnitsContext& u) { return eV2 / u.tesla_to_eV2; }
double meter_to_natural(double meters, const UnitsContext& u) { return meters * u.meter_to_inverse_eV; }
double natural_to_meter(double inverse_eV, const UnitsContext& u) { return inverse_eV / u.meter_to_inverse_eV; }

}  // namespace diracam
