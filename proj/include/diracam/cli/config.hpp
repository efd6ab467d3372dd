#pragma once

#include <filesystem>
#include <istream>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diracam/lattice.hpp"
#include "diracam/observables.hpp"
#include "diracam/spinor.hpp"
#include "diracam/units.hpp"

namespace diracam::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariantFailure = 1;
inline constexpr int kExitUsage = 2;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One run's parameters. Flat `key = value` file; every key can also be
/// given as a flag of the same name (flag wins).
struct RunConfig {
  double field_tesla = 1e-5;
  double apparatus_m = 1.0;
  double k_momentum_eV = 10.0 * constants::electron_mass_eV;  // along +z
  int k_transverse_mode = 0;                                  // box modes along x₁
  double lambda_plus_mag = std::numbers::sqrt2 / 2.0;
  double lambda_plus_phase = 0.0;
  double lambda_minus_mag = std::numbers::sqrt2 / 2.0;
  double lambda_minus_phase = -std::numbers::pi / 4.0;
  int grid_n = 32;
  ChargeConvention charge_convention = ChargeConvention::physical;
  L3Route l3_path = L3Route::analytic;
  std::string output_path;
};

/// Recognised keys, in the order they are documented.
const std::vector<std::string>& config_keys();

/// Throws ConfigError for an unknown key or a malformed value.
void set_config_value(RunConfig& config, std::string_view key, std::string_view value);

/// Parses `key = value` lines; `#` starts a comment.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// Range and sanity checks (grid_n ≥ 4, positive apparatus, ...).
void validate_config(const RunConfig& config);

std::string_view to_string(L3Route route);

/// A configuration turned into physics inputs.
struct ResolvedRun {
  PlaneWaveElectron state;
  LatticeBox box;
  UnitsContext units;
  ConstantMagneticField field;
  double scale_inverse_eV;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
};

/// Rounds momenta to lattice modes and renormalises the amplitudes. An
/// amplitude norm off by more than 1e-6 produces a warning.
ResolvedRun resolve(const RunConfig& config);

ConstantFieldScenario make_scenario(const ResolvedRun& run, L3Route route);

}  // namespace diracam::cli
