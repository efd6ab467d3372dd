#include "diracam/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "diracam/field.hpp"

namespace diracam::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v))
    throw ConfigError("bad number for " + std::string(key) + ": '" + std::string(text) + "'");
  return v;
}

int parse_int(std::string_view key, std::string_view text) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw ConfigError("bad integer for " + std::string(key) + ": '" + std::string(text) + "'");
  return v;
}

L3Route parse_route(std::string_view text) {
  if (text == "analytic") return L3Route::analytic;
  if (text == "finite_difference") return L3Route::finite_difference;
  if (text == "functional") return L3Route::functional;
  throw ConfigError("unknown l3_path '" + std::string(text) + "' (analytic|finite_difference|functional)");
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "field_tesla",      "apparatus_m",        "k_momentum_eV",   "k_transverse_mode",
      "lambda_plus_mag",  "lambda_plus_phase",  "lambda_minus_mag", "lambda_minus_phase",
      "grid_n",           "charge_convention",  "l3_path",          "output_path"};
  return keys;
}

std::string_view to_string(L3Route route) {
  switch (route) {
    case L3Route::analytic: return "analytic";
    case L3Route::finite_difference: return "finite_difference";
    case L3Route::functional: return "functional";
  }
  return "?";
}

void set_config_value(RunConfig& c, std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  if (key == "field_tesla") c.field_tesla = parse_double(key, value);
  else if (key == "apparatus_m") c.apparatus_m = parse_double(key, value);
  else if (key == "k_momentum_eV") c.k_momentum_eV = parse_double(key, value);
  else if (key == "k_transverse_mode") c.k_transverse_mode = parse_int(key, value);
  else if (key == "lambda_plus_mag") c.lambda_plus_mag = parse_double(key, value);
  else if (key == "lambda_plus_phase") c.lambda_plus_phase = parse_double(key, value);
  else if (key == "lambda_minus_mag") c.lambda_minus_mag = parse_double(key, value);
  else if (key == "lambda_minus_phase") c.lambda_minus_phase = parse_double(key, value);
  else if (key == "grid_n") c.grid_n = parse_int(key, value);
  else if (key == "charge_convention" || key == "charge") {
    try {
      c.charge_convention = parse_charge_convention(value);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  } else if (key == "l3_path") c.l3_path = parse_route(value);
  else if (key == "output_path" || key == "out") c.output_path = std::string(value);
  else throw ConfigError("unknown config key '" + std::string(key) + "'");
}

RunConfig parse_config(std::istream& in, RunConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    try {
      set_config_value(base, trim(view.substr(0, eq)), view.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  return parse_config(in, std::move(base));
}

void validate_config(const RunConfig& c) {
  if (c.grid_n < 4) throw ConfigError("grid_n must be >= 4, got " + std::to_string(c.grid_n));
  if (!(c.apparatus_m > 0.0)) throw ConfigError("apparatus_m must be positive");
  if (c.k_momentum_eV < 0.0) throw ConfigError("k_momentum_eV is the magnitude along +z and must be >= 0");
  if (c.lambda_plus_mag < 0.0 || c.lambda_minus_mag < 0.0) throw ConfigError("amplitude magnitudes must be >= 0");
  if (c.lambda_plus_mag == 0.0 && c.lambda_minus_mag == 0.0) throw ConfigError("both amplitudes are zero");
}

ResolvedRun resolve(const RunConfig& c) {
  validate_config(c);
  ResolvedRun run{.state = {},
                  .box = LatticeBox::cornered(1.0, c.grid_n),
                  .units = UnitsContext(c.charge_convention),
                  .field = {},
                  .scale_inverse_eV = 0.0,
                  .warnings = {},
                  .notes = {}};
  run.scale_inverse_eV = meter_to_natural(c.apparatus_m, run.units);
  run.box = LatticeBox::cornered(run.scale_inverse_eV, c.grid_n);
  run.field.h = {0.0, 0.0, tesla_to_natural(c.field_tesla, run.units)};

  const double k3 = nearest_lattice_momentum(c.k_momentum_eV, run.scale_inverse_eV);
  if (k3 != c.k_momentum_eV) {
    std::ostringstream note;
    note.precision(17);
    note << "k3 rounded from " << c.k_momentum_eV << " eV to lattice mode " << k3 << " eV";
    run.notes.push_back(note.str());
  }
  const double k1 = 2.0 * std::numbers::pi * c.k_transverse_mode / run.scale_inverse_eV;
  run.state.momentum = {k1, 0.0, k3};
  run.state.mass = run.units.electron_mass;

  const Complex lp = std::polar(c.lambda_plus_mag, c.lambda_plus_phase);
  const Complex lm = std::polar(c.lambda_minus_mag, c.lambda_minus_phase);
  const double n = std::norm(lp) + std::norm(lm);
  if (std::abs(n - 1.0) > 1e-6) {
    std::ostringstream w;
    w << "amplitude norm |lambda+|^2 + |lambda-|^2 = " << n << "; renormalised to 1";
    run.warnings.push_back(w.str());
  }
  const double s = 1.0 / std::sqrt(n);
  run.state.lambda_plus = s * lp;
  run.state.lambda_minus = s * lm;
  return run;
}

ConstantFieldScenario make_scenario(const ResolvedRun& run, L3Route route) {
  return ConstantFieldScenario{.state = run.state,
                               .box = run.box,
                               .field = run.field,
                               .units = run.units,
                               .l3_route = route,
                               .stencil = Stencil::one_sided,
                               .corrected_density = false};
}

}  // namespace diracam::cli
