#include "diracam/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "diracam/field.hpp"
#include "diracam/gamma.hpp"
#include "diracam/observables.hpp"

namespace diracam::cli {
namespace {

// (|e|/m)(|k|/E)|H₃|d: the size of ⟨ΔS₃⟩ at unit mixing. Residuals of
// quantities that should vanish are measured against it.
double natural_scale(const ResolvedRun& run) {
  const double velocity = length(run.state.momentum) / run.state.energy();
  return std::max(run.units.coupling_over_mass() * velocity * std::abs(run.field.h[2]) * run.box.extents()[0],
                  kResidualFloor);
}

// Relative difference with a floor well below the natural scale, so two
// values that are both rounding noise compare equal.
double scaled_difference(double a, double b, double scale) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-6 * scale});
}

double dirac_residual_with(const GammaSet& g, const Vec3& k, double mass, const Spinor4& u) {
  const double energy = std::sqrt(dot(k, k) + mass * mass);
  ComplexMatrix4 op = energy * g.gamma[0] - mass * ComplexMatrix4::identity();
  for (int i = 0; i < 3; ++i) op -= k[i] * g.gamma[i + 1];
  return norm(op * u) / ((energy + mass) * norm(u));
}

class CheckLog {
 public:
  explicit CheckLog(std::ostream& out) : out_(out) {}

  void check(const std::string& name, double measured, double threshold) {
    const bool ok = measured <= threshold;  // false for NaN
    results_.push_back({name, measured, threshold, ok});
    out_ << (ok ? "PASS  " : "FAIL  ") << std::left << std::setw(34) << name << std::right
         << " measured=" << std::scientific << std::setprecision(3) << measured << "  threshold=" << threshold
         << std::defaultfloat << '\n';
  }

  void info(const std::string& name, const std::string& text) {
    out_ << "INFO  " << std::left << std::setw(34) << name << std::right << ' ' << text << '\n';
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::ostream& out_;
  std::vector<CheckResult> results_;
};

std::string sci(double v) {
  std::ostringstream s;
  s << std::scientific << std::setprecision(6) << v;
  return s.str();
}

void print_messages(const ResolvedRun& run, std::ostream& out, std::ostream& err) {
  for (const auto& w : run.warnings) err << "warning: " << w << '\n';
  for (const auto& n : run.notes) out << "note: " << n << '\n';
}

}  // namespace

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", v + 0.0);
  return buf;
}

std::vector<CheckResult> run_verify_checks(const RunConfig& config, std::ostream& out, const VerifyHooks& hooks) {
  const ResolvedRun run = resolve(config);
  CheckLog log(out);

  GammaSet g = build_gamma_dirac();
  if (hooks.corrupt_gamma) g.gamma[1](0, 3) = -g.gamma[1](0, 3);
  const SpinOperators ops = make_spin_operators(g);

  log.check("clifford_anticommutator", clifford_residual(g), 1e-12);
  log.check("gamma_hermiticity", hermiticity_residual(g), 1e-12);
  log.check("gamma_traceless", trace_residual(g), 1e-12);
  log.check("spin_commutators", spin_algebra_residual(ops), 1e-12);

  const PlaneWaveElectron& state = run.state;
  const Spinor4 up = plane_wave_spinor(state.momentum, SpinLabel::up, state.mass);
  const Spinor4 down = plane_wave_spinor(state.momentum, SpinLabel::down, state.mass);
  log.check("dirac_equation_residual",
            std::max(dirac_residual_with(g, state.momentum, state.mass, up),
                     dirac_residual_with(g, state.momentum, state.mass, down)),
            1e-10);
  const double two_e = 2.0 * state.energy();
  log.check("spinor_normalization",
            std::max(std::abs(inner(up, up).real() / two_e - 1.0), std::abs(inner(down, down).real() / two_e - 1.0)),
            1e-10);

  const Exec exec = Exec::parallel;
  const SpinorField psi = superposition_field(state, run.box, exec);
  const double norm = norm_integral(psi, exec);
  log.check("box_normalization", std::abs(norm - 1.0), 1e-10);

  const double scale = natural_scale(run);
  const ConstantFieldScenario base = make_scenario(run, L3Route::analytic);
  const AngularMomentumShift shift = evaluate_shifts(base, exec);
  const double ds3 = shift.dS[2];
  const double dl3 = hooks.break_conservation ? shift.dL[2] * 1.001 : shift.dL[2];
  log.info("shift_values", "dS3=" + sci(ds3) + " dL3=" + sci(dl3) + " <dS3>=" + sci(shift.expectation_dS3));

  log.check("conservation_dL3_plus_dS3",
            std::abs(dl3 + ds3) / std::max({std::abs(ds3), std::abs(dl3), kResidualFloor}), 1e-6);
  log.check("dJ3_vanishes", std::abs(shift.dJ[2]) / scale, 1e-14);

  // ΔS through the spin functional of ψ + Δψ, ΔL through the potential.
  const FieldConfiguration potential = constant_field_potential(run.field);
  const SpinorField dpsi = magnetic_delta_psi(potential, psi, run.units, exec);
  const Vec3 spin_direct = spin_shift_functional(psi, dpsi, make_spin_operators(build_gamma_dirac()), exec);
  double dj_err = 0.0;
  for (int i = 0; i < 2; ++i)
    dj_err = std::max(dj_err, scaled_difference(shift.dJ[i], spin_direct[i] / norm + shift.dL[i], scale));
  log.check("dJ12_matches_dS_plus_dL", dj_err, 1e-4);

  const bool along_z = config.k_transverse_mode == 0;
  if (along_z)
    log.check("dS1_dS2_vanish", std::max(std::abs(shift.dS[0]), std::abs(shift.dS[1])) / scale, 1e-10);
  else
    log.info("dS1_dS2_vanish", "skipped: momentum not along z");

  ConstantFieldScenario tripled = base;
  tripled.field.h[2] *= 3.0;
  const AngularMomentumShift s3 = evaluate_shifts(tripled, exec);
  double lin_h = 0.0;
  for (const auto& [a, b] : {std::pair{s3.dS[2], shift.dS[2]}, {s3.dL[2], shift.dL[2]}, {s3.dJ[0], shift.dJ[0]},
                             {s3.dJ[1], shift.dJ[1]}, {s3.expectation_dS3, shift.expectation_dS3}})
    lin_h = std::max(lin_h, scaled_difference(a, 3.0 * b, 3.0 * scale));
  log.check("linearity_in_field", lin_h, 1e-12);

  ConstantFieldScenario unit_charge = base;
  unit_charge.units = UnitsContext(ChargeConvention::unit);
  ConstantFieldScenario physical_charge_run = base;
  physical_charge_run.units = UnitsContext(ChargeConvention::physical);
  const AngularMomentumShift su = evaluate_shifts(unit_charge, exec);
  const AngularMomentumShift sp = evaluate_shifts(physical_charge_run, exec);
  const double e = physical_charge();
  double lin_e = 0.0;
  for (const auto& [a, b] : {std::pair{sp.dS[2], su.dS[2]}, {sp.dL[2], su.dL[2]}, {sp.dJ[0], su.dJ[0]},
                             {sp.dJ[1], su.dJ[1]}, {sp.expectation_dS3, su.expectation_dS3}})
    lin_e = std::max(lin_e, scaled_difference(a, e * b, scale));
  log.check("linearity_in_charge", lin_e, 1e-12);

  if (along_z) {
    const auto [a1, a2] = average_potential(run.field.h[2], run.box.extents()[0]);
    const DipoleDensity rho = rho_E(psi, run.units, exec);
    const double quad = delta_S(uniform_potential({0.0, a1, a2, 0.0}), rho, run.units, exec)[2] / norm;
    const double closed = expectation_delta_S3(state, a1, a2, run.units);
    log.info("closed_form_values", "quadrature=" + sci(quad) + " closed_form=" + sci(closed));
    log.check("closed_form_vs_quadrature", scaled_difference(quad, closed, scale), 1e-8);
    log.info("rho_E_imag_residue", sci(rho.imag_residue()));
  } else {
    log.info("closed_form_vs_quadrature", "skipped: momentum not along z");
  }

  // Periodic wrap differentiates across the seam of the non-periodic
  // potential; the resulting boundary term does not shrink with N.
  ConstantFieldScenario seam = base;
  seam.l3_route = L3Route::finite_difference;
  seam.stencil = Stencil::periodic;
  const AngularMomentumShift ss = evaluate_shifts(seam, exec);
  log.info("periodic_wrap_boundary_term",
           "|dL3+dS3|=" + sci(ss.conservation_residual) + " (relative " +
               sci(ss.conservation_residual / std::max(std::abs(ss.dS[2]), kResidualFloor)) + ")");
  seam.stencil = Stencil::one_sided;
  const AngularMomentumShift so = evaluate_shifts(seam, exec);
  log.info("one_sided_fd_residual", "|dL3+dS3|=" + sci(so.conservation_residual));

  return log.take();
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err, const VerifyHooks& hooks) {
  std::vector<CheckResult> results;
  try {
    const ResolvedRun run = resolve(config);
    print_messages(run, out, err);
    results = run_verify_checks(config, out, hooks);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "verify aborted: " << e.what() << '\n';
    return kExitInvariantFailure;
  }
  const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; });
  out << (failed == 0 ? "all " + std::to_string(results.size()) + " checks passed"
                      : std::to_string(failed) + " of " + std::to_string(results.size()) + " checks failed")
      << '\n';
  return failed == 0 ? kExitOk : kExitInvariantFailure;
}

int cmd_estimate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const ResolvedRun run = resolve(config);
    for (const auto& w : run.warnings) err << "warning: " << w << '\n';

    std::ofstream file;
    if (!config.output_path.empty()) {
      file.open(config.output_path);
      if (!file) throw ConfigError("cannot write " + config.output_path);
    }

    out << "field      " << config.field_tesla << " T = " << sci(tesla_to_natural(config.field_tesla, run.units))
        << " eV^2\n";
    out << "apparatus  " << config.apparatus_m << " m = " << sci(run.scale_inverse_eV) << " eV^-1\n";
    out << "|k|/E0     1 (ultrarelativistic limit)\n";
    out << "state      Re(l+ l-*) + Im(l+ l-*) = " << sci(mixing_factor(run.state)) << '\n';
    const MixingMaximum best = mixing_factor_maximum(200, 720);
    out << "max |Re + Im| over states (grid search) = " << sci(best.value) << " at |l+|^2=" << best.plus_weight
        << " phase=" << best.phase << '\n';

    std::ostringstream csv;
    csv << "charge_convention,field_tesla,apparatus_m,coefficient,expectation_delta_S3,reference,ratio\n";
    for (const ChargeConvention conv : {ChargeConvention::physical, ChargeConvention::unit}) {
      const UnitsContext u(conv);
      const HeadlineEstimate est = headline_estimate(config.field_tesla, config.apparatus_m, run.state, u);
      const double ratio = est.coefficient / kReferenceCoefficient;
      out << "convention " << std::left << std::setw(9) << to_string(conv) << std::right << " |e|=" << sci(u.charge())
          << "  coefficient=" << sci(est.coefficient) << "  <dS3>=" << sci(est.value)
          << "  reference=" << kReferenceCoefficient << "  ratio=" << sci(ratio) << '\n';
      csv << to_string(conv) << ',' << format_value(config.field_tesla) << ',' << format_value(config.apparatus_m)
          << ',' << format_value(est.coefficient) << ',' << format_value(est.value) << ','
          << format_value(kReferenceCoefficient) << ',' << format_value(ratio) << '\n';
    }
    (file.is_open() ? static_cast<std::ostream&>(file) : out) << csv.str();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

const std::vector<std::string>& sweep_axes() {
  static const std::vector<std::string> axes = {"field_tesla", "apparatus_m", "relative_phase", "amplitude_split",
                                                "grid_n"};
  return axes;
}

std::vector<double> sweep_points(const SweepSpec& spec) {
  if (spec.steps < 1) throw ConfigError("sweep steps must be >= 1");
  std::vector<double> points(static_cast<std::size_t>(spec.steps));
  for (int i = 0; i < spec.steps; ++i)
    points[i] = spec.steps == 1 ? spec.min : spec.min + (spec.max - spec.min) * i / (spec.steps - 1);
  return points;
}

namespace {

RunConfig apply_sweep_point(RunConfig c, const std::string& axis, double value) {
  if (axis == "field_tesla") {
    c.field_tesla = value;
  } else if (axis == "apparatus_m") {
    c.apparatus_m = value;
  } else if (axis == "relative_phase") {
    // arg(λ₊λ₋*) = φ₊ − φ₋
    c.lambda_minus_phase = c.lambda_plus_phase - value;
  } else if (axis == "amplitude_split") {
    if (value < 0.0 || value > 1.0) throw ConfigError("amplitude_split is |lambda+|^2 and must lie in [0, 1]");
    c.lambda_plus_mag = std::sqrt(value);
    c.lambda_minus_mag = std::sqrt(1.0 - value);
  } else if (axis == "grid_n") {
    c.grid_n = static_cast<int>(std::lround(value));
  } else {
    throw ConfigError("unknown sweep axis '" + axis + "'");
  }
  return c;
}

}  // namespace

std::string sweep_csv(const RunConfig& config, const SweepSpec& spec, Exec exec) {
  if (std::find(sweep_axes().begin(), sweep_axes().end(), spec.axis) == sweep_axes().end())
    throw ConfigError("unknown sweep axis '" + spec.axis + "'");
  std::ostringstream csv;
  csv << spec.axis
      << ",delta_S3,delta_L3,conservation_residual,expectation_delta_S3,delta_J1,delta_J2,delta_J3\n";
  for (const double value : sweep_points(spec)) {
    const RunConfig point = apply_sweep_point(config, spec.axis, value);
    const ResolvedRun run = resolve(point);
    const AngularMomentumShift s = evaluate_shifts(make_scenario(run, point.l3_path), exec);
    csv << format_value(value) << ',' << format_value(s.dS[2]) << ',' << format_value(s.dL[2]) << ','
        << format_value(s.conservation_residual) << ',' << format_value(s.expectation_dS3) << ','
        << format_value(s.dJ[0]) << ',' << format_value(s.dJ[1]) << ',' << format_value(s.dJ[2]) << '\n';
  }
  return csv.str();
}

int cmd_sweep(const RunConfig& config, const SweepSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const ResolvedRun run = resolve(config);
    for (const auto& w : run.warnings) err << "warning: " << w << '\n';
    std::ofstream file;
    if (!config.output_path.empty()) {
      file.open(config.output_path);
      if (!file) throw ConfigError("cannot write " + config.output_path);
    }
    const std::string body = sweep_csv(config, spec);
    if (file.is_open()) {
      file << body;
      if (!file) throw ConfigError("write to " + config.output_path + " failed");
    } else {
      out << body;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace diracam::cli
