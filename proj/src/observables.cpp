#include "diracam/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace diracam {
namespace {

using namespace std::complex_literals;

void require_magnetic(const std::vector<FourPotential>& samples) {
  if (std::any_of(samples.begin(), samples.end(), [](const FourPotential& p) { return p.a0 != 0.0; }))
    throw std::invalid_argument("purely magnetic potential required (A0 != 0 found)");
}

void check_axis(int axis) {
  if (axis < 1 || axis > 3) throw std::out_of_range("axis " + std::to_string(axis) + " not in 1..3");
}

// Integrates three per-site component arrays.
Vec3 integrate_vector(const std::array<std::vector<double>, 3>& parts, const LatticeBox& box, Exec exec) {
  return {integrate_scalar(parts[0], box, exec), integrate_scalar(parts[1], box, exec),
          integrate_scalar(parts[2], box, exec)};
}

std::array<std::vector<double>, 3> make_parts(std::size_t n) {
  return {std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)};
}

}  // namespace

double relative_difference(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), kResidualFloor});
}

Vec3 unperturbed_spin(const SpinorField& psi, const SpinOperators& ops, Exec exec) {
  auto parts = make_parts(psi.size());
  for_each_site(psi.size(), exec, [&](std::size_t site) {
    for (int i = 0; i < 3; ++i) parts[i][site] = sandwich(psi[site], ops.spin[i], psi[site]).real();
  });
  return integrate_vector(parts, psi.box(), exec);
}

Vec3 delta_S(const FieldConfiguration& a, const DipoleDensity& rho, const UnitsContext& u, Exec exec) {
  const auto samples = a.sample(rho.box(), exec);
  require_magnetic(samples);
  auto parts = make_parts(rho.size());
  for_each_site(rho.size(), exec, [&](std::size_t site) {
    const FourPotential& p = samples[site];
    const Vec3 c = cross({p.a1, p.a2, p.a3}, rho[site]);
    for (int i = 0; i < 3; ++i) parts[i][site] = c[i];
  });
  const Vec3 integral = integrate_vector(parts, rho.box(), exec);
  const double e = u.charge();
  return {e * integral[0], e * integral[1], e * integral[2]};
}

double delta_S3_constant(double h3, const DipoleDensity& rho, const UnitsContext& u, Exec exec) {
  const LatticeBox& box = rho.box();
  std::vector<double> f(rho.size());
  for_each_site(rho.size(), exec, [&](std::size_t site) {
    const Vec3 x = box.position(site);
    f[site] = x[1] * rho[site][1] + x[0] * rho[site][0];
  });
  return -u.charge() * (h3 / 2.0) * integrate_scalar(f, box, exec);
}

double delta_L(const FieldConfiguration& a, const DipoleDensity& rho, const UnitsContext& u, int axis,
               const OamOptions& options) {
  check_axis(axis);
  const LatticeBox& box = rho.box();
  const Exec exec = options.exec;
  const auto samples = a.sample(box, exec);
  require_magnetic(samples);

  const int b = axis % 3;
  const int c = (axis + 1) % 3;
  std::vector<double> re(rho.size());
  std::vector<double> im(rho.size());

  auto accumulate = [&](std::size_t site, const PotentialGradient& grad) {
    const Vec3 x = box.position(site);
    Complex sum = 0.0;
    for (int j = 0; j < 3; ++j) {
      const Complex l_aj = -1i * (x[b] * grad[j][c] - x[c] * grad[j][b]);  // ℓ_axis A_j
      sum += rho[site][j] * l_aj;
    }
    const Complex value = -1i * sum;
    re[site] = value.real();
    im[site] = value.imag();
  };

  if (options.path == OamPath::analytic) {
    if (!a.has_analytic_gradient()) throw std::logic_error("analytic OAM path needs a closed-form gradient");
    for_each_site(rho.size(), exec, [&](std::size_t site) { accumulate(site, a.gradient(box.position(site))); });
  } else {
    std::array<std::vector<double>, 3> comps = make_parts(rho.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      comps[0][i] = samples[i].a1;
      comps[1][i] = samples[i].a2;
      comps[2][i] = samples[i].a3;
    }
    for_each_site(rho.size(), exec, [&](std::size_t site) {
      PotentialGradient grad{};
      for (int j = 0; j < 3; ++j)
        for (int d : {b, c})
          grad[j][d] = finite_difference<double>(comps[j], box, d, site, options.stencil);
      accumulate(site, grad);
    });
  }

  const double e = u.charge();
  const double real_part = e * integrate_scalar(re, box, exec);
  const double imag_part = e * integrate_scalar(im, box, exec);
  if (std::abs(imag_part) > kOamImagTolerance * std::max(std::abs(real_part), kResidualFloor))
    throw std::runtime_error("delta_L has imaginary part " + std::to_string(imag_part) + " against real part " +
                             std::to_string(real_part));
  return real_part;
}

double delta_L3(const FieldConfiguration& a, const DipoleDensity& rho, const UnitsContext& u,
                const OamOptions& options) {
  return delta_L(a, rho, u, 3, options);
}

Vec3 delta_J(const ConstantMagneticField& field, const DipoleDensity& rho, const UnitsContext& u, Exec exec) {
  const LatticeBox& box = rho.box();
  const Vec3& h = field.h;
  auto parts = make_parts(rho.size());
  for_each_site(rho.size(), exec, [&](std::size_t site) {
    const Vec3 v = cross(box.position(site), rho[site]);
    for (int i = 0; i < 3; ++i) {
      double term = 0.0;
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (const int eps = levi_civita(i, j, k); eps != 0) term += eps * h[j] * v[k];
      parts[i][site] = term;
    }
  });
  const Vec3 integral = integrate_vector(parts, box, exec);
  const double half_e = 0.5 * u.charge();
  return {half_e * integral[0], half_e * integral[1], half_e * integral[2]};
}

Vec3 spin_shift_functional(const SpinorField& psi, const SpinorField& dpsi, const SpinOperators& ops, Exec exec) {
  if (!(psi.box() == dpsi.box())) throw std::invalid_argument("psi and delta psi live on different lattices");
  auto parts = make_parts(psi.size());
  for_each_site(psi.size(), exec, [&](std::size_t site) {
    for (int i = 0; i < 3; ++i)
      parts[i][site] =
          (sandwich(dpsi[site], ops.spin[i], psi[site]) + sandwich(psi[site], ops.spin[i], dpsi[site])).real();
  });
  return integrate_vector(parts, psi.box(), exec);
}

double oam_shift_functional(const SpinorField& psi, const SpinorField& dpsi, int axis, Stencil stencil, Exec exec) {
  if (!(psi.box() == dpsi.box())) throw std::invalid_argument("psi and delta psi live on different lattices");
  const SpinorField l_psi = oam_operator_apply(psi, axis, stencil, exec);
  const SpinorField l_dpsi = oam_operator_apply(dpsi, axis, stencil, exec);
  std::vector<double> f(psi.size());
  for_each_site(psi.size(), exec, [&](std::size_t site) {
    f[site] = (inner(dpsi[site], l_psi[site]) + inner(psi[site], l_dpsi[site])).real();
  });
  return integrate_scalar(f, psi.box(), exec);
}

double mixing_factor(const PlaneWaveElectron& state) {
  const Complex z = state.lambda_plus * std::conj(state.lambda_minus);
  return z.real() + z.imag();
}

double expectation_delta_S3(const PlaneWaveElectron& state, double avg_a1, double avg_a2, const UnitsContext& u,
                            double velocity) {
  const Complex z = state.lambda_plus * std::conj(state.lambda_minus);
  return -2.0 * u.coupling_over_mass() * velocity * (avg_a1 * z.real() - avg_a2 * z.imag());
}

double expectation_delta_S3(const PlaneWaveElectron& state, double avg_a1, double avg_a2, const UnitsContext& u) {
  return expectation_delta_S3(state, avg_a1, avg_a2, u, length(state.momentum) / state.energy());
}

HeadlineEstimate headline_estimate(double tesla, double meters, const PlaneWaveElectron& state,
                                   const UnitsContext& u) {
  HeadlineEstimate est{};
  est.field_eV2 = tesla_to_natural(tesla, u);
  est.scale_inverse_eV = meter_to_natural(meters, u);
  const auto [a1, a2] = average_potential(est.field_eV2, est.scale_inverse_eV);
  // With ⟨A₂⟩ = −⟨A₁⟩ the Re and Im coefficients coincide.
  est.coefficient = -2.0 * u.coupling_over_mass() * a1;
  est.mixing = mixing_factor(state);
  est.value = expectation_delta_S3(state, a1, a2, u, 1.0);
  return est;
}

MixingMaximum mixing_factor_maximum(int weight_steps, int phase_steps) {
  if (weight_steps < 1 || phase_steps < 1) throw std::invalid_argument("grid search needs at least one step");
  MixingMaximum best{0.0, 0.0, 0.0};
  for (int i = 0; i <= weight_steps; ++i) {
    const double p = static_cast<double>(i) / weight_steps;
    const double modulus = std::sqrt(p * (1.0 - p));
    for (int k = 0; k < phase_steps; ++k) {
      const double phase = 2.0 * std::numbers::pi * k / phase_steps;
      const double value = std::abs(modulus * (std::cos(phase) + std::sin(phase)));
      if (value > best.value) best = {value, p, phase};
    }
  }
  return best;
}

AngularMomentumShift evaluate_shifts(const ConstantFieldScenario& scenario, Exec exec) {
  validate(scenario.state);
  const UnitsContext& u = scenario.units;
  const SpinorField psi = superposition_field(scenario.state, scenario.box, exec);
  const FieldConfiguration potential = constant_field_potential(scenario.field);

  const bool need_shift = scenario.corrected_density || scenario.l3_route == L3Route::functional;
  const SpinorField dpsi = need_shift ? magnetic_delta_psi(potential, psi, u, exec) : SpinorField(scenario.box);
  const DipoleDensity rho = rho_E(scenario.corrected_density ? psi + dpsi : psi, u, exec);
  const double norm = norm_integral(psi, exec);

  AngularMomentumShift out;
  out.dS = delta_S(potential, rho, u, exec);
  const OamOptions analytic{OamPath::analytic, scenario.stencil, exec};
  out.dL[0] = delta_L(potential, rho, u, 1, analytic);
  out.dL[1] = delta_L(potential, rho, u, 2, analytic);
  switch (scenario.l3_route) {
    case L3Route::analytic:
      out.dL[2] = delta_L3(potential, rho, u, analytic);
      break;
    case L3Route::finite_difference:
      out.dL[2] = delta_L3(potential, rho, u, {OamPath::finite_difference, scenario.stencil, exec});
      break;
    case L3Route::functional:
      out.dL[2] = oam_shift_functional(psi, dpsi, 3, scenario.stencil, exec);
      break;
  }
  out.dJ = delta_J(scenario.field, rho, u, exec);
  for (int i = 0; i < 3; ++i) {
    out.dS[i] /= norm;
    out.dL[i] /= norm;
    out.dJ[i] /= norm;
  }
  out.conservation_residual = std::abs(out.dL[2] + out.dS[2]);

  const auto [a1, a2] = average_potential(scenario.field.h[2], scenario.box.extents()[0]);
  out.expectation_dS3 = expectation_delta_S3(scenario.state, a1, a2, u);
  return out;
}

}  // namespace diracam
