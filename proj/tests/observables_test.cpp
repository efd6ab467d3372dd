#include <gtest/gtest.h>

#include "diracam/field.hpp"
#include "diracam/gamma.hpp"
#include "diracam/observables.hpp"
#include "test_support.hpp"

namespace {

using namespace diracam;
using diracam::testing::electron;
using diracam::testing::Gen;

constexpr double m = constants::electron_mass_eV;
const double kHalf = 1.0 / std::sqrt(2.0);

struct Setup {
  LatticeBox box;
  SpinorField psi;
  DipoleDensity rho;
};

Setup make(const PlaneWaveElectron& state, double d, int n, const UnitsContext& u = {}) {
  const LatticeBox box = LatticeBox::cornered(d, n);
  SpinorField psi = superposition_field(state, box);
  DipoleDensity rho = rho_E(psi, u);
  return {box, std::move(psi), std::move(rho)};
}

Vec3 lattice_momentum(Gen& gen, double d) {
  const double step = 2.0 * std::numbers::pi / d;
  return {step * gen.integer(-2, 2), step * gen.integer(-2, 2), nearest_lattice_momentum(gen.uniform(0.0, 10.0 * m), d)};
}

TEST(UnperturbedSpin, PolarizedAndMixedStates) {
  const SpinOperators ops = make_spin_operators(build_gamma_dirac());
  const double d = 1e4;
  const double k3 = nearest_lattice_momentum(2.0 * m, d);
  const Vec3 up = unperturbed_spin(make(electron({0, 0, k3}, 1.0, 0.0), d, 4).psi, ops);
  EXPECT_NEAR(up[2], 0.5, 1e-14);
  const Vec3 down = unperturbed_spin(make(electron({0, 0, k3}, 0.0, 1.0), d, 4).psi, ops);
  EXPECT_NEAR(down[2], -0.5, 1e-14);
  const Vec3 x = unperturbed_spin(make(electron({0, 0, 0}, kHalf, kHalf), d, 4).psi, ops);
  EXPECT_NEAR(x[0], 0.5, 1e-14);
  EXPECT_NEAR(x[1], 0.0, 1e-14);
  EXPECT_NEAR(x[2], 0.0, 1e-14);
}

TEST(DeltaS, RestFrameGivesNoShift) {
  const auto s = make(electron({0, 0, 0}, kHalf, Complex(0.0, kHalf)), 1e5, 6);
  const Vec3 ds = delta_S(constant_field_potential({{0, 0, 1e-3}}), s.rho, UnitsContext());
  for (double c : ds) EXPECT_EQ(c, 0.0);
}

TEST(DeltaS, ThirdComponentMatchesConstantFieldForm) {
  Gen gen(61);
  for (int trial = 0; trial < 10; ++trial) {
    const double d = 1e5;
    const auto [lp, lm] = gen.amplitudes();
    const auto s = make(electron(lattice_momentum(gen, d), lp, lm), d, 8);
    const double h3 = gen.uniform(-1e-3, 1e-3);
    const UnitsContext u;
    const double general = delta_S(constant_field_potential({{0, 0, h3}}), s.rho, u)[2];
    const double special = delta_S3_constant(h3, s.rho, u);
    EXPECT_LE(relative_difference(general, special), 1e-12);
  }
}

TEST(DeltaS, RejectsElectricPotential) {
  const auto s = make(electron({0, 0, 0}, 1.0, 0.0), 1.0, 4);
  EXPECT_THROW(delta_S(uniform_potential({0.5, 0, 0, 0}), s.rho, UnitsContext()), std::invalid_argument);
  EXPECT_THROW(delta_L3(uniform_potential({0.5, 0, 0, 0}), s.rho, UnitsContext()), std::invalid_argument);
}

TEST(DeltaL, UniformPotentialCarriesNoOrbitalShift) {
  const double d = 1e5;
  const auto s = make(electron({0, 0, nearest_lattice_momentum(3 * m, d)}, kHalf, Complex(0, kHalf)), d, 6);
  const FieldConfiguration a = uniform_potential({0.0, 0.2, -0.1, 0.05});
  const UnitsContext u;
  EXPECT_EQ(delta_L3(a, s.rho, u), 0.0);
  // One-sided differences of a constant cancel only up to rounding.
  EXPECT_LE(std::abs(delta_L3(a, s.rho, u, {OamPath::finite_difference, Stencil::one_sided, Exec::parallel})), 1e-30);
}

TEST(DeltaL, ErrorPaths) {
  const auto s = make(electron({0, 0, 0}, 1.0, 0.0), 1.0, 4);
  const UnitsContext u;
  const FieldConfiguration no_gradient =
      FieldConfiguration::closed_form([](const Vec3& x) { return FourPotential{0, x[1], 0, 0}; });
  EXPECT_THROW(delta_L3(no_gradient, s.rho, u), std::logic_error);
  EXPECT_NO_THROW(delta_L3(no_gradient, s.rho, u, {OamPath::finite_difference, Stencil::one_sided, Exec::parallel}));
  EXPECT_THROW(delta_L(constant_field_potential({}), s.rho, u, 0), std::out_of_range);
  EXPECT_THROW(delta_L(constant_field_potential({}), s.rho, u, 4), std::out_of_range);
}

TEST(Conservation, AnalyticPathHoldsPerState) {
  Gen gen(62);
  for (int trial = 0; trial < 20; ++trial) {
    const double d = gen.uniform(1e3, 1e7);
    const auto [lp, lm] = gen.amplitudes();
    const auto s = make(electron(lattice_momentum(gen, d), lp, lm), d, 8);
    const FieldConfiguration a = constant_field_potential({{0, 0, gen.uniform(-1.0, 1.0) / d}});
    const UnitsContext u;
    const double ds3 = delta_S(a, s.rho, u)[2];
    const double dl3 = delta_L3(a, s.rho, u);
    EXPECT_LE(std::abs(ds3 + dl3) / std::max({std::abs(ds3), std::abs(dl3), kResidualFloor}), 1e-12)
        << "trial " << trial;
  }
}

TEST(Conservation, OneSidedDifferencesAreExactForLinearPotential) {
  const double d = 1e5;
  const auto s = make(electron({0, 0, nearest_lattice_momentum(5 * m, d)}, kHalf, std::polar(kHalf, 0.7)), d, 8);
  const FieldConfiguration a = constant_field_potential({{0, 0, 1e-4}});
  const UnitsContext u;
  const double analytic = delta_L3(a, s.rho, u);
  const double fd = delta_L3(a, s.rho, u, {OamPath::finite_difference, Stencil::one_sided, Exec::parallel});
  EXPECT_LE(relative_difference(analytic, fd), 1e-12);
  // Periodic wrap telescopes along every line and loses the whole shift.
  const double wrapped = delta_L3(a, s.rho, u, {OamPath::finite_difference, Stencil::periodic, Exec::parallel});
  EXPECT_LE(std::abs(wrapped), 1e-12 * std::abs(analytic));
}

TEST(DeltaJ, ThirdComponentVanishesForFieldAlongZ) {
  Gen gen(63);
  for (int trial = 0; trial < 10; ++trial) {
    const double d = 1e5;
    const auto [lp, lm] = gen.amplitudes();
    const auto s = make(electron(lattice_momentum(gen, d), lp, lm), d, 6);
    EXPECT_EQ(delta_J({{0, 0, gen.uniform(-1, 1)}}, s.rho, UnitsContext())[2], 0.0);
  }
}

TEST(DeltaJ, ZeroField) {
  const auto s = make(electron({0, 0, nearest_lattice_momentum(m, 1e5)}, kHalf, kHalf), 1e5, 4);
  for (double c : delta_J({}, s.rho, UnitsContext())) EXPECT_EQ(c, 0.0);
}

// ΔS + ΔL = ½|e| H × (x × ρ_E) holds site by site for any constant H.
TEST(DeltaJ, EqualsSpinPlusOrbitalForGeneralField) {
  Gen gen(64);
  for (int trial = 0; trial < 10; ++trial) {
    const double d = 1e5;
    const auto [lp, lm] = gen.amplitudes();
    const auto s = make(electron(lattice_momentum(gen, d), lp, lm), d, 6);
    const ConstantMagneticField h{gen.vec(1e-4)};
    const FieldConfiguration a = constant_field_potential(h);
    const UnitsContext u;
    const Vec3 dj = delta_J(h, s.rho, u);
    const Vec3 ds = delta_S(a, s.rho, u);
    double scale = 0.0;
    for (int i = 0; i < 3; ++i) scale = std::max(scale, std::abs(dj[i]));
    for (int i = 1; i <= 3; ++i) {
      const double dl = delta_L(a, s.rho, u, i);
      EXPECT_NEAR(dj[i - 1], ds[i - 1] + dl, 1e-11 * scale) << "component " << i;
      // The opposite overall sign is ruled out.
      if (std::abs(dj[i - 1]) > 1e-3 * scale) EXPECT_GT(std::abs(dj[i - 1] + ds[i - 1] + dl), std::abs(dj[i - 1]));
    }
  }
}

TEST(Functional, SpinShiftMatchesDensityRoute) {
  Gen gen(65);
  const SpinOperators ops = make_spin_operators(build_gamma_dirac());
  for (int trial = 0; trial < 10; ++trial) {
    const double d = 1e5;
    const auto [lp, lm] = gen.amplitudes();
    const auto s = make(electron(lattice_momentum(gen, d), lp, lm), d, 6);
    const FieldConfiguration a = constant_field_potential({gen.vec(1e-4)});
    const UnitsContext u;
    const Vec3 via_rho = delta_S(a, s.rho, u);
    const Vec3 via_psi = spin_shift_functional(s.psi, magnetic_delta_psi(a, s.psi, u), ops);
    double scale = 1e-30;
    for (double c : via_rho) scale = std::max(scale, std::abs(c));
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(via_psi[i], via_rho[i], 1e-10 * scale) << i;
  }
}

TEST(Functional, LatticeMismatchThrows) {
  const SpinorField a(LatticeBox::cornered(1.0, 4));
  const SpinorField b(LatticeBox::cornered(2.0, 4));
  EXPECT_THROW(spin_shift_functional(a, b, make_spin_operators(build_gamma_dirac())), std::invalid_argument);
  EXPECT_THROW(oam_shift_functional(a, b, 3), std::invalid_argument);
}

TEST(Expectation, PolarizedStatesGiveZero) {
  const UnitsContext u;
  const Vec3 k{0, 0, 4 * m};
  EXPECT_EQ(expectation_delta_S3(electron(k, 1.0, 0.0), -2.0, 2.0, u), 0.0);
  EXPECT_EQ(expectation_delta_S3(electron(k, 0.0, std::polar(1.0, 0.4)), -2.0, 2.0, u), 0.0);
  EXPECT_EQ(expectation_delta_S3(electron({0, 0, 0}, kHalf, kHalf), -2.0, 2.0, u), 0.0);
}

TEST(Expectation, HandSubstitution) {
  // λ₊ = λ₋ = 1/√2 real: Re = ½, Im = 0, so ⟨ΔS₃⟩ = (|e|/m)(|k|/E)(H₃d/2).
  const UnitsContext u;
  const double h3 = 3e-3, d = 2e6;
  const auto state = electron({0, 0, 2 * m}, kHalf, kHalf);
  const auto [a1, a2] = average_potential(h3, d);
  const double v = 2.0 / std::sqrt(5.0);
  const double expected = u.charge() / m * v * h3 * d / 2.0;
  EXPECT_NEAR(expectation_delta_S3(state, a1, a2, u) / expected, 1.0, 1e-14);
  EXPECT_NEAR(expectation_delta_S3(state, a1, a2, u, 1.0) / (expected / v), 1.0, 1e-14);
  // Imaginary mixing enters through ⟨A₂⟩.
  const auto imag = electron({0, 0, 2 * m}, kHalf, Complex(0.0, -kHalf));  // λ₊λ₋* = i/2
  EXPECT_NEAR(expectation_delta_S3(imag, a1, a2, u) / expected, 1.0, 1e-14);
}

TEST(Headline, Coefficients) {
  const auto state = electron({0, 0, 10 * m}, kHalf, std::polar(kHalf, -std::numbers::pi / 4));
  const HeadlineEstimate p = headline_estimate(1e-5, 1.0, state, UnitsContext(ChargeConvention::physical));
  const HeadlineEstimate q = headline_estimate(1e-5, 1.0, state, UnitsContext(ChargeConvention::unit));
  EXPECT_NEAR(p.coefficient, 5.8668e-3, 1e-6);
  EXPECT_NEAR(q.coefficient, 1.9374e-2, 1e-5);
  EXPECT_NEAR(q.coefficient / p.coefficient, 1.0 / physical_charge(), 1e-12);
  EXPECT_NEAR(p.mixing, kHalf, 1e-15);
  EXPECT_NEAR(p.value, p.coefficient * p.mixing, 1e-16);
}

TEST(Headline, FieldSignFlipsResult) {
  const auto state = electron({0, 0, 10 * m}, kHalf, std::polar(kHalf, -0.3));
  const UnitsContext u;
  const HeadlineEstimate plus = headline_estimate(1e-5, 1.0, state, u);
  const HeadlineEstimate minus = headline_estimate(-1e-5, 1.0, state, u);
  EXPECT_EQ(plus.value, -minus.value);
  EXPECT_EQ(headline_estimate(0.0, 1.0, state, u).coefficient, 0.0);
}

TEST(Mixing, GridMaximumIsOneOverRootTwo) {
  const MixingMaximum best = mixing_factor_maximum(200, 720);
  EXPECT_NEAR(best.value, kHalf, 1e-4);
  EXPECT_NEAR(best.plus_weight, 0.5, 1e-9);
  EXPECT_NEAR(std::fmod(best.phase, std::numbers::pi), std::numbers::pi / 4, 1e-2);
  EXPECT_GT(best.value, 0.5);
  EXPECT_THROW(mixing_factor_maximum(0, 10), std::invalid_argument);
}

TEST(Mixing, Factor) {
  EXPECT_NEAR(mixing_factor(electron({}, kHalf, kHalf)), 0.5, 1e-15);
  EXPECT_NEAR(mixing_factor(electron({}, 0.6, Complex(0.0, 0.8))), -0.48, 1e-15);
  EXPECT_EQ(mixing_factor(electron({}, 1.0, 0.0)), 0.0);
}

ConstantFieldScenario scenario(double h3, L3Route route) {
  const UnitsContext u;
  const double d = meter_to_natural(1.0, u);
  return {.state = electron({0, 0, nearest_lattice_momentum(10 * m, d)}, kHalf, std::polar(kHalf, -0.6)),
          .box = LatticeBox::cornered(d, 12),
          .field = {{0, 0, h3}},
          .units = u,
          .l3_route = route};
}

TEST(Scenario, ConservesAndReportsClosedForm) {
  const auto sc = scenario(tesla_to_natural(1e-5, UnitsContext()), L3Route::analytic);
  const AngularMomentumShift s = evaluate_shifts(sc);
  EXPECT_LE(s.conservation_residual, 1e-12 * std::abs(s.dS[2]));
  EXPECT_EQ(s.dJ[2], 0.0);
  const auto [a1, a2] = average_potential(sc.field.h[2], sc.box.extents()[0]);
  EXPECT_EQ(s.expectation_dS3, expectation_delta_S3(sc.state, a1, a2, sc.units));
  // The true box mean of A is half the printed average.
  EXPECT_NEAR(s.dS[2] / s.expectation_dS3, 0.5, 1e-10);
}

TEST(Scenario, RoutesAgree) {
  const double h3 = tesla_to_natural(1e-5, UnitsContext());
  const AngularMomentumShift a = evaluate_shifts(scenario(h3, L3Route::analytic));
  const AngularMomentumShift f = evaluate_shifts(scenario(h3, L3Route::finite_difference));
  const AngularMomentumShift g = evaluate_shifts(scenario(h3, L3Route::functional));
  EXPECT_LE(relative_difference(a.dL[2], f.dL[2]), 1e-12);
  EXPECT_LE(relative_difference(a.dL[2], g.dL[2]), 1e-10);  // k ∥ z: ψ is constant across x₁, x₂
  EXPECT_EQ(a.dS, f.dS);
}

TEST(Scenario, CorrectedDensityIsSecondOrderSmall) {
  const double h3 = tesla_to_natural(1e-5, UnitsContext());
  auto sc = scenario(h3, L3Route::analytic);
  const AngularMomentumShift plain = evaluate_shifts(sc);
  sc.corrected_density = true;
  const AngularMomentumShift corrected = evaluate_shifts(sc);
  EXPECT_LE(relative_difference(plain.dS[2], corrected.dS[2]), 1e-3);
}

TEST(Scenario, ZeroField) {
  const AngularMomentumShift s = evaluate_shifts(scenario(0.0, L3Route::analytic));
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(s.dS[i], 0.0);
    EXPECT_EQ(s.dL[i], 0.0);
    EXPECT_EQ(s.dJ[i], 0.0);
  }
  EXPECT_EQ(s.expectation_dS3, 0.0);
}

}  // namespace
