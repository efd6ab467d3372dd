#include <gtest/gtest.h>

#include "diracam/field.hpp"
#include "diracam/units.hpp"
#include "test_support.hpp"

namespace {

using namespace diracam;
using diracam::testing::Gen;

// SI inputs, CODATA 2018. The critical field B_c = m_e² c² / (e ħ) satisfies
// e_nat B_c[eV²] = m_e[eV]² in Heaviside–Lorentz natural units, which fixes
// the tesla without going through ħc².
constexpr double kMassKg = 9.1093837015e-31;
constexpr double kChargeC = 1.602176634e-19;
constexpr double kHbarJs = 1.054571817e-34;
constexpr double kC = 299792458.0;

double critical_field_tesla() { return kMassKg * kMassKg * kC * kC / (kChargeC * kHbarJs); }

double oracle_tesla_to_eV2() {
  const double me = constants::electron_mass_eV;
  const double e_nat = std::sqrt(4.0 * std::numbers::pi * constants::fine_structure);
  return me * me / (e_nat * critical_field_tesla());
}

double oracle_meter_to_inverse_eV() {
  const double hbar_c_eV_m = kHbarJs * kC / kChargeC;
  return 1.0 / hbar_c_eV_m;
}

TEST(Units, CriticalFieldValue) { EXPECT_NEAR(critical_field_tesla() / 4.414e9, 1.0, 1e-3); }

TEST(Units, TeslaMatchesCriticalFieldOracle) {
  const UnitsContext u;
  EXPECT_NEAR(u.tesla_to_eV2 / oracle_tesla_to_eV2(), 1.0, 1e-6);
  EXPECT_NEAR(u.tesla_to_eV2, 195.35, 0.01);
}

TEST(Units, MeterMatchesHbarCOracle) {
  const UnitsContext u;
  EXPECT_NEAR(u.meter_to_inverse_eV / oracle_meter_to_inverse_eV(), 1.0, 1e-6);
  EXPECT_NEAR(u.meter_to_inverse_eV / 5.0677e6, 1.0, 1e-4);
}

TEST(Units, ConversionsIndependentOfChargeConvention) {
  const UnitsContext p(ChargeConvention::physical);
  const UnitsContext q(ChargeConvention::unit);
  EXPECT_EQ(p.tesla_to_eV2, q.tesla_to_eV2);
  EXPECT_EQ(p.meter_to_inverse_eV, q.meter_to_inverse_eV);
}

TEST(Units, Charges) {
  EXPECT_NEAR(physical_charge(), 0.30282212, 1e-8);
  EXPECT_EQ(UnitsContext(ChargeConvention::unit).charge(), 1.0);
  EXPECT_EQ(UnitsContext(ChargeConvention::physical).charge(), physical_charge());
  EXPECT_DOUBLE_EQ(UnitsContext(ChargeConvention::unit).coupling_over_mass(), 1.0 / constants::electron_mass_eV);
}

TEST(Units, ParseChargeConvention) {
  EXPECT_EQ(parse_charge_convention("unit"), ChargeConvention::unit);
  EXPECT_EQ(parse_charge_convention("physical"), ChargeConvention::physical);
  EXPECT_EQ(to_string(ChargeConvention::unit), "unit");
  EXPECT_THROW(parse_charge_convention("gaussian"), std::invalid_argument);
  EXPECT_THROW(parse_charge_convention(""), std::invalid_argument);
}

TEST(Units, RoundTrips) {
  const UnitsContext u;
  Gen gen(31);
  for (int trial = 0; trial < 100; ++trial) {
    const double t = std::exp(gen.uniform(-30.0, 10.0));
    const double l = std::exp(gen.uniform(-30.0, 10.0));
    EXPECT_NEAR(natural_to_tesla(tesla_to_natural(t, u), u) / t, 1.0, 1e-12);
    EXPECT_NEAR(natural_to_meter(meter_to_natural(l, u), u) / l, 1.0, 1e-12);
  }
  EXPECT_EQ(tesla_to_natural(0.0, u), 0.0);
}

TEST(Field, SymmetricGaugeExamples) {
  const FieldConfiguration a = constant_field_potential({{0.0, 0.0, 2.0}});
  EXPECT_EQ(a.at({1, 0, 0}), (FourPotential{0, 0, 1, 0}));
  EXPECT_EQ(a.at({0, 1, 0}), (FourPotential{0, -1, 0, 0}));
  EXPECT_EQ(a.at({0, 0, 5}), (FourPotential{}));
  EXPECT_TRUE(a.has_analytic_gradient());
  EXPECT_EQ(a.kind(), FieldConfiguration::Kind::closed_form);
}

// Curl and divergence by central differences of the closed form. A is
// linear, so the differences are exact up to rounding.
TEST(Field, CurlRecoversFieldAndDivergenceVanishes) {
  Gen gen(32);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec3 h = gen.vec(5.0);
    const Vec3 x = gen.vec(10.0);
    const FieldConfiguration a = constant_field_potential({h});
    const double step = 1e-3;
    std::array<Vec3, 3> d{};  // d[j][b] = ∂_b A_j
    for (int b = 0; b < 3; ++b) {
      Vec3 xp = x, xm = x;
      xp[b] += step;
      xm[b] -= step;
      for (int j = 0; j < 3; ++j) d[j][b] = (a.at(xp).spatial(j) - a.at(xm).spatial(j)) / (2.0 * step);
    }
    const Vec3 curl{d[2][1] - d[1][2], d[0][2] - d[2][0], d[1][0] - d[0][1]};
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(curl[i], h[i], 1e-9);
    EXPECT_NEAR(d[0][0] + d[1][1] + d[2][2], 0.0, 1e-9);

    const PotentialGradient g = a.gradient(x);
    for (int j = 0; j < 3; ++j)
      for (int b = 0; b < 3; ++b) EXPECT_NEAR(g[j][b], d[j][b], 1e-9) << j << b;
  }
}

TEST(Field, AveragePotential) {
  const auto [a1, a2] = average_potential(2.0, 3.0);
  EXPECT_EQ(a1, -3.0);
  EXPECT_EQ(a2, 3.0);
  const auto [z1, z2] = average_potential(0.0, 3.0);
  EXPECT_EQ(z1, 0.0);
  EXPECT_EQ(z2, 0.0);
  EXPECT_THROW(average_potential(1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(average_potential(1.0, -1.0), std::invalid_argument);
}

TEST(Field, AveragePotentialIsFarCornerValue) {
  // The printed averages are A at (d, d); the box mean on [0,d]³ is half that.
  const double h3 = 1.7, d = 2.5;
  const FieldConfiguration a = constant_field_potential({{0, 0, h3}});
  const auto [a1, a2] = average_potential(h3, d);
  EXPECT_DOUBLE_EQ(a.at({d, d, 0}).a1, a1);
  EXPECT_DOUBLE_EQ(a.at({d, d, 0}).a2, a2);
  const LatticeBox box = LatticeBox::cornered(d, 8);
  double m1 = 0.0, m2 = 0.0;
  for (const auto& v : a.sample(box)) {
    m1 += v.a1;
    m2 += v.a2;
  }
  EXPECT_NEAR(m1 / box.site_count(), 0.5 * a1, 1e-12);
  EXPECT_NEAR(m2 / box.site_count(), 0.5 * a2, 1e-12);
}

TEST(Field, UniformPotential) {
  const FourPotential v{0.0, 1.0, -2.0, 0.5};
  const FieldConfiguration a = uniform_potential(v);
  EXPECT_EQ(a.at({3, 4, 5}), v);
  for (const auto& row : a.gradient({1, 2, 3}))
    for (double x : row) EXPECT_EQ(x, 0.0);
}

TEST(Field, SampledConfiguration) {
  const LatticeBox box = LatticeBox::cornered(1.0, 4);
  std::vector<FourPotential> values(box.site_count(), FourPotential{0, 1, 2, 3});
  const FieldConfiguration a = FieldConfiguration::sampled(box, values);
  EXPECT_EQ(a.kind(), FieldConfiguration::Kind::sampled);
  EXPECT_FALSE(a.has_analytic_gradient());
  EXPECT_EQ(a.sample(box), values);
  EXPECT_THROW(a.sample(LatticeBox::cornered(2.0, 4)), std::invalid_argument);
  EXPECT_THROW(a.at({0, 0, 0}), std::logic_error);
  EXPECT_THROW(a.gradient({0, 0, 0}), std::logic_error);
  EXPECT_THROW(FieldConfiguration::sampled(box, std::vector<FourPotential>(3)), std::invalid_argument);
}

TEST(Field, ClosedFormWithoutGradient) {
  const FieldConfiguration a = FieldConfiguration::closed_form([](const Vec3& x) {
    return FourPotential{0, x[1], 0, 0};
  });
  EXPECT_FALSE(a.has_analytic_gradient());
  EXPECT_THROW(a.gradient({0, 0, 0}), std::logic_error);
  EXPECT_THROW(FieldConfiguration::closed_form({}), std::invalid_argument);
}

}  // namespace
