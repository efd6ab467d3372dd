#include "diracam/spinor.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "diracam/gamma.hpp"

namespace diracam {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e^{i k x_j} at the cell centres of one axis.
std::vector<Complex> axis_phases(const LatticeBox& box, int axis, double k) {
  const int n = box.points_per_axis();
  const double length = box.extents()[axis];
  const double modes = k * length / kTwoPi;
  const double rounded = std::nearbyint(modes);
  const double origin_phase = k * box.origin()[axis];

  std::vector<Complex> out(static_cast<std::size_t>(n));
  const bool commensurate =
      std::abs(modes - rounded) <= 1e-9 * std::max(1.0, std::abs(modes)) && std::abs(rounded) < 0x1p52;
  if (commensurate) {
    // k x_j = 2π m (2j+1) / 2N exactly; reduce m (2j+1) mod 2N in integers.
    const std::int64_t period = 2 * static_cast<std::int64_t>(n);
    const std::int64_t m = static_cast<std::int64_t>(rounded) % period;
    for (int j = 0; j < n; ++j) {
      std::int64_t r = (m * (2 * j + 1)) % period;
      if (r < 0) r += period;
      out[j] = std::polar(1.0, origin_phase + kTwoPi * static_cast<double>(r) / static_cast<double>(period));
    }
  } else {
    for (int j = 0; j < n; ++j) out[j] = std::polar(1.0, k * box.coordinate(axis, j));
  }
  return out;
}

Spinor4 amplitude(const PlaneWaveElectron& state, double volume) {
  const Spinor4 up = plane_wave_spinor(state.momentum, SpinLabel::up, state.mass);
  const Spinor4 down = plane_wave_spinor(state.momentum, SpinLabel::down, state.mass);
  const double scale = 1.0 / std::sqrt(2.0 * state.energy() * volume);
  return scale * (state.lambda_plus * up + state.lambda_minus * down);
}

}  // namespace

double PlaneWaveElectron::energy() const { return std::sqrt(dot(momentum, momentum) + mass * mass); }

double state_norm(const PlaneWaveElectron& state) {
  return std::norm(state.lambda_plus) + std::norm(state.lambda_minus);
}

void validate(const PlaneWaveElectron& state) {
  if (!(state.mass > 0.0)) throw std::invalid_argument("electron mass must be positive");
  const double n = state_norm(state);
  if (std::abs(n - 1.0) > 1e-10)
    throw std::invalid_argument("|lambda+|^2 + |lambda-|^2 = " + std::to_string(n) + ", expected 1");
}

Spinor4 plane_wave_spinor(const Vec3& k, SpinLabel s, double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("electron mass must be positive");
  const double energy = std::sqrt(dot(k, k) + mass * mass);
  const double upper = std::sqrt(energy + mass);
  const Complex xi0 = s == SpinLabel::up ? 1.0 : 0.0;
  const Complex xi1 = s == SpinLabel::up ? 0.0 : 1.0;
  // σ·k = [[k₃, k₁ − ik₂], [k₁ + ik₂, −k₃]]
  const Complex chi0 = k[2] * xi0 + Complex(k[0], -k[1]) * xi1;
  const Complex chi1 = Complex(k[0], k[1]) * xi0 - k[2] * xi1;
  const double lower = upper / (energy + mass);
  return {upper * xi0, upper * xi1, lower * chi0, lower * chi1};
}

double dirac_residual(const Vec3& k, double mass, const Spinor4& u) {
  static const GammaSet g = build_gamma_dirac();
  const double energy = std::sqrt(dot(k, k) + mass * mass);
  ComplexMatrix4 op = energy * g.gamma[0] - mass * ComplexMatrix4::identity();
  for (int i = 0; i < 3; ++i) op -= k[i] * g.gamma[i + 1];
  return norm(op * u) / ((energy + mass) * norm(u));
}

SpinorField::SpinorField(LatticeBox box, std::vector<Spinor4> data) : box_(box), data_(std::move(data)) {
  if (data_.size() != box_.site_count())
    throw std::invalid_argument("spinor field has " + std::to_string(data_.size()) + " samples for " +
                                std::to_string(box_.site_count()) + " sites");
}

SpinorField::SpinorField(LatticeBox box) : box_(box), data_(box.site_count()) {}

SpinorField operator+(const SpinorField& a, const SpinorField& b) {
  if (!(a.box() == b.box())) throw std::invalid_argument("spinor fields live on different lattices");
  std::vector<Spinor4> sum(a.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
  return SpinorField(a.box(), std::move(sum));
}

Spinor4 superposition_value(const PlaneWaveElectron& state, double volume, const Vec3& x) {
  return std::polar(1.0, dot(state.momentum, x)) * amplitude(state, volume);
}

SpinorField superposition_field(const PlaneWaveElectron& state, const LatticeBox& box, Exec exec) {
  const Spinor4 base = amplitude(state, box.volume());
  const std::array<std::vector<Complex>, 3> phases = {axis_phases(box, 0, state.momentum[0]),
                                                      axis_phases(box, 1, state.momentum[1]),
                                                      axis_phases(box, 2, state.momentum[2])};
  std::vector<Spinor4> data(box.site_count());
  for_each_site(data.size(), exec, [&](std::size_t site) {
    const auto c = box.coords(site);
    data[site] = (phases[0][c[0]] * phases[1][c[1]] * phases[2][c[2]]) * base;
  });
  return SpinorField(box, std::move(data));
}

double nearest_lattice_momentum(double k, double length) {
  return kTwoPi * std::nearbyint(k * length / kTwoPi) / length;
}

}  // namespace diracam
