#include "diracam/quadrature.hpp"

#include <stdexcept>
#include <string>

namespace diracam {
namespace {

using namespace std::complex_literals;

void check_axis(int axis) {
  if (axis < 1 || axis > 3) throw std::out_of_range("axis " + std::to_string(axis) + " not in 1..3");
}

std::size_t stride(const LatticeBox& box, int axis) {
  const auto n = static_cast<std::size_t>(box.points_per_axis());
  return axis == 0 ? 1 : (axis == 1 ? n : n * n);
}

}  // namespace

double integrate_scalar(std::span<const double> f, const LatticeBox& box, Exec exec) {
  if (f.size() != box.site_count())
    throw std::invalid_argument("integrand has " + std::to_string(f.size()) + " samples for " +
                                std::to_string(box.site_count()) + " sites");
  return box.cell_volume() * pairwise_sum(f, exec);
}

template <class T>
T finite_difference(std::span<const T> g, const LatticeBox& box, int axis, std::size_t site, Stencil stencil) {
  const int n = box.points_per_axis();
  const int j = box.coords(site)[axis];
  const std::size_t s = stride(box, axis);
  const double h = box.spacing(axis);
  const std::size_t line_start = site - static_cast<std::size_t>(j) * s;
  auto at = [&](int jj) { return g[line_start + static_cast<std::size_t>(jj) * s]; };

  if (stencil == Stencil::periodic) return (at((j + 1) % n) - at((j + n - 1) % n)) / (2.0 * h);
  if (j == 0) return (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h);
  if (j == n - 1) return (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)) / (2.0 * h);
  return (at(j + 1) - at(j - 1)) / (2.0 * h);
}

template double finite_difference<double>(std::span<const double>, const LatticeBox&, int, std::size_t, Stencil);
template Complex finite_difference<Complex>(std::span<const Complex>, const LatticeBox&, int, std::size_t, Stencil);

std::vector<Complex> oam_operator_apply(std::span<const Complex> g, const LatticeBox& box, int axis, Stencil stencil,
                                        Exec exec) {
  check_axis(axis);
  if (g.size() != box.site_count()) throw std::invalid_argument("field size does not match lattice");
  // ℓ_a = −i (x_b ∂_c − x_c ∂_b), (a, b, c) cyclic
  const int b = axis % 3;
  const int c = (axis + 1) % 3;
  std::vector<Complex> out(g.size());
  for_each_site(g.size(), exec, [&](std::size_t site) {
    const Vec3 x = box.position(site);
    const Complex dc = finite_difference(g, box, c, site, stencil);
    const Complex db = finite_difference(g, box, b, site, stencil);
    out[site] = -1i * (x[b] * dc - x[c] * db);
  });
  return out;
}

SpinorField oam_operator_apply(const SpinorField& psi, int axis, Stencil stencil, Exec exec) {
  check_axis(axis);
  const LatticeBox& box = psi.box();
  std::vector<Spinor4> out(psi.size());
  for (int comp = 0; comp < 4; ++comp) {
    std::vector<Complex> g(psi.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = psi[i][comp];
    const auto lg = oam_operator_apply(g, box, axis, stencil, exec);
    for (std::size_t i = 0; i < g.size(); ++i) out[i][comp] = lg[i];
  }
  return SpinorField(box, std::move(out));
}

double norm_integral(const SpinorField& psi, Exec exec) {
  std::vector<double> density(psi.size());
  for_each_site(psi.size(), exec, [&](std::size_t site) { density[site] = inner(psi[site], psi[site]).real(); });
  return integrate_scalar(density, psi.box(), exec);
}

}  // namespace diracam
