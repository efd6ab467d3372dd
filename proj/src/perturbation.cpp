#include "diracam/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace diracam {

using namespace std::complex_literals;

DipoleDensity::DipoleDensity(LatticeBox box, std::vector<Vec3> data, double imag_residue)
    : box_(box), data_(std::move(data)), imag_residue_(imag_residue) {
  if (data_.size() != box_.site_count()) throw std::invalid_argument("dipole density size does not match lattice");
}

SpinorField delta_psi(std::span<const FourPotential> a, const SpinorField& psi, const UnitsContext& u, Exec exec) {
  if (a.size() != psi.size())
    throw std::invalid_argument("potential has " + std::to_string(a.size()) + " samples, spinor field " +
                                std::to_string(psi.size()));
  const double c = u.coupling_over_mass();
  std::vector<Spinor4> out(psi.size());
  for_each_site(out.size(), exec, [&](std::size_t site) {
    const auto& [a0, a1, a2, a3] = a[site];
    const Spinor4& p = psi[site];
    out[site] = {c * (a0 * p[2] + a1 * p[3] - 1i * a2 * p[3] + a3 * p[2]),
                 c * (a0 * p[3] + a1 * p[2] + 1i * a2 * p[2] - a3 * p[3]),
                 c * (a0 * p[0] - a1 * p[1] + 1i * a2 * p[1] - a3 * p[0]),
                 c * (a0 * p[1] - a1 * p[0] - 1i * a2 * p[0] + a3 * p[1])};
  });
  return SpinorField(psi.box(), std::move(out));
}

SpinorField delta_psi(const FieldConfiguration& a, const SpinorField& psi, const UnitsContext& u, Exec exec) {
  const auto samples = a.sample(psi.box(), exec);
  return delta_psi(samples, psi, u, exec);
}

SpinorField magnetic_delta_psi(const FieldConfiguration& a, const SpinorField& psi, const UnitsContext& u,
                               Exec exec) {
  const auto samples = a.sample(psi.box(), exec);
  if (std::any_of(samples.begin(), samples.end(), [](const FourPotential& p) { return p.a0 != 0.0; }))
    throw std::invalid_argument("magnetic shift requires A0 == 0 everywhere");
  return delta_psi(samples, psi, u, exec);
}

DipoleDensity rho_E(const SpinorField& psi, const UnitsContext& u, const GammaSet& g, Exec exec) {
  const double inv_mass = 1.0 / u.electron_mass;
  std::vector<Vec3> re(psi.size());
  std::vector<double> im(psi.size());
  std::vector<double> scale(psi.size());
  for_each_site(psi.size(), exec, [&](std::size_t site) {
    double worst_imag = 0.0;
    for (int i = 0; i < 3; ++i) {
      const Complex value = 1i * inv_mass * sandwich(psi[site], g.gamma[i + 1], psi[site]);
      re[site][i] = value.real();
      worst_imag = std::max(worst_imag, std::abs(value.imag()));
    }
    im[site] = worst_imag;
    scale[site] = inv_mass * inner(psi[site], psi[site]).real();
  });

  // |ψ†γⁱψ| ≤ ψ†ψ, so ψ†ψ/m bounds every component and stays meaningful
  // when ρ_E itself cancels to rounding.
  const double max_imag = *std::max_element(im.begin(), im.end());
  const double max_scale = *std::max_element(scale.begin(), scale.end());
  const double residue = max_scale > 0.0 ? max_imag / max_scale : 0.0;
  if (residue > kRhoImagTolerance)
    throw std::runtime_error("rho_E has imaginary residue " + std::to_string(residue) +
                             " relative; gamma matrices are not anti-hermitian");
  return DipoleDensity(psi.box(), std::move(re), residue);
}

DipoleDensity rho_E(const SpinorField& psi, const UnitsContext& u, Exec exec) {
  static const GammaSet g = build_gamma_dirac();
  return rho_E(psi, u, g, exec);
}

}  // namespace diracam
