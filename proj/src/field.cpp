#include "diracam/field.hpp"

#include <stdexcept>

namespace diracam {

FieldConfiguration FieldConfiguration::closed_form(PotentialFn potential, GradientFn gradient) {
  if (!potential) throw std::invalid_argument("closed-form field needs a potential function");
  FieldConfiguration f;
  f.kind_ = Kind::closed_form;
  f.potential_ = std::move(potential);
  f.gradient_ = std::move(gradient);
  return f;
}

FieldConfiguration FieldConfiguration::sampled(LatticeBox box, std::vector<FourPotential> values) {
  if (values.size() != box.site_count()) throw std::invalid_argument("potential sample count does not match lattice");
  FieldConfiguration f;
  f.kind_ = Kind::sampled;
  f.box_ = box;
  f.values_ = std::move(values);
  return f;
}

std::vector<FourPotential> FieldConfiguration::sample(const LatticeBox& box, Exec exec) const {
  if (kind_ == Kind::sampled) {
    if (!(*box_ == box)) throw std::invalid_argument("sampled potential lives on a different lattice");
    return values_;
  }
  std::vector<FourPotential> out(box.site_count());
  for_each_site(out.size(), exec, [&](std::size_t site) { out[site] = potential_(box.position(site)); });
  return out;
}

FourPotential FieldConfiguration::at(const Vec3& x) const {
  if (kind_ != Kind::closed_form) throw std::logic_error("pointwise evaluation needs a closed-form potential");
  return potential_(x);
}

PotentialGradient FieldConfiguration::gradient(const Vec3& x) const {
  if (!gradient_) throw std::logic_error("potential has no analytic gradient");
  return gradient_(x);
}

FieldConfiguration constant_field_potential(const ConstantMagneticField& field) {
  const Vec3 h = field.h;
  auto potential = [h](const Vec3& x) {
    const Vec3 a = cross(h, x);
    return FourPotential{0.0, 0.5 * a[0], 0.5 * a[1], 0.5 * a[2]};
  };
  // ∂_b A_j = ½ ε_jcb H_c
  auto gradient = [h](const Vec3&) {
    PotentialGradient g{};
    for (int j = 0; j < 3; ++j)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) g[j][b] += 0.5 * levi_civita(j, c, b) * h[c];
    return g;
  };
  return FieldConfiguration::closed_form(potential, gradient);
}

FieldConfiguration uniform_potential(const FourPotential& value) {
  return FieldConfiguration::closed_form([value](const Vec3&) { return value; },
                                         [](const Vec3&) { return PotentialGradient{}; });
}

std::pair<double, double> average_potential(double h3, double d) {
  if (!(d > 0.0)) throw std::invalid_argument("apparatus scale must be positive");
  return {-0.5 * h3 * d, 0.5 * h3 * d};
}

}  // namespace diracam
