#include "diracam/lattice.hpp"

#include <stdexcept>
#include <string>

namespace diracam {

LatticeBox::LatticeBox(Vec3 origin, Vec3 extents, int points_per_axis)
    : origin_(origin), extents_(extents), n_(points_per_axis) {
  if (points_per_axis < 4)
    throw std::invalid_argument("lattice needs at least 4 points per axis, got " + std::to_string(points_per_axis));
  for (double e : extents)
    if (!(e > 0.0)) throw std::invalid_argument("lattice extents must be positive");
}

LatticeBox LatticeBox::cornered(double scale, int points_per_axis) {
  return LatticeBox({0.0, 0.0, 0.0}, {scale, scale, scale}, points_per_axis);
}

Vec3 LatticeBox::position(std::size_t site) const {
  const auto c = coords(site);
  return {coordinate(0, c[0]), coordinate(1, c[1]), coordinate(2, c[2])};
}

}  // namespace diracam
