#pragma once

#include <array>
#include <cstddef>

#include "diracam/algebra.hpp"

namespace diracam {

/// Periodic box sampled at cell centres: site (i,j,k) sits at
/// origin + ((i+½)h₁, (j+½)h₂, (k+½)h₃). Lengths in eV⁻¹.
class LatticeBox {
 public:
  /// Throws std::invalid_argument if points_per_axis < 4 or any extent ≤ 0.
  LatticeBox(Vec3 origin, Vec3 extents, int points_per_axis);

  /// The box [0, scale]³ cornered at the origin.
  static LatticeBox cornered(double scale, int points_per_axis);

  const Vec3& origin() const { return origin_; }
  const Vec3& extents() const { return extents_; }
  int points_per_axis() const { return n_; }

  /// Spacing along 0-based axis.
  double spacing(int axis) const { return extents_[axis] / n_; }
  std::size_t site_count() const {
    const auto n = static_cast<std::size_t>(n_);
    return n * n * n;
  }
  double volume() const { return extents_[0] * extents_[1] * extents_[2]; }
  double cell_volume() const { return spacing(0) * spacing(1) * spacing(2); }

  /// x₁ runs fastest.
  std::size_t index(int i, int j, int k) const {
    const auto n = static_cast<std::size_t>(n_);
    return static_cast<std::size_t>(i) + n * (static_cast<std::size_t>(j) + n * static_cast<std::size_t>(k));
  }
  std::array<int, 3> coords(std::size_t site) const {
    const auto n = static_cast<std::size_t>(n_);
    return {static_cast<int>(site % n), static_cast<int>((site / n) % n), static_cast<int>(site / (n * n))};
  }
  Vec3 position(std::size_t site) const;
  double coordinate(int axis, int j) const { return origin_[axis] + (j + 0.5) * spacing(axis); }

  bool operator==(const LatticeBox&) const = default;

 private:
  Vec3 origin_;
  Vec3 extents_;
  int n_;
};

}  // namespace diracam
