#pragma once

#include <span>
#include <vector>

#include "diracam/algebra.hpp"
#include "diracam/exec.hpp"
#include "diracam/lattice.hpp"
#include "diracam/spinor.hpp"

namespace diracam {

/// Central-difference boundary handling.
enum class Stencil {
  periodic,   // wrap at the box faces; exact only for periodic fields
  one_sided,  // second-order one-sided differences on the first/last layer
};

/// Periodic midpoint rule: cell volume times the pairwise sum of samples.
/// Throws std::invalid_argument if the sample count does not match the box.
double integrate_scalar(std::span<const double> f, const LatticeBox& box, Exec exec = Exec::parallel);

/// ∂g/∂x_axis (0-based axis) at one site, second-order accurate.
template <class T>
T finite_difference(std::span<const T> g, const LatticeBox& box, int axis, std::size_t site, Stencil stencil);

/// ℓ_axis g = −i (x × ∇)_axis g for axis ∈ {1,2,3} using central differences.
/// Throws std::out_of_range for a bad axis, std::invalid_argument on a size mismatch.
std::vector<Complex> oam_operator_apply(std::span<const Complex> g, const LatticeBox& box, int axis,
                                        Stencil stencil = Stencil::periodic, Exec exec = Exec::parallel);

/// ℓ_axis applied to every component of a spinor field.
SpinorField oam_operator_apply(const SpinorField& psi, int axis, Stencil stencil = Stencil::periodic,
                               Exec exec = Exec::parallel);

/// ∫ψ†ψ
double norm_integral(const SpinorField& psi, Exec exec = Exec::parallel);

}  // namespace diracam
