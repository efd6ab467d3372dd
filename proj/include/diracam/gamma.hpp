#pragma once

#include <array>

#include "diracam/algebra.hpp"

namespace diracam {

/// The four Dirac matrices γ^0..γ^3 with metric signature (+,−,−,−).
/// Plain data so tests can build deliberately broken sets.
struct GammaSet {
  std::array<ComplexMatrix4, 4> gamma;

  const ComplexMatrix4& operator[](int mu) const { return gamma.at(mu); }

  /// Diagonal entry g^{μμ} of the Minkowski metric.
  static constexpr double metric(int mu) { return mu == 0 ? 1.0 : -1.0; }
};

/// σ_ab for every index pair and the spin components S_i = ½σ_jk, (i,j,k) cyclic.
struct SpinOperators {
  std::array<std::array<ComplexMatrix4, 4>, 4> sigma;
  std::array<ComplexMatrix4, 3> spin;  // S₁, S₂, S₃ at indices 0..2
};

/// Dirac (standard) representation:
///   γ⁰ = diag(I, −I),  γⁱ = [[0, σᵢ], [−σᵢ, 0]].
GammaSet build_gamma_dirac();

/// i γ^a γ^b; throws std::out_of_range unless a, b ∈ {0..3}.
ComplexMatrix4 sigma_ab(const GammaSet& g, int a, int b);

/// ½ σ_jk for axis i ∈ {1,2,3}; throws std::out_of_range otherwise.
ComplexMatrix4 spin_operator(const GammaSet& g, int axis);

SpinOperators make_spin_operators(const GammaSet& g);

// Residuals used by the invariant suites. All return max-abs norms.

/// max over μ,ν of ‖{γ^μ,γ^ν} − 2g^{μν}I‖.
double clifford_residual(const GammaSet& g);
/// max of ‖γ⁰† − γ⁰‖ and ‖γⁱ† + γⁱ‖.
double hermiticity_residual(const GammaSet& g);
/// max |tr γ^μ|.
double trace_residual(const GammaSet& g);
/// max over i,j of ‖[S_i,S_j] − iε_ijk S_k‖.
double spin_algebra_residual(const SpinOperators& ops);

}  // namespace diracam
