#include "diracam/gamma.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace diracam {
namespace {

using namespace std::complex_literals;

// [[0, s], [-s, 0]] for a 2x2 block s.
ComplexMatrix4 off_diagonal(Complex s00, Complex s01, Complex s10, Complex s11) {
  ComplexMatrix4 m;
  m(0, 2) = s00;
  m(0, 3) = s01;
  m(1, 2) = s10;
  m(1, 3) = s11;
  m(2, 0) = -s00;
  m(2, 1) = -s01;
  m(3, 0) = -s10;
  m(3, 1) = -s11;
  return m;
}

void check_spacetime_index(int mu) {
  if (mu < 0 || mu > 3) throw std::out_of_range("spacetime index " + std::to_string(mu) + " not in 0..3");
}

}  // namespace

GammaSet build_gamma_dirac() {
  GammaSet g;
  g.gamma[0] = ComplexMatrix4::diagonal(1.0, 1.0, -1.0, -1.0);
  g.gamma[1] = off_diagonal(0.0, 1.0, 1.0, 0.0);
  g.gamma[2] = off_diagonal(0.0, -1i, 1i, 0.0);
  g.gamma[3] = off_diagonal(1.0, 0.0, 0.0, -1.0);
  return g;
}

ComplexMatrix4 sigma_ab(const GammaSet& g, int a, int b) {
  check_spacetime_index(a);
  check_spacetime_index(b);
  return 1i * (g.gamma[a] * g.gamma[b]);
}

ComplexMatrix4 spin_operator(const GammaSet& g, int axis) {
  if (axis < 1 || axis > 3) throw std::out_of_range("spin axis " + std::to_string(axis) + " not in 1..3");
  const int j = axis % 3 + 1;
  const int k = j % 3 + 1;
  return 0.5 * sigma_ab(g, j, k);
}

SpinOperators make_spin_operators(const GammaSet& g) {
  SpinOperators ops;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) ops.sigma[a][b] = sigma_ab(g, a, b);
  for (int i = 1; i <= 3; ++i) ops.spin[i - 1] = spin_operator(g, i);
  return ops;
}

double clifford_residual(const GammaSet& g) {
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      ComplexMatrix4 target;
      if (mu == nu) target = 2.0 * GammaSet::metric(mu) * ComplexMatrix4::identity();
      worst = std::max(worst, (anticommutator(g.gamma[mu], g.gamma[nu]) - target).max_abs());
    }
  return worst;
}

double hermiticity_residual(const GammaSet& g) {
  double worst = (g.gamma[0].adjoint() - g.gamma[0]).max_abs();
  for (int i = 1; i < 4; ++i) worst = std::max(worst, (g.gamma[i].adjoint() + g.gamma[i]).max_abs());
  return worst;
}

double trace_residual(const GammaSet& g) {
  double worst = 0.0;
  for (const auto& m : g.gamma) worst = std::max(worst, std::abs(m.trace()));
  return worst;
}

double spin_algebra_residual(const SpinOperators& ops) {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ComplexMatrix4 rhs;
      for (int k = 0; k < 3; ++k) rhs += Complex(0.0, levi_civita(i, j, k)) * ops.spin[k];
      worst = std::max(worst, (commutator(ops.spin[i], ops.spin[j]) - rhs).max_abs());
    }
  return worst;
}

}  // namespace diracam
