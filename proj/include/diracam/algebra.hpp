#pragma once

#include <array>
#include <complex>

namespace diracam {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

/// Four complex components of a Dirac spinor, ordered (ψ₁, ψ₂, ψ₃, ψ₄):
/// upper (large) pair first, lower (small) pair second.
using Spinor4 = std::array<Complex, 4>;

/// Dense 4x4 complex matrix, row-major. Value type; zero-initialised.
class ComplexMatrix4 {
 public:
  ComplexMatrix4() = default;

  static ComplexMatrix4 identity();
  static ComplexMatrix4 diagonal(Complex d0, Complex d1, Complex d2, Complex d3);

  Complex& operator()(int row, int col) { return entries_[4 * row + col]; }
  const Complex& operator()(int row, int col) const { return entries_[4 * row + col]; }

  ComplexMatrix4 adjoint() const;
  Complex trace() const;
  /// Largest |entry|; used as the residual norm throughout the test suites.
  double max_abs() const;

  ComplexMatrix4& operator+=(const ComplexMatrix4& rhs);
  ComplexMatrix4& operator-=(const ComplexMatrix4& rhs);
  ComplexMatrix4& operator*=(Complex scale);

  friend ComplexMatrix4 operator+(ComplexMatrix4 lhs, const ComplexMatrix4& rhs) { return lhs += rhs; }
  friend ComplexMatrix4 operator-(ComplexMatrix4 lhs, const ComplexMatrix4& rhs) { return lhs -= rhs; }
  friend ComplexMatrix4 operator-(ComplexMatrix4 m) { return m *= -1.0; }
  friend ComplexMatrix4 operator*(Complex scale, ComplexMatrix4 m) { return m *= scale; }
  friend ComplexMatrix4 operator*(ComplexMatrix4 m, Complex scale) { return m *= scale; }
  friend ComplexMatrix4 operator*(const ComplexMatrix4& lhs, const ComplexMatrix4& rhs);
  friend Spinor4 operator*(const ComplexMatrix4& m, const Spinor4& v);

  bool operator==(const ComplexMatrix4&) const = default;

 private:
  std::array<Complex, 16> entries_{};
};

ComplexMatrix4 commutator(const ComplexMatrix4& a, const ComplexMatrix4& b);
ComplexMatrix4 anticommutator(const ComplexMatrix4& a, const ComplexMatrix4& b);

/// ψ†φ
Complex inner(const Spinor4& psi, const Spinor4& phi);
/// ψ† M φ
Complex sandwich(const Spinor4& psi, const ComplexMatrix4& m, const Spinor4& phi);
double norm(const Spinor4& psi);

Spinor4 operator+(const Spinor4& a, const Spinor4& b);
Spinor4 operator-(const Spinor4& a, const Spinor4& b);
Spinor4 operator*(Complex scale, const Spinor4& v);

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double length(const Vec3& a);

/// ε_ijk for 0-based indices.
constexpr int levi_civita(int i, int j, int k) {
  return (i - j) * (j - k) * (k - i) / 2;
}

}  // namespace diracam
