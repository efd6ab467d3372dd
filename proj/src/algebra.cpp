#include "diracam/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace diracam {

ComplexMatrix4 ComplexMatrix4::identity() { return diagonal(1.0, 1.0, 1.0, 1.0); }

ComplexMatrix4 ComplexMatrix4::diagonal(Complex d0, Complex d1, Complex d2, Complex d3) {
  ComplexMatrix4 m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return m;
}

ComplexMatrix4 ComplexMatrix4::adjoint() const {
  ComplexMatrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

Complex ComplexMatrix4::trace() const {
  return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2) + (*this)(3, 3);
}

double ComplexMatrix4::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix4& ComplexMatrix4::operator+=(const ComplexMatrix4& rhs) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix4& ComplexMatrix4::operator-=(const ComplexMatrix4& rhs) {
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix4& ComplexMatrix4::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix4 operator*(const ComplexMatrix4& lhs, const ComplexMatrix4& rhs) {
  ComplexMatrix4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Complex acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += lhs(r, k) * rhs(k, c);
      out(r, c) = acc;
    }
  return out;
}

Spinor4 operator*(const ComplexMatrix4& m, const Spinor4& v) {
  Spinor4 out{};
  for (int r = 0; r < 4; ++r) {
    Complex acc = 0.0;
    for (int c = 0; c < 4; ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix4 commutator(const ComplexMatrix4& a, const ComplexMatrix4& b) { return a * b - b * a; }

ComplexMatrix4 anticommutator(const ComplexMatrix4& a, const ComplexMatrix4& b) { return a * b + b * a; }

Complex inner(const Spinor4& psi, const Spinor4& phi) {
  Complex acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += std::conj(psi[i]) * phi[i];
  return acc;
}

Complex sandwich(const Spinor4& psi, const ComplexMatrix4& m, const Spinor4& phi) { return inner(psi, m * phi); }

double norm(const Spinor4& psi) { return std::sqrt(inner(psi, psi).real()); }

Spinor4 operator+(const Spinor4& a, const Spinor4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

Spinor4 operator-(const Spinor4& a, const Spinor4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Spinor4 operator*(Complex scale, const Spinor4& v) {
  return {scale * v[0], scale * v[1], scale * v[2], scale * v[3]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double length(const Vec3& a) { return std::sqrt(dot(a, a)); }

}  // namespace diracam
