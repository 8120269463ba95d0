// Copyright 2026 The metabraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "metabraid/backend.hpp"

#include <cmath>

namespace metabraid {

// std::complex is only specified for the built-in floating types, so the
// arbitrary-precision backend needs its own value type. The double
// instantiation is used on every hot path and stays trivially copyable.
template <typename Real>
struct Complex {
  Real re{};
  Real im{};

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT implicit
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real den = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = std::move(r);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator*(const Real& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

template <typename Real>
Complex<Real> conj(const Complex<Real>& z) {
  return {z.re, -z.im};
}

/// |z|^2
template <typename Real>
Real norm(const Complex<Real>& z) {
  return z.re * z.re + z.im * z.im;
}

template <typename Real>
Real abs(const Complex<Real>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

template <typename Real>
Real arg(const Complex<Real>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

/// e^{i theta}
template <typename Real>
Complex<Real> polar_unit(const Real& theta) {
  using std::cos;
  using std::sin;
  return {cos(theta), sin(theta)};
}

/// e^{i pi k / 12}; every braiding phase in SO(3)_2 is such a root of unity.
template <typename Real>
Complex<Real> twelfth_root(int k) {
  Real theta = pi_value<Real>() * Real(k) / Real(12);
  return polar_unit(theta);
}

/// Principal square root.
template <typename Real>
Complex<Real> sqrt(const Complex<Real>& z) {
  using std::sqrt;
  using std::abs;
  if (z.re == Real(0) && z.im == Real(0)) return {};
  // Take the larger component directly and the other from y / 2t; the naive
  // form cancels near the negative real axis.
  const Real t = sqrt((abs(z.re) + abs(z)) / Real(2));
  if (z.re >= Real(0)) return {t, z.im / (Real(2) * t)};
  const Real im = z.im < Real(0) ? -t : t;
  return {abs(z.im) / (Real(2) * t), im};
}

template <typename Real>
bool is_finite(const Complex<Real>& z) {
  using boost::multiprecision::isfinite;
  using std::isfinite;
  return isfinite(z.re) && isfinite(z.im);
}

}  // namespace metabraid
