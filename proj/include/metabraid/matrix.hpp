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

#include "metabraid/complex.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace metabraid {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense square complex matrix of dimension 1..5, stored inline.
template <typename Real>
class Matrix {
 public:
  using Scalar = Complex<Real>;
  static constexpr int kMaxDim = 5;

  Matrix() : Matrix(1) {}
  explicit Matrix(int dim);
  Matrix(int dim, std::initializer_list<Scalar> row_major);

  static Matrix identity(int dim);
  static Matrix diagonal(const std::vector<Scalar>& diag);

  int dim() const { return dim_; }

  Scalar& operator()(int r, int c) { return data_[r * kMaxDim + c]; }
  const Scalar& operator()(int r, int c) const { return data_[r * kMaxDim + c]; }

  Matrix& operator*=(const Scalar& s);
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }

 private:
  int dim_;
  std::array<Scalar, kMaxDim * kMaxDim> data_{};
};

/// out = a * b; out must not alias a or b and must already have a's dim.
template <typename Real>
inline void matmul_into(const Matrix<Real>& a, const Matrix<Real>& b, Matrix<Real>& out) {
  const int n = a.dim();
  if constexpr (std::is_same_v<Real, double>) {
    if (n == 2) {
      const auto &a00 = a(0, 0), &a01 = a(0, 1), &a10 = a(1, 0), &a11 = a(1, 1);
      const auto &b00 = b(0, 0), &b01 = b(0, 1), &b10 = b(1, 0), &b11 = b(1, 1);
      out(0, 0) = {a00.re * b00.re - a00.im * b00.im + a01.re * b10.re - a01.im * b10.im,
                   a00.re * b00.im + a00.im * b00.re + a01.re * b10.im + a01.im * b10.re};
      out(0, 1) = {a00.re * b01.re - a00.im * b01.im + a01.re * b11.re - a01.im * b11.im,
                   a00.re * b01.im + a00.im * b01.re + a01.re * b11.im + a01.im * b11.re};
      out(1, 0) = {a10.re * b00.re - a10.im * b00.im + a11.re * b10.re - a11.im * b10.im,
                   a10.re * b00.im + a10.im * b00.re + a11.re * b10.im + a11.im * b10.re};
      out(1, 1) = {a10.re * b01.re - a10.im * b01.im + a11.re * b11.re - a11.im * b11.im,
                   a10.re * b01.im + a10.im * b01.re + a11.re * b11.im + a11.im * b11.re};
      return;
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Real re(0);
      Real im(0);
      for (int k = 0; k < n; ++k) {
        const auto& x = a(r, k);
        const auto& y = b(k, c);
        re += x.re * y.re - x.im * y.im;
        im += x.re * y.im + x.im * y.re;
      }
      out(r, c).re = re;
      out(r, c).im = im;
    }
  }
}

template <typename Real>
Matrix<Real> matmul(const Matrix<Real>& a, const Matrix<Real>& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("matmul: dimension mismatch " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
  Matrix<Real> out(a.dim());
  matmul_into(a, b, out);
  return out;
}

template <typename Real>
Matrix<Real> operator*(const Matrix<Real>& a, const Matrix<Real>& b) {
  return matmul(a, b);
}

template <typename Real>
Matrix<Real> dagger(const Matrix<Real>& a);

template <typename Real>
Matrix<Real> transpose(const Matrix<Real>& a);

template <typename Real>
Complex<Real> trace(const Matrix<Real>& a);

/// Determinant of a 4x4 matrix by Laplace expansion over 2x2 minors.
template <typename Real>
Complex<Real> det4(const Matrix<Real>& a);

/// Determinant for any supported dimension (Gaussian elimination with
/// partial pivoting).
template <typename Real>
Complex<Real> det(const Matrix<Real>& a);

/// Block diagonal [[a, 0], [0, b]].
template <typename Real>
Matrix<Real> direct_sum(const Matrix<Real>& a, const Matrix<Real>& b);

/// Scalar block first: [[s, 0], [0, b]].
template <typename Real>
Matrix<Real> direct_sum(const Complex<Real>& s, const Matrix<Real>& b);

/// Kronecker product; the first factor is the more significant index.
template <typename Real>
Matrix<Real> kron(const Matrix<Real>& a, const Matrix<Real>& b);

/// Eigenvalues of a Hermitian matrix in ascending order (cyclic Jacobi).
/// Throws NotHermitianError when ||A - A^dagger||_max > 1e3 * epsilon.
template <typename Real>
std::vector<Real> hermitian_eigenvalues(const Matrix<Real>& a);

/// max_{ij} |a_ij - b_ij|
template <typename Real>
Real max_abs_diff(const Matrix<Real>& a, const Matrix<Real>& b);

/// max_{ij} |a_ij|
template <typename Real>
Real max_abs(const Matrix<Real>& a);

/// ||A A^dagger - I||_max
template <typename Real>
Real unitarity_error(const Matrix<Real>& a);

template <typename Real>
bool close_to(const Matrix<Real>& a, const Matrix<Real>& b, const Real& tol);

/// Compares after rescaling a by the unit phase of tr(b a^dagger).
template <typename Real>
bool phase_close_to(const Matrix<Real>& a, const Matrix<Real>& b, const Real& tol);

template <typename Real>
bool all_finite(const Matrix<Real>& a);

template <typename To, typename From>
Matrix<To> convert(const Matrix<From>& m) {
  Matrix<To> out(m.dim());
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      out(r, c) = {To(m(r, c).re), To(m(r, c).im)};
    }
  }
  return out;
}

}  // namespace metabraid
