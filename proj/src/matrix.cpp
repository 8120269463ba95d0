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

#include "metabraid/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace metabraid {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > Matrix<double>::kMaxDim) {
    throw DimensionError("matrix dimension must be in [1, 5], got " + std::to_string(dim));
  }
}

template <typename Real>
void require_same_dim(const Matrix<Real>& a, const Matrix<Real>& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

template <typename Real>
Matrix<Real>::Matrix(int dim) : dim_(dim) {
  check_dim(dim);
}

template <typename Real>
Matrix<Real>::Matrix(int dim, std::initializer_list<Scalar> row_major) : dim_(dim) {
  check_dim(dim);
  if (static_cast<int>(row_major.size()) != dim * dim) {
    throw DimensionError("matrix initializer needs " + std::to_string(dim * dim) + " entries");
  }
  int i = 0;
  for (const auto& z : row_major) {
    (*this)(i / dim, i % dim) = z;
    ++i;
  }
}

template <typename Real>
Matrix<Real> Matrix<Real>::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = Scalar(Real(1));
  return m;
}

template <typename Real>
Matrix<Real> Matrix<Real>::diagonal(const std::vector<Scalar>& diag) {
  Matrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = diag[i];
  return m;
}

template <typename Real>
Matrix<Real>& Matrix<Real>::operator*=(const Scalar& s) {
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) (*this)(r, c) *= s;
  }
  return *this;
}

template <typename Real>
Matrix<Real>& Matrix<Real>::operator+=(const Matrix& o) {
  require_same_dim(*this, o, "add");
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) (*this)(r, c) += o(r, c);
  }
  return *this;
}

template <typename Real>
Matrix<Real>& Matrix<Real>::operator-=(const Matrix& o) {
  require_same_dim(*this, o, "subtract");
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) (*this)(r, c) -= o(r, c);
  }
  return *this;
}

template <typename Real>
Matrix<Real> dagger(const Matrix<Real>& a) {
  Matrix<Real> out(a.dim());
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) out(c, r) = conj(a(r, c));
  }
  return out;
}

template <typename Real>
Matrix<Real> transpose(const Matrix<Real>& a) {
  Matrix<Real> out(a.dim());
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) out(c, r) = a(r, c);
  }
  return out;
}

template <typename Real>
Complex<Real> trace(const Matrix<Real>& a) {
  Complex<Real> t;
  for (int i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

template <typename Real>
Complex<Real> det4(const Matrix<Real>& a) {
  if (a.dim() != 4) throw DimensionError("det4 requires a 4x4 matrix");
  // Laplace expansion along the first two rows.
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return a(r0, c0) * a(r1, c1) - a(r0, c1) * a(r1, c0);
  };
  const Complex<Real> s0 = minor2(0, 1, 0, 1);
  const Complex<Real> s1 = minor2(0, 1, 0, 2);
  const Complex<Real> s2 = minor2(0, 1, 0, 3);
  const Complex<Real> s3 = minor2(0, 1, 1, 2);
  const Complex<Real> s4 = minor2(0, 1, 1, 3);
  const Complex<Real> s5 = minor2(0, 1, 2, 3);
  const Complex<Real> c5 = minor2(2, 3, 2, 3);
  const Complex<Real> c4 = minor2(2, 3, 1, 3);
  const Complex<Real> c3 = minor2(2, 3, 1, 2);
  const Complex<Real> c2 = minor2(2, 3, 0, 3);
  const Complex<Real> c1 = minor2(2, 3, 0, 2);
  const Complex<Real> c0 = minor2(2, 3, 0, 1);
  return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;
}

template <typename Real>
Complex<Real> det(const Matrix<Real>& a) {
  const int n = a.dim();
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (n == 4) return det4(a);
  Matrix<Real> m = a;
  Complex<Real> result(Real(1));
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    Real best = norm(m(col, col));
    for (int r = col + 1; r < n; ++r) {
      Real v = norm(m(r, col));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == Real(0)) return Complex<Real>(Real(0));
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      result = -result;
    }
    result *= m(col, col);
    for (int r = col + 1; r < n; ++r) {
      Complex<Real> f = m(r, col) / m(col, col);
      for (int c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return result;
}

template <typename Real>
Matrix<Real> direct_sum(const Matrix<Real>& a, const Matrix<Real>& b) {
  Matrix<Real> out(a.dim() + b.dim());
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) out(r, c) = a(r, c);
  }
  const int off = a.dim();
  for (int r = 0; r < b.dim(); ++r) {
    for (int c = 0; c < b.dim(); ++c) out(off + r, off + c) = b(r, c);
  }
  return out;
}

template <typename Real>
Matrix<Real> direct_sum(const Complex<Real>& s, const Matrix<Real>& b) {
  Matrix<Real> scalar(1);
  scalar(0, 0) = s;
  return direct_sum(scalar, b);
}

template <typename Real>
Matrix<Real> kron(const Matrix<Real>& a, const Matrix<Real>& b) {
  Matrix<Real> out(a.dim() * b.dim());
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      for (int k = 0; k < b.dim(); ++k) {
        for (int l = 0; l < b.dim(); ++l) {
          out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

template <typename Real>
Real max_abs_diff(const Matrix<Real>& a, const Matrix<Real>& b) {
  require_same_dim(a, b, "max_abs_diff");
  Real m(0);
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) {
      Real v = abs(a(r, c) - b(r, c));
      if (v > m) m = v;
    }
  }
  return m;
}

template <typename Real>
Real max_abs(const Matrix<Real>& a) {
  Real m(0);
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) {
      Real v = abs(a(r, c));
      if (v > m) m = v;
    }
  }
  return m;
}

template <typename Real>
Real unitarity_error(const Matrix<Real>& a) {
  return max_abs_diff(matmul(a, dagger(a)), Matrix<Real>::identity(a.dim()));
}

template <typename Real>
bool close_to(const Matrix<Real>& a, const Matrix<Real>& b, const Real& tol) {
  return max_abs_diff(a, b) <= tol;
}

template <typename Real>
bool phase_close_to(const Matrix<Real>& a, const Matrix<Real>& b, const Real& tol) {
  require_same_dim(a, b, "phase_close_to");
  Complex<Real> t = trace(matmul(b, dagger(a)));
  Real mag = abs(t);
  Complex<Real> phase(Real(1));
  if (mag > Real(0)) phase = t / Complex<Real>(mag);
  return max_abs_diff(a * phase, b) <= tol;
}

template <typename Real>
bool all_finite(const Matrix<Real>& a) {
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) {
      if (!is_finite(a(r, c))) return false;
    }
  }
  return true;
}

template <typename Real>
std::vector<Real> hermitian_eigenvalues(const Matrix<Real>& input) {
  const int n = input.dim();
  const Real eps = epsilon_value<Real>();
  Real scale = max_abs(input);
  if (scale < Real(1)) scale = Real(1);
  if (max_abs_diff(input, dagger(input)) > Real(1000) * eps * scale) {
    throw NotHermitianError("hermitian_eigenvalues: input is not Hermitian");
  }
  Matrix<Real> a = input;
  for (int i = 0; i < n; ++i) a(i, i).im = Real(0);

  // Each rotation zeroes a(p,q) by a phase fix D = diag(1, e^{-i alpha})
  // followed by a real Givens rotation.
  for (int sweep = 0; sweep < 100; ++sweep) {
    Real off(0);
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) off += norm(a(p, q));
    }
    if (off <= eps * eps * scale * scale) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        Real mag = abs(a(p, q));
        if (mag == Real(0)) continue;
        Complex<Real> phase = a(p, q) / Complex<Real>(mag);  // e^{i alpha}
        // Conjugate column/row q by e^{-i alpha} so a(p,q) becomes real.
        for (int k = 0; k < n; ++k) {
          a(k, q) *= conj(phase);
          a(q, k) *= phase;
        }
        const Real app = a(p, p).re;
        const Real aqq = a(q, q).re;
        using std::sqrt;
        Real tau = (aqq - app) / (Real(2) * mag);
        Real abs_tau = tau >= Real(0) ? tau : Real(-tau);
        Real t = (tau >= Real(0) ? Real(1) : Real(-1)) / (abs_tau + sqrt(Real(1) + tau * tau));
        Real c = Real(1) / sqrt(Real(1) + t * t);
        Real s = t * c;
        for (int k = 0; k < n; ++k) {
          Complex<Real> akp = a(k, p);
          Complex<Real> akq = a(k, q);
          a(k, p) = akp * c - akq * s;
          a(k, q) = akp * s + akq * c;
        }
        for (int k = 0; k < n; ++k) {
          Complex<Real> apk = a(p, k);
          Complex<Real> aqk = a(q, k);
          a(p, k) = apk * c - aqk * s;
          a(q, k) = apk * s + aqk * c;
        }
        a(p, q) = Complex<Real>(Real(0));
        a(q, p) = Complex<Real>(Real(0));
      }
    }
  }
  std::vector<Real> values;
  values.reserve(n);
  for (int i = 0; i < n; ++i) values.push_back(a(i, i).re);
  std::sort(values.begin(), values.end());
  return values;
}

#define METABRAID_INSTANTIATE_MATRIX(Real)                                              \
  template class Matrix<Real>;                                                          \
  template Matrix<Real> dagger(const Matrix<Real>&);                                    \
  template Matrix<Real> transpose(const Matrix<Real>&);                                 \
  template Complex<Real> trace(const Matrix<Real>&);                                    \
  template Complex<Real> det4(const Matrix<Real>&);                                     \
  template Complex<Real> det(const Matrix<Real>&);                                      \
  template Matrix<Real> direct_sum(const Matrix<Real>&, const Matrix<Real>&);           \
  template Matrix<Real> direct_sum(const Complex<Real>&, const Matrix<Real>&);          \
  template Matrix<Real> kron(const Matrix<Real>&, const Matrix<Real>&);                 \
  template std::vector<Real> hermitian_eigenvalues(const Matrix<Real>&);                \
  template Real max_abs_diff(const Matrix<Real>&, const Matrix<Real>&);                 \
  template Real max_abs(const Matrix<Real>&);                                           \
  template Real unitarity_error(const Matrix<Real>&);                                   \
  template bool close_to(const Matrix<Real>&, const Matrix<Real>&, const Real&);        \
  template bool phase_close_to(const Matrix<Real>&, const Matrix<Real>&, const Real&);  \
  template bool all_finite(const Matrix<Real>&);

METABRAID_INSTANTIATE_MATRIX(double)
METABRAID_INSTANTIATE_MATRIX(BigFloat)

}  // namespace metabraid
