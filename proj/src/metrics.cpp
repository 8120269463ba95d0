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

#include "metabraid/metrics.hpp"

#include <cmath>

namespace metabraid {

namespace {

template <typename Real>
Real radicand_to_distance(const Real& radicand, bool checked) {
  using std::sqrt;
  if (radicand < Real(0)) {
    if (checked && radicand < Real(-1e-8)) {
      throw MetricDomainError("global phase distance radicand is " +
                              std::to_string(to_double(radicand)));
    }
    return Real(0);
  }
  return sqrt(radicand);
}

}  // namespace

template <typename Real>
Real global_phase_distance_unchecked(const Matrix<Real>& u0, const Matrix<Real>& u) {
  // tr(U0 U^dagger) = sum_ij U0_ij conj(U_ij)
  Complex<Real> t;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) t += u0(r, c) * conj(u(r, c));
  }
  return radicand_to_distance(Real(1) - abs(t) / Real(2), false);
}

template <typename Real>
Real global_phase_distance(const Matrix<Real>& u0, const Matrix<Real>& u) {
  if (u0.dim() != 2 || u.dim() != 2) {
    throw DimensionError("global_phase_distance requires 2x2 matrices");
  }
  if (unitarity_error(u0) > Real(1e-10) || unitarity_error(u) > Real(1e-10)) {
    throw MetricDomainError("global_phase_distance requires unitary inputs");
  }
  Complex<Real> t = trace(u0 * dagger(u));
  return radicand_to_distance(Real(1) - abs(t) / Real(2), true);
}

template <typename Real>
Matrix<Real> bell_basis() {
  using std::sqrt;
  const Real h = Real(1) / sqrt(Real(2));
  const Complex<Real> o(h), i(Real(0), h), z;
  return Matrix<Real>(4, {o, z, z, i,  //
                          z, i, o, z,  //
                          z, i, -o, z, //
                          o, z, z, -i});
}

template <typename Real>
Matrix<Real> bell_transform(const Matrix<Real>& u) {
  if (u.dim() != 4) throw DimensionError("bell_transform requires a 4x4 matrix");
  if constexpr (std::is_same_v<Real, double>) {
    static const Matrix<double> q = bell_basis<double>();
    static const Matrix<double> qd = dagger(q);
    return qd * u * q;
  }
  const Matrix<Real> q = bell_basis<Real>();
  return dagger(q) * u * q;
}

template <typename Real>
LocalInvariants<Real> local_invariants_unchecked(const Matrix<Real>& u) {
  const Matrix<Real> ub = bell_transform(u);
  const Matrix<Real> m = transpose(ub) * ub;
  const Complex<Real> tr = trace(m);
  Complex<Real> tr_m2;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) tr_m2 += m(r, c) * m(c, r);
  }
  const Complex<Real> det_u = det4(u);
  const Complex<Real> tr2 = tr * tr;
  const Complex<Real> g12 = tr2 / (det_u * Real(16));
  const Complex<Real> g3 = (tr2 - tr_m2) / (det_u * Real(4));
  return {g12.re, g12.im, g3.re};
}

template <typename Real>
LocalInvariants<Real> local_invariants(const Matrix<Real>& u) {
  if (u.dim() != 4) throw DimensionError("local_invariants requires a 4x4 matrix");
  if (unitarity_error(u) > Real(1e-8)) {
    throw MetricDomainError("local_invariants requires a unitary input (error " +
                            std::to_string(to_double(unitarity_error(u))) + ")");
  }
  const Complex<Real> det_u = det4(u);
  if (abs(det_u) < Real(1e-8)) throw MetricDomainError("local_invariants: |det U| < 1e-8");

  const Matrix<Real> ub = bell_transform(u);
  const Matrix<Real> m = transpose(ub) * ub;
  const Complex<Real> tr = trace(m);
  const Complex<Real> tr2 = tr * tr;
  const Complex<Real> g3 = (tr2 - trace(m * m)) / (det_u * Real(4));
  Real g3_abs = abs(g3);
  Real im = g3.im < Real(0) ? Real(-g3.im) : g3.im;
  if (im > Real(1e-8) * (Real(1) + g3_abs)) {
    throw MetricDomainError("g3 has imaginary residue " + std::to_string(to_double(g3.im)));
  }
  const Complex<Real> g12 = tr2 / (det_u * Real(16));
  return {g12.re, g12.im, g3.re};
}

template <typename Real>
Real cnot_distance_unchecked(const Matrix<Real>& a) {
  const LocalInvariants<Real> g = local_invariants_unchecked(a);
  const Real d3 = g.g3 - Real(1);
  return g.g1 * g.g1 + g.g2 * g.g2 + d3 * d3;
}

template <typename Real>
Real cnot_distance(const Matrix<Real>& a) {
  const LocalInvariants<Real> g = local_invariants(a);
  const Real d3 = g.g3 - Real(1);
  return g.g1 * g.g1 + g.g2 * g.g2 + d3 * d3;
}

template <typename Real>
Real unitarity_defect(const Matrix<Real>& a) {
  Matrix<Real> h = dagger(a) * a;
  h -= Matrix<Real>::identity(a.dim());
  // Force exact Hermiticity; A^dagger A is Hermitian up to roundoff.
  Matrix<Real> sym = h;
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) {
      sym(r, c) = (h(r, c) + conj(h(c, r))) * Real(0.5);
    }
  }
  Real total(0);
  for (const Real& v : hermitian_eigenvalues(sym)) total += v < Real(0) ? Real(-v) : v;
  return total;
}

template <typename Real>
Matrix<Real> gate_matrix(const std::string& name) {
  using std::sqrt;
  const Complex<Real> o(Real(1)), z;
  if (name == "H") {
    const Complex<Real> h(Real(1) / sqrt(Real(2)));
    return Matrix<Real>(2, {h, h, h, -h});
  }
  if (name == "T") return Matrix<Real>(2, {o, z, z, twelfth_root<Real>(3)});
  if (name == "I2" || name == "I") return Matrix<Real>::identity(2);
  if (name == "I4") return Matrix<Real>::identity(4);
  if (name == "CNOT") {
    return Matrix<Real>(4, {o, z, z, z, z, o, z, z, z, z, z, o, z, z, o, z});
  }
  if (name == "SWAP") {
    return Matrix<Real>(4, {o, z, z, z, z, z, o, z, z, o, z, z, z, z, z, o});
  }
  throw std::invalid_argument("unknown gate '" + name + "' (expected H, T, I2, I4, CNOT, SWAP)");
}

#define METABRAID_INSTANTIATE_METRICS(Real)                                                   \
  template Real global_phase_distance(const Matrix<Real>&, const Matrix<Real>&);              \
  template Real global_phase_distance_unchecked(const Matrix<Real>&, const Matrix<Real>&);    \
  template Matrix<Real> bell_basis<Real>();                                                   \
  template Matrix<Real> bell_transform(const Matrix<Real>&);                                  \
  template LocalInvariants<Real> local_invariants(const Matrix<Real>&);                       \
  template LocalInvariants<Real> local_invariants_unchecked(const Matrix<Real>&);             \
  template Real cnot_distance(const Matrix<Real>&);                                           \
  template Real cnot_distance_unchecked(const Matrix<Real>&);                                 \
  template Real unitarity_defect(const Matrix<Real>&);                                        \
  template Matrix<Real> gate_matrix<Real>(const std::string&);

METABRAID_INSTANTIATE_METRICS(double)
METABRAID_INSTANTIATE_METRICS(BigFloat)

}  // namespace metabraid
