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

#include "metabraid/matrix.hpp"

#include <string>

namespace metabraid {

class MetricDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Makhlin invariants of a two-qubit gate.
template <typename Real>
struct LocalInvariants {
  Real g1{};
  Real g2{};
  Real g3{};
};

/// sqrt(1 - |tr(U0 U^dagger)| / 2). Small negative radicands from roundoff
/// are clamped to zero; anything below -1e-8 is an error.
template <typename Real>
Real global_phase_distance(const Matrix<Real>& u0, const Matrix<Real>& u);

/// Same quantity without validation, for search inner loops.
template <typename Real>
Real global_phase_distance_unchecked(const Matrix<Real>& u0, const Matrix<Real>& u);

/// The magic-basis change Q.
template <typename Real>
Matrix<Real> bell_basis();

/// Q^dagger U Q
template <typename Real>
Matrix<Real> bell_transform(const Matrix<Real>& u);

/// Validates unitarity (1e-8) and |det U| >= 1e-8 before evaluating.
template <typename Real>
LocalInvariants<Real> local_invariants(const Matrix<Real>& u);

/// No validation; g3's imaginary part is dropped.
template <typename Real>
LocalInvariants<Real> local_invariants_unchecked(const Matrix<Real>& u);

/// Sum of squared invariant differences to CNOT's (0, 0, 1).
template <typename Real>
Real cnot_distance(const Matrix<Real>& a);

template <typename Real>
Real cnot_distance_unchecked(const Matrix<Real>& a);

/// Sum of |eigenvalues| of A^dagger A - I.
template <typename Real>
Real unitarity_defect(const Matrix<Real>& a);

template <typename Real>
Real leakage_magnitude(const Complex<Real>& m11) {
  return abs(m11);
}

/// H, T, CNOT, SWAP, I2, I4.
template <typename Real>
Matrix<Real> gate_matrix(const std::string& name);

}  // namespace metabraid
