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

#include "oracle.hpp"

#include <gtest/gtest.h>

namespace mb = metabraid;
using mb::BigFloat;
using oracle::CM;

TEST(PhaseDistance, MatchesOracleOnRandomPairs) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const CM a = oracle::random_unitary(2, rng), b = oracle::random_unitary(2, rng);
    const double d = mb::global_phase_distance(oracle::to_lib<double>(a), oracle::to_lib<double>(b));
    EXPECT_NEAR(d, oracle::phase_distance(a, b), 1e-14);
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
  }
}

TEST(PhaseDistance, PhaseInvariantAndSymmetric) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ang(-4, 4);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::to_lib<double>(oracle::random_unitary(2, rng));
    const auto b = oracle::to_lib<double>(oracle::random_unitary(2, rng));
    auto b2 = b;
    b2 *= mb::polar_unit<double>(ang(rng));
    EXPECT_NEAR(mb::global_phase_distance(a, b), mb::global_phase_distance(a, b2), 1e-14);
    EXPECT_NEAR(mb::global_phase_distance(a, b), mb::global_phase_distance(b, a), 1e-14);
    EXPECT_LT(mb::global_phase_distance(a, a * mb::polar_unit<double>(ang(rng))), 2e-8);
  }
}

TEST(PhaseDistance, KnownValues) {
  const auto h = mb::gate_matrix<double>("H");
  const auto t = mb::gate_matrix<double>("T");
  const auto i2 = mb::gate_matrix<double>("I2");
  EXPECT_LT(mb::global_phase_distance(h, h), 2e-8);  // sqrt of rounding
  // |tr H| = 0, so d = 1.
  EXPECT_NEAR(mb::global_phase_distance(i2, h), 1.0, 1e-15);
  // |tr T| / 2 = |1 + e^{i pi/4}| / 2 = cos(pi/8)
  EXPECT_NEAR(mb::global_phase_distance(i2, t), std::sqrt(1 - std::cos(oracle::kPi / 8)), 1e-15);
}

TEST(PhaseDistance, Errors) {
  EXPECT_THROW(mb::global_phase_distance(mb::Matrix<double>::identity(3), mb::Matrix<double>::identity(3)),
               mb::DimensionError);
  auto bad = mb::Matrix<double>::identity(2);
  bad(0, 0) = {2, 0};
  EXPECT_THROW(mb::global_phase_distance(bad, mb::Matrix<double>::identity(2)), mb::MetricDomainError);
}

TEST(Invariants, StandardGates) {
  const auto c = mb::local_invariants(mb::gate_matrix<double>("CNOT"));
  EXPECT_NEAR(c.g1, 0, 1e-12);
  EXPECT_NEAR(c.g2, 0, 1e-12);
  EXPECT_NEAR(c.g3, 1, 1e-12);
  const auto id = mb::local_invariants(mb::gate_matrix<double>("I4"));
  const auto oid = oracle::makhlin(oracle::eye(4));
  EXPECT_NEAR(id.g1, oid.g1, 1e-12);
  EXPECT_NEAR(id.g2, oid.g2, 1e-12);
  EXPECT_NEAR(id.g3, oid.g3, 1e-12);
  EXPECT_NEAR(id.g1, 1, 1e-12);
  EXPECT_NEAR(id.g3, 3, 1e-12);
  const auto sw = mb::local_invariants(mb::gate_matrix<double>("SWAP"));
  const auto osw = oracle::makhlin(oracle::swap_gate());
  EXPECT_NEAR(sw.g1, osw.g1, 1e-12);
  EXPECT_NEAR(sw.g3, osw.g3, 1e-12);
  EXPECT_NEAR(sw.g1, -1, 1e-12);
  EXPECT_NEAR(sw.g3, -3, 1e-12);
}

TEST(Invariants, MatchOracleOnRandomUnitaries) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const CM u = oracle::random_unitary(4, rng);
    const auto g = mb::local_invariants(oracle::to_lib<double>(u));
    const auto o = oracle::makhlin(u);
    EXPECT_NEAR(g.g1, o.g1, 1e-12);
    EXPECT_NEAR(g.g2, o.g2, 1e-12);
    EXPECT_NEAR(g.g3, o.g3, 1e-12);
    EXPECT_NEAR(mb::cnot_distance(oracle::to_lib<double>(u)), oracle::cnot_distance(u), 1e-11);
  }
}

TEST(Invariants, LocalDressingInvariance) {
  std::mt19937_64 rng(4);
  const CM cnot = oracle::cnot();
  for (int i = 0; i < 200; ++i) {
    const CM k1 = oracle::kron(oracle::random_unitary(2, rng), oracle::random_unitary(2, rng));
    const CM k2 = oracle::kron(oracle::random_unitary(2, rng), oracle::random_unitary(2, rng));
    const CM u = oracle::mul(oracle::mul(k1, cnot), k2);
    EXPECT_LT(mb::cnot_distance(oracle::to_lib<double>(u)), 1e-10);
  }
}

TEST(Invariants, CnotDistanceOfIdentityIsFive) {
  EXPECT_NEAR(mb::cnot_distance(mb::gate_matrix<double>("I4")), 5.0, 1e-12);
  EXPECT_NEAR(mb::cnot_distance(mb::gate_matrix<double>("SWAP")), 1 + 16.0, 1e-12);
}

TEST(Invariants, Errors) {
  EXPECT_THROW(mb::local_invariants(mb::Matrix<double>::identity(2)), mb::DimensionError);
  auto bad = mb::gate_matrix<double>("I4");
  bad(0, 1) = {0.5, 0};
  EXPECT_THROW(mb::local_invariants(bad), mb::MetricDomainError);
  EXPECT_THROW(mb::gate_matrix<double>("Toffoli"), std::invalid_argument);
}

TEST(Invariants, BigFloatExact) {
  mb::PrecisionScope p(256);
  const auto c = mb::local_invariants(mb::gate_matrix<BigFloat>("CNOT"));
  EXPECT_LT(mb::to_double(abs(c.g1)), 1e-70);
  EXPECT_LT(mb::to_double(abs(c.g3 - 1)), 1e-70);
  EXPECT_LT(mb::to_double(mb::cnot_distance(mb::gate_matrix<BigFloat>("CNOT"))), 1e-140);
}

TEST(UnitarityDefect, ZeroOnUnitaryPositiveOtherwise) {
  std::mt19937_64 rng(5);
  const CM u = oracle::random_unitary(4, rng);
  EXPECT_LT(mb::unitarity_defect(oracle::to_lib<double>(u)), 1e-13);
  // Scaling by (1 + e): A^dagger A - I = ((1+e)^2 - 1) I, defect 4 ((1+e)^2 - 1).
  auto s = oracle::to_lib<double>(u);
  s *= mb::Complex<double>(1.001);
  EXPECT_NEAR(mb::unitarity_defect(s), 4 * (1.001 * 1.001 - 1), 1e-12);
}

TEST(Leakage, MagnitudeOfM11) {
  EXPECT_NEAR(mb::leakage_magnitude(mb::polar_unit<double>(0.3)), 1.0, 1e-15);
  EXPECT_NEAR(mb::leakage_magnitude(mb::Complex<double>(0.3, 0.4)), 0.5, 1e-15);
}
