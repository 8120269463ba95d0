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

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace metabraid {

/// SO(3)_2 simple object, stored as twice its topological spin.
class AnyonLabel {
 public:
  static constexpr int kCount = 5;

  constexpr AnyonLabel() = default;
  explicit AnyonLabel(int value);

  constexpr int value() const { return value_; }
  /// "1", "X", "Y", "X'", "Z"
  std::string name() const;
  static AnyonLabel from_name(const std::string& name);

  friend constexpr bool operator==(AnyonLabel a, AnyonLabel b) { return a.value_ == b.value_; }
  friend constexpr auto operator<=>(AnyonLabel a, AnyonLabel b) { return a.value_ <=> b.value_; }

 private:
  int value_ = 0;
};

/// Total charges of a (x) b, ascending.
std::vector<AnyonLabel> fusion_product(AnyonLabel a, AnyonLabel b);
std::vector<int> fusion_product(int a, int b);

/// Three-anyon encoding V^{abc}_d. The qubit lives in the two outcomes of
/// fusing the first two anyons.
struct ModelSpec {
  std::array<AnyonLabel, 3> initial{};
  AnyonLabel total_charge{};
  std::array<AnyonLabel, 2> channels{};

  int a() const { return initial[0].value(); }
  int b() const { return initial[1].value(); }
  int c() const { return initial[2].value(); }
  int d() const { return total_charge.value(); }

  /// "V113_3"
  std::string name() const;
  /// Accepts "V113_3" (case-insensitive V). Validates fusion consistency.
  static ModelSpec parse(const std::string& text);
  /// Throws std::invalid_argument when the labels do not form a qubit.
  static ModelSpec make(int a, int b, int c, int d);

  bool operator==(const ModelSpec& o) const {
    return initial == o.initial && total_charge == o.total_charge;
  }
};

/// All 28 three-anyon encodings with a two-outcome first fusion.
std::vector<ModelSpec> enumerate_candidate_models();

/// Models whose adjacent distinct anyons are all X/X' pairs. Throws
/// std::invalid_argument for any model not produced by
/// enumerate_candidate_models().
std::vector<ModelSpec> filter_braidable(const std::vector<ModelSpec>& models);

struct ModelClass {
  ModelSpec first;
  ModelSpec second;
  /// "same", "sigma1 differs by pi" or "sigma2 differs by pi".
  std::string phase_difference;
};

/// The three partner classes of usable qubit models. Partners are related by
/// exchanging X and X'; the phase descriptor is computed from the exact
/// F/R data.
std::vector<ModelClass> qubit_model_classes();

/// The six models appearing in qubit_model_classes(), in class order.
std::vector<ModelSpec> qubit_models();

/// Standard encodings V111_1 and V333_3, which are braidable but cannot
/// build H/T gates and are therefore excluded from the qubit classes.
bool is_excluded_standard_encoding(const ModelSpec& m);

class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// sign * sqrt(num / den), exact.
struct SqrtRational {
  int sign = 1;
  std::int64_t num = 0;
  std::int64_t den = 1;

  template <typename Real>
  Real value() const {
    using std::sqrt;
    if (num == 0) return Real(0);
    Real v = sqrt(Real(num) / Real(den));
    return sign < 0 ? Real(-v) : v;
  }
  std::string to_string() const;
};

struct FKey {
  int a, b, c, d;
  auto operator<=>(const FKey&) const = default;
  /// "F^{113}_3"
  std::string to_string() const;
};

struct RKey {
  int a, b, c;
  auto operator<=>(const RKey&) const = default;
  /// "R^{11}_0"
  std::string to_string() const;
};

/// 2x2 recoupling block F^{abc}_d. Rows are indexed by the outcomes of b(x)c,
/// columns by the outcomes of a(x)b, both ascending.
struct FBlock {
  std::array<std::array<SqrtRational, 2>, 2> entries{};
  std::array<int, 2> row_labels{};
  std::array<int, 2> col_labels{};
  /// True when the block is not tabulated directly but follows from the
  /// symmetry of the tabulated data.
  bool inferred = false;
};

class FRTable {
 public:
  /// The SO(3)_2 data needed by every qubit model.
  static const FRTable& so3_2();

  bool has_f(const FKey& key) const { return f_.count(key) != 0; }
  bool has_r(const RKey& key) const { return r_.count(key) != 0; }

  const FBlock& f_block(const FKey& key) const;
  /// Exponent k of R = exp(i pi k / 12).
  int r_twelfths(const RKey& key) const;

  template <typename Real>
  Matrix<Real> f_matrix(const FKey& key) const {
    const FBlock& blk = f_block(key);
    Matrix<Real> m(2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) m(r, c) = Complex<Real>(blk.entries[r][c].value<Real>());
    }
    return m;
  }

  template <typename Real>
  Complex<Real> r_symbol(const RKey& key) const {
    return twelfth_root<Real>(r_twelfths(key));
  }

  const std::map<FKey, FBlock>& f_entries() const { return f_; }
  const std::map<RKey, int>& r_entries() const { return r_; }

  /// Exact check that F * F = I using radical arithmetic.
  static bool is_involutory_exact(const FBlock& blk);
  /// Exact check that the block is symmetric.
  static bool is_symmetric_exact(const FBlock& blk);

 private:
  std::map<FKey, FBlock> f_;
  std::map<RKey, int> r_;
};

bool operator==(const SqrtRational& x, const SqrtRational& y);

}  // namespace metabraid
