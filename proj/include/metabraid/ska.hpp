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

#include "metabraid/ga.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace metabraid {

class DecompositionDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SKAConfig {
  /// "V131_3", any other qubit model, or "fibonacci".
  std::string model = "V131_3";
  int basic_length = 30;
  int max_level = 3;
  GAConfig ga;

  void validate() const;
  Json to_json() const;
};

struct Approximation {
  BraidWord word;
  Matrix<double> matrix{2};
  double distance = 0;
  int level = 0;
};

/// Divides by a square root of the determinant and fixes the sign so that
/// Re tr >= 0.
Matrix<double> to_special_unitary(const Matrix<double>& u);

/// 2 acos(|Re tr| / 2), the rotation angle in [0, pi] of a special unitary
/// taken up to sign.
double rotation_angle(const Matrix<double>& su);

/// exp(-i angle/2 n.sigma)
Matrix<double> axis_rotation(const std::array<double, 3>& axis, double angle);

/// Balanced group commutator: V, W rotations by the same angle about
/// orthogonal axes with V W V^dagger W^dagger equal to the special-unitary
/// part of delta. Throws DecompositionDomainError when delta's rotation
/// angle is within 1e-6 of pi.
std::pair<Matrix<double>, Matrix<double>> gc_decompose(const Matrix<double>& delta);

/// Half-angle of the commutator factors for a target rotation angle theta:
/// sin(theta/2) = 2 s^2 sqrt(1 - s^4) with s = sin(phi/2).
double gc_factor_angle(double theta);

class SolovayKitaev {
 public:
  explicit SolovayKitaev(SKAConfig cfg);

  /// Level-0 approximation: GA over words of length basic_length.
  Approximation basic_approximation(const Matrix<double>& target);
  /// Level-n approximation, memoized on (target, level).
  Approximation solve(const Matrix<double>& target, int level);
  /// Approximations of levels 0..max_level along the recursion for target.
  std::vector<Approximation> compile(const Matrix<double>& target);

  const EbmSet<double>& ebms() const { return set_; }
  const SKAConfig& config() const { return cfg_; }
  int ga_calls() const { return ga_calls_; }

 private:
  SKAConfig cfg_;
  EbmSet<double> set_;
  std::map<std::pair<std::string, int>, Approximation> memo_;
  int ga_calls_ = 0;
};

Approximation basic_approximation(const Matrix<double>& target, const SKAConfig& cfg);
Approximation solovay_kitaev(const Matrix<double>& target, int level, const SKAConfig& cfg);

/// Persistent cache of compiled words keyed by (model, gate, L0, seed, level).
class SKACache {
 public:
  static std::string key(const std::string& model, const std::string& gate, int basic_length,
                         std::uint64_t seed, int level);

  void load(const std::string& path);
  void save(const std::string& path) const;

  bool has(const std::string& key) const { return entries_.contains(key); }
  /// Letters and reported distance of a cached entry.
  const Json& get(const std::string& key) const { return entries_.at(key); }
  void put(const std::string& key, Json value) { entries_[key] = std::move(value); }

 private:
  Json entries_ = Json::object();
};

}  // namespace metabraid
