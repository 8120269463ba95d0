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

#include "metabraid/ska.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace metabraid {

namespace {

using C = Complex<double>;
using Vec3 = std::array<double, 3>;

// Unit axis n of su = cos(a/2) I - i sin(a/2) n.sigma; zero when su = +-I.
Vec3 rotation_axis(const Matrix<double>& su) {
  Vec3 v{-su(0, 1).im, -su(0, 1).re, -su(0, 0).im};
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (n < 1e-300) return {0, 0, 0};
  return {v[0] / n, v[1] / n, v[2] / n};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

double vnorm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Unit quaternion (w, x, y, z) as w I - i (x, y, z).sigma.
Matrix<double> from_quaternion(double w, const Vec3& v) {
  return Matrix<double>(2, {C(w, -v[2]), C(-v[1], -v[0]),  //
                            C(v[1], -v[0]), C(w, v[2])});
}

// S with S (n_from . sigma) S^dagger = n_to . sigma. Uses the half-way
// quaternion (1 + c, from x to), which is well conditioned for c >= 0; the
// other hemisphere goes through a pi flip of `from` first.
Matrix<double> align(const Vec3& from, const Vec3& to) {
  const double c = dot(from, to);
  if (c >= 0) {
    const Vec3 k = cross(from, to);
    const double w = 1 + c;
    const double n = std::sqrt(w * w + dot(k, k));
    return from_quaternion(w / n, {k[0] / n, k[1] / n, k[2] / n});
  }
  const Vec3 trial = std::abs(from[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 p = cross(from, trial);
  const double pn = vnorm(p);
  p = {p[0] / pn, p[1] / pn, p[2] / pn};
  const Matrix<double> flip = from_quaternion(0, p);
  return align({-from[0], -from[1], -from[2]}, to) * flip;
}

std::string matrix_key(const Matrix<double>& m) {
  std::string key;
  char buf[64];
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g;", m(r, c).re, m(r, c).im);
      key += buf;
    }
  }
  return key;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

void SKAConfig::validate() const {
  if (basic_length < 1) throw std::invalid_argument("SKA config: basic_length must be >= 1");
  if (max_level < 0) throw std::invalid_argument("SKA config: max_level must be >= 0");
  ga.validate();
}

Json SKAConfig::to_json() const {
  Json j;
  j["model"] = model;
  j["basic_length"] = basic_length;
  j["max_level"] = max_level;
  j["ga"] = ga.to_json();
  return j;
}

Matrix<double> to_special_unitary(const Matrix<double>& u) {
  if (u.dim() != 2) throw DimensionError("to_special_unitary requires a 2x2 matrix");
  const C root = sqrt(det(u));
  Matrix<double> su = u;
  su *= C(1.0) / root;
  if (trace(su).re < 0) su *= C(-1.0);
  return su;
}

double rotation_angle(const Matrix<double>& su) {
  const double half_trace = std::min(1.0, std::abs(trace(su).re) / 2.0);
  return 2.0 * std::acos(half_trace);
}

Matrix<double> axis_rotation(const std::array<double, 3>& n, double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  return Matrix<double>(2, {C(c, -s * n[2]), C(-s * n[1], -s * n[0]),  //
                            C(s * n[1], -s * n[0]), C(c, s * n[2])});
}

double gc_factor_angle(double theta) {
  // x = sin^2(phi/2) solves x^4 - x^2 + sin^2(theta/2)/4 = 0 on the small
  // root, x^2 = (1 - cos(theta/2)) / 2, i.e. x = sin(theta/4). The closed form
  // avoids the cancellation at small theta.
  const double x = std::sin(theta / 4);
  return 2.0 * std::asin(std::sqrt(x));
}

std::pair<Matrix<double>, Matrix<double>> gc_decompose(const Matrix<double>& delta) {
  const Matrix<double> target = to_special_unitary(delta);
  const double theta = rotation_angle(target);
  if (theta >= M_PI - 1e-6) {
    throw DecompositionDomainError("gc_decompose: rotation angle " + std::to_string(theta) +
                                   " too close to pi");
  }
  const Matrix<double> id = Matrix<double>::identity(2);
  if (theta == 0.0) return {id, id};
  const double phi = gc_factor_angle(theta);
  const Matrix<double> v = axis_rotation({1, 0, 0}, phi);
  const Matrix<double> w = axis_rotation({0, 1, 0}, phi);
  const Matrix<double> comm = v * w * dagger(v) * dagger(w);
  const Matrix<double> s = align(rotation_axis(comm), rotation_axis(target));
  return {s * v * dagger(s), s * w * dagger(s)};
}

SolovayKitaev::SolovayKitaev(SKAConfig cfg)
    : cfg_(std::move(cfg)), set_(make_ebm_set<double>(cfg_.model, Arity::one_qubit)) {
  cfg_.validate();
}

Approximation SolovayKitaev::basic_approximation(const Matrix<double>& target) {
  if (unitarity_error(target) > 1e-10) throw MetricDomainError("SKA target is not unitary");
  const std::string tkey = matrix_key(target);
  auto it = memo_.find({tkey, 0});
  if (it != memo_.end()) return it->second;

  GAConfig ga = cfg_.ga;
  ga.word_length = cfg_.basic_length;
  ga.use_inverses = true;
  ga.seed = derive_seed(cfg_.ga.seed, fnv1a(tkey), 0);
  const Objective obj = Objective::one_qubit_custom(target);
  const GAResult res = ga_search(ga, set_, obj);
  ++ga_calls_;

  Approximation a;
  a.word = res.best.word;
  a.matrix = braidword_unitary(set_, a.word);
  a.distance = global_phase_distance(target, a.matrix);
  a.level = 0;
  memo_[{tkey, 0}] = a;
  return a;
}

Approximation SolovayKitaev::solve(const Matrix<double>& target, int level) {
  if (level < 0) throw std::invalid_argument("SKA level must be >= 0");
  if (level == 0) return basic_approximation(target);
  const std::string tkey = matrix_key(target);
  auto it = memo_.find({tkey, level});
  if (it != memo_.end()) return it->second;

  const Approximation prev = solve(target, level - 1);
  const auto [v, w] = gc_decompose(target * dagger(prev.matrix));
  const Approximation av = solve(v, level - 1);
  const Approximation aw = solve(w, level - 1);

  Approximation a;
  a.word = av.word + aw.word + av.word.inverse() + aw.word.inverse() + prev.word;
  a.matrix = av.matrix * aw.matrix * dagger(av.matrix) * dagger(aw.matrix) * prev.matrix;
  a.distance = global_phase_distance(target, a.matrix);
  a.level = level;
  memo_[{tkey, level}] = a;
  return a;
}

std::vector<Approximation> SolovayKitaev::compile(const Matrix<double>& target) {
  solve(target, cfg_.max_level);
  std::vector<Approximation> out;
  for (int l = 0; l <= cfg_.max_level; ++l) out.push_back(solve(target, l));
  return out;
}

Approximation basic_approximation(const Matrix<double>& target, const SKAConfig& cfg) {
  return SolovayKitaev(cfg).basic_approximation(target);
}

Approximation solovay_kitaev(const Matrix<double>& target, int level, const SKAConfig& cfg) {
  if (level > cfg.max_level) throw std::invalid_argument("SKA level exceeds max_level");
  return SolovayKitaev(cfg).solve(target, level);
}

std::string SKACache::key(const std::string& model, const std::string& gate, int basic_length,
                          std::uint64_t seed, int level) {
  return model + "|" + gate + "|" + std::to_string(basic_length) + "|" + std::to_string(seed) +
         "|" + std::to_string(level);
}

void SKACache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  entries_ = Json::parse(in);
  if (!entries_.is_object()) throw std::runtime_error("SKA cache " + path + " is not a JSON object");
}

void SKACache::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write SKA cache " + path);
  out << entries_.dump(2) << "\n";
}

}  // namespace metabraid
