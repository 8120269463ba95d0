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

#include "metabraid/anyon.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace metabraid {

namespace {

constexpr const char* kNames[AnyonLabel::kCount] = {"1", "X", "Y", "X'", "Z"};

void check_label(int v) {
  if (v < 0 || v >= AnyonLabel::kCount) {
    throw std::invalid_argument("anyon label must be in [0, 4], got " + std::to_string(v));
  }
}

bool contains(const std::vector<int>& xs, int x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

// Exchanging X and X' maps one qubit model onto its partner.
int swap_x(int v) { return v == 1 ? 3 : (v == 3 ? 1 : v); }

ModelSpec partner(const ModelSpec& m) {
  return ModelSpec::make(swap_x(m.a()), swap_x(m.b()), swap_x(m.c()), swap_x(m.d()));
}

// Global phase (in twelfths of pi, mod 24) relating two diagonal phase lists,
// or -1 when they are not related by a global phase.
int phase_offset(const std::vector<int>& x, const std::vector<int>& y) {
  int off = ((y[0] - x[0]) % 24 + 24) % 24;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (((y[i] - x[i]) % 24 + 24) % 24 != off) return -1;
  }
  return off;
}

std::vector<int> sigma1_phases(const ModelSpec& m, const FRTable& fr) {
  std::vector<int> out;
  for (AnyonLabel ch : m.channels) out.push_back(fr.r_twelfths({m.a(), m.b(), ch.value()}));
  return out;
}

std::vector<int> sigma2_phases(const ModelSpec& m, const FRTable& fr) {
  std::vector<int> out;
  for (int f : fusion_product(m.b(), m.c())) out.push_back(fr.r_twelfths({m.b(), m.c(), f}));
  return out;
}

std::string describe_offset(int sigma, int off) {
  if (off == 0) return "";
  if (off == 12) return "sigma" + std::to_string(sigma) + " differs by pi";
  return "sigma" + std::to_string(sigma) + " differs by " + std::to_string(off) + "pi/12";
}

// a * sqrt(k) with a rational and k square-free.
struct Radical {
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::int64_t k = 1;
};

Radical to_radical(int sign, std::int64_t num, std::int64_t den) {
  // sqrt(num/den) = sqrt(num*den)/den
  std::int64_t n = num * den;
  std::int64_t s = 1;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    while (n % (f * f) == 0) {
      n /= f * f;
      s *= f;
    }
  }
  std::int64_t g = std::gcd(s, den);
  return {sign * s / g, den / g, n};
}

}  // namespace

AnyonLabel::AnyonLabel(int value) : value_(value) { check_label(value); }

std::string AnyonLabel::name() const { return kNames[value_]; }

AnyonLabel AnyonLabel::from_name(const std::string& name) {
  for (int i = 0; i < kCount; ++i) {
    if (name == kNames[i]) return AnyonLabel(i);
  }
  if (name == "X′") return AnyonLabel(3);
  throw std::invalid_argument("unknown anyon name '" + name + "'");
}

std::vector<int> fusion_product(int a, int b) {
  check_label(a);
  check_label(b);
  std::vector<int> out;
  for (int c = std::abs(a - b); c <= std::min(a + b, 8 - a - b); c += 2) out.push_back(c);
  return out;
}

std::vector<AnyonLabel> fusion_product(AnyonLabel a, AnyonLabel b) {
  std::vector<AnyonLabel> out;
  for (int c : fusion_product(a.value(), b.value())) out.emplace_back(c);
  return out;
}

std::string ModelSpec::name() const {
  return "V" + std::to_string(a()) + std::to_string(b()) + std::to_string(c()) + "_" +
         std::to_string(d());
}

ModelSpec ModelSpec::make(int a, int b, int c, int d) {
  std::vector<int> ch = fusion_product(a, b);
  check_label(c);
  check_label(d);
  const std::string label = "V" + std::to_string(a) + std::to_string(b) + std::to_string(c) +
                            "_" + std::to_string(d);
  if (ch.size() != 2) {
    throw std::invalid_argument(label + ": first fusion must have exactly two outcomes");
  }
  for (int e : ch) {
    if (!contains(fusion_product(e, c), d)) {
      throw std::invalid_argument(label + ": total charge unreachable from channel " +
                                  std::to_string(e));
    }
  }
  ModelSpec m;
  m.initial = {AnyonLabel(a), AnyonLabel(b), AnyonLabel(c)};
  m.total_charge = AnyonLabel(d);
  m.channels = {AnyonLabel(ch[0]), AnyonLabel(ch[1])};
  return m;
}

ModelSpec ModelSpec::parse(const std::string& text) {
  const bool shape_ok = text.size() == 6 && (text[0] == 'V' || text[0] == 'v') && text[4] == '_' &&
                        std::isdigit(static_cast<unsigned char>(text[1])) &&
                        std::isdigit(static_cast<unsigned char>(text[2])) &&
                        std::isdigit(static_cast<unsigned char>(text[3])) &&
                        std::isdigit(static_cast<unsigned char>(text[5]));
  if (!shape_ok) {
    throw std::invalid_argument("model name must look like V113_3, got '" + text + "'");
  }
  return make(text[1] - '0', text[2] - '0', text[3] - '0', text[5] - '0');
}

std::vector<ModelSpec> enumerate_candidate_models() {
  // Conventional listing order of the two-outcome first fusions.
  static constexpr int kPairs[8][2] = {{1, 1}, {3, 3}, {1, 2}, {2, 1},
                                       {1, 3}, {3, 1}, {2, 3}, {3, 2}};
  std::vector<ModelSpec> out;
  for (const auto& pair : kPairs) {
    const std::vector<int> ch = fusion_product(pair[0], pair[1]);
    for (int c = 0; c < AnyonLabel::kCount; ++c) {
      for (int d = 0; d < AnyonLabel::kCount; ++d) {
        if (contains(fusion_product(ch[0], c), d) && contains(fusion_product(ch[1], c), d)) {
          out.push_back(ModelSpec::make(pair[0], pair[1], c, d));
        }
      }
    }
  }
  return out;
}

std::vector<ModelSpec> filter_braidable(const std::vector<ModelSpec>& models) {
  const std::vector<ModelSpec> candidates = enumerate_candidate_models();
  std::vector<ModelSpec> out;
  for (const ModelSpec& m : models) {
    if (std::find(candidates.begin(), candidates.end(), m) == candidates.end()) {
      throw std::invalid_argument(m.name() + " is not a candidate model");
    }
    bool ok = true;
    for (int i = 0; i < 2; ++i) {
      const int x = m.initial[i].value();
      const int y = m.initial[i + 1].value();
      if (x != y && !((x == 1 && y == 3) || (x == 3 && y == 1))) ok = false;
    }
    if (ok) out.push_back(m);
  }
  return out;
}

bool is_excluded_standard_encoding(const ModelSpec& m) {
  return m.a() == m.b() && m.b() == m.c();
}

std::vector<ModelClass> qubit_model_classes() {
  const FRTable& fr = FRTable::so3_2();
  std::vector<ModelClass> out;
  std::vector<ModelSpec> seen;
  for (const ModelSpec& m : filter_braidable(enumerate_candidate_models())) {
    if (is_excluded_standard_encoding(m)) continue;
    if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
    ModelSpec first = m;
    ModelSpec second = partner(m);
    // The member carrying two X anyons is listed first.
    auto x_count = [](const ModelSpec& s) {
      return std::count_if(s.initial.begin(), s.initial.end(),
                           [](AnyonLabel l) { return l.value() == 1; });
    };
    if (x_count(second) > x_count(first)) std::swap(first, second);
    seen.push_back(first);
    seen.push_back(second);

    const int off1 = phase_offset(sigma1_phases(first, fr), sigma1_phases(second, fr));
    const int off2 = phase_offset(sigma2_phases(first, fr), sigma2_phases(second, fr));
    const FBlock& f_first = fr.f_block({first.a(), first.b(), first.c(), first.d()});
    const FBlock& f_second = fr.f_block({second.a(), second.b(), second.c(), second.d()});
    if (off1 < 0 || off2 < 0 || f_first.entries != f_second.entries) {
      throw std::logic_error(first.name() + "/" + second.name() +
                             " are not related by a global phase");
    }
    std::string desc = describe_offset(1, off1);
    const std::string d2 = describe_offset(2, off2);
    if (!d2.empty()) desc = desc.empty() ? d2 : desc + ", " + d2;
    if (desc.empty()) desc = "same";
    out.push_back({first, second, desc});
  }
  return out;
}

std::vector<ModelSpec> qubit_models() {
  std::vector<ModelSpec> out;
  for (const ModelClass& cls : qubit_model_classes()) {
    out.push_back(cls.first);
    out.push_back(cls.second);
  }
  return out;
}

std::string SqrtRational::to_string() const {
  std::string s = sign < 0 ? "-" : "";
  return s + "sqrt(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

bool operator==(const SqrtRational& x, const SqrtRational& y) {
  if (x.num == 0 || y.num == 0) return x.num == y.num;
  return x.sign == y.sign && x.num * y.den == y.num * x.den;
}

std::string FKey::to_string() const {
  return "F^{" + std::to_string(a) + std::to_string(b) + std::to_string(c) + "}_" +
         std::to_string(d);
}

std::string RKey::to_string() const {
  return "R^{" + std::to_string(a) + std::to_string(b) + "}_" + std::to_string(c);
}

const FBlock& FRTable::f_block(const FKey& key) const {
  auto it = f_.find(key);
  if (it == f_.end()) throw LookupError("no F-matrix " + key.to_string() + " in table");
  return it->second;
}

int FRTable::r_twelfths(const RKey& key) const {
  auto it = r_.find(key);
  if (it == r_.end()) throw LookupError("no R-symbol " + key.to_string() + " in table");
  return it->second;
}

bool FRTable::is_symmetric_exact(const FBlock& blk) {
  return blk.entries[0][1] == blk.entries[1][0];
}

bool FRTable::is_involutory_exact(const FBlock& blk) {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      // sum over k of F[r][k] F[k][c], grouped by square-free radicand.
      std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> sum;
      for (int k = 0; k < 2; ++k) {
        const SqrtRational& x = blk.entries[r][k];
        const SqrtRational& y = blk.entries[k][c];
        if (x.num == 0 || y.num == 0) continue;
        Radical t = to_radical(x.sign * y.sign, x.num * y.num, x.den * y.den);
        auto& acc = sum.try_emplace(t.k, std::pair<std::int64_t, std::int64_t>{0, 1}).first->second;
        std::int64_t p = acc.first * t.q + t.p * acc.second;
        std::int64_t q = acc.second * t.q;
        std::int64_t g = std::gcd(p, q);
        if (g == 0) g = 1;
        acc = {p / g, q / g};
      }
      const std::int64_t want = (r == c) ? 1 : 0;
      for (const auto& [k, pq] : sum) {
        const std::int64_t expect = (k == 1) ? want : 0;
        if (pq.first != expect * pq.second) return false;
      }
      if (want == 1 && (sum.count(1) == 0)) return false;
    }
  }
  return true;
}

const FRTable& FRTable::so3_2() {
  static const FRTable table = [] {
    FRTable t;
    const SqrtRational p13{1, 1, 3}, m13{-1, 1, 3}, p23{1, 2, 3}, m23{-1, 2, 3};
    const SqrtRational p12{1, 1, 2}, m12{-1, 1, 2};
    auto block = [](SqrtRational e00, SqrtRational e01, SqrtRational e10, SqrtRational e11,
                    int a, int b, int c, bool inferred) {
      FBlock blk;
      blk.entries = {{{e00, e01}, {e10, e11}}};
      const std::vector<int> rows = fusion_product(b, c);
      const std::vector<int> cols = fusion_product(a, b);
      blk.row_labels = {rows[0], rows[1]};
      blk.col_labels = {cols[0], cols[1]};
      blk.inferred = inferred;
      return blk;
    };
    // (1/sqrt3)[[-sqrt2, 1], [1, sqrt2]]
    for (FKey k : {FKey{1, 1, 3, 3}, FKey{3, 1, 1, 3}, FKey{1, 3, 3, 1}, FKey{3, 3, 1, 1}}) {
      t.f_[k] = block(m23, p13, p13, p23, k.a, k.b, k.c, false);
    }
    // (1/sqrt3)[[-1, sqrt2], [sqrt2, 1]]
    t.f_[{1, 3, 1, 3}] = block(m13, p23, p23, p13, 1, 3, 1, false);
    // Not tabulated; the X <-> X' exchange maps F^{131}_3 onto it.
    t.f_[{3, 1, 3, 1}] = block(m13, p23, p23, p13, 3, 1, 3, true);
    t.f_[{3, 3, 2, 2}] = block(p12, m12, m12, m12, 3, 3, 2, false);
    t.f_[{1, 1, 2, 2}] = block(m12, p12, p12, p12, 1, 1, 2, false);

    t.r_[{1, 1, 0}] = 9;
    t.r_[{1, 1, 2}] = 1;
    t.r_[{1, 3, 2}] = 7;
    t.r_[{3, 1, 2}] = 7;
    t.r_[{1, 3, 4}] = 3;
    t.r_[{3, 1, 4}] = 3;
    t.r_[{3, 3, 0}] = -3;
    t.r_[{3, 3, 2}] = -11;
    return t;
  }();
  return table;
}

}  // namespace metabraid
