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

#include "metabraid/ebm.hpp"

#include <algorithm>
#include <cctype>

namespace metabraid {

namespace {

void require_qubit_model(const ModelSpec& model) {
  const auto models = qubit_models();
  if (std::find(models.begin(), models.end(), model) == models.end()) {
    throw UnsupportedModelError(model.name() + " is not one of the six qubit models");
  }
}

template <typename Real>
Complex<Real> r_of(int a, int b, int c) {
  return FRTable::so3_2().r_symbol<Real>({a, b, c});
}

bool contains(const std::vector<int>& xs, int x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

int unique_or_throw(const std::vector<int>& xs, const char* what) {
  if (xs.size() != 1) {
    throw std::logic_error(std::string(what) + ": expected a unique label, got " +
                           std::to_string(xs.size()));
  }
  return xs.front();
}

// Labels describing the non-computational state of the abc|cba two-qubit
// encoding.
struct TwoQubitLabels {
  std::vector<int> ch;  // computational channels of a (x) b
  int e_nc;             // channel of the leftmost pair in |NC>
  int g_nc;             // charge of the first three anyons in |NC>
  int f;                // b (x) c channel reached from g_nc
};

TwoQubitLabels two_qubit_labels(const ModelSpec& m) {
  TwoQubitLabels t;
  t.ch = {m.channels[0].value(), m.channels[1].value()};
  std::vector<std::pair<int, int>> nc;
  for (int e : t.ch) {
    for (int g : fusion_product(e, m.c())) {
      if (g != m.d()) nc.emplace_back(e, g);
    }
  }
  if (nc.size() != 1) throw std::logic_error(m.name() + ": non-computational state not unique");
  t.e_nc = nc[0].first;
  t.g_nc = nc[0].second;
  std::vector<int> fs;
  for (int x : fusion_product(m.b(), m.c())) {
    if (contains(fusion_product(m.a(), x), t.g_nc)) fs.push_back(x);
  }
  t.f = unique_or_throw(fs, "b(x)c channel");
  return t;
}

template <typename Real>
Matrix<Real> scalar_plus(const Complex<Real>& r, const Matrix<Real>& m) {
  return direct_sum(r, m);
}

struct PrintedTerm {
  int coef;      // multiple of 1/2
  int twelfths;  // exponent in units of pi/12
};

struct PrintedEntry {
  int row, col;
  std::vector<PrintedTerm> terms;
};

// Literal tabulated sigma3 matrices; entry = (1/2) sum coef * e^{i pi k/12}.
const std::vector<PrintedEntry>* printed_sigma3_data(const ModelSpec& m) {
  static const std::vector<PrintedEntry> v113 = {
      {0, 0, {{1, -3}, {1, -11}}}, {0, 4, {{-1, -3}, {1, -11}}}, {1, 1, {{2, -3}}},
      {2, 2, {{2, -11}}},          {3, 3, {{2, -11}}},           {4, 0, {{-1, -3}, {1, -11}}},
      {4, 4, {{1, -3}, {1, -11}}}};
  static const std::vector<PrintedEntry> v131 = {
      {0, 0, {{1, 9}, {1, 1}}}, {0, 1, {{-1, 9}, {1, 1}}}, {1, 0, {{-1, 9}, {1, 1}}},
      {1, 1, {{1, 9}, {1, 1}}}, {2, 2, {{2, -1}}},         {3, 3, {{2, -1}}},
      {4, 4, {{2, 9}}}};
  static const std::vector<PrintedEntry> v133 = {
      {0, 0, {{1, -3}, {1, -11}}}, {0, 1, {{-1, -3}, {1, -11}}}, {1, 0, {{-1, -3}, {1, -11}}},
      {1, 1, {{1, -3}, {1, -11}}}, {2, 2, {{2, -11}}},           {3, 3, {{2, -11}}},
      {4, 4, {{2, -3}}}};
  const std::string n = m.name();
  if (n == "V113_3") return &v113;
  if (n == "V131_3") return &v131;
  if (n == "V133_1") return &v133;
  return nullptr;
}

}  // namespace

std::string to_string(Arity arity) { return arity == Arity::one_qubit ? "one_qubit" : "two_qubit"; }

Arity parse_arity(const std::string& text) {
  if (text == "1" || text == "one" || text == "one_qubit") return Arity::one_qubit;
  if (text == "2" || text == "two" || text == "two_qubit") return Arity::two_qubit;
  throw std::invalid_argument("arity must be 1 or 2, got '" + text + "'");
}

std::string to_string(EbmVariant v) { return v == EbmVariant::derived ? "derived" : "printed"; }

EbmVariant parse_variant(const std::string& text) {
  if (text == "derived") return EbmVariant::derived;
  if (text == "printed") return EbmVariant::printed;
  throw std::invalid_argument("variant must be derived or printed, got '" + text + "'");
}

std::string to_string(ProductOrder order) {
  return order == ProductOrder::left_to_right ? "left_to_right" : "right_to_left";
}

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back(it->inverse());
  return out;
}

BraidWord BraidWord::operator+(const BraidWord& o) const {
  BraidWord out = *this;
  out.letters.insert(out.letters.end(), o.letters.begin(), o.letters.end());
  return out;
}

bool BraidWord::has_adjacent_cancellation() const {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == letters[i - 1].inverse()) return true;
  }
  return false;
}

std::string encode_word(const BraidWord& w, Arity arity) {
  const int n = generator_count(arity);
  std::string out;
  out.reserve(w.size());
  for (const Letter& l : w.letters) {
    if (l.index < 0 || l.index >= n || (l.sign != 1 && l.sign != -1)) {
      throw std::out_of_range("letter out of range for " + to_string(arity));
    }
    if (arity == Arity::two_qubit) {
      out.push_back(static_cast<char>('A' + alphabet_index(l, n)));
    } else {
      out.push_back(static_cast<char>((l.sign > 0 ? 'a' : 'A') + l.index));
    }
  }
  return out;
}

BraidWord decode_word(const std::string& text, Arity arity) {
  BraidWord w;
  w.letters.reserve(text.size());
  for (char ch : text) {
    if (arity == Arity::two_qubit) {
      if (ch < 'A' || ch > 'J') {
        throw std::invalid_argument(std::string("unknown two-qubit letter '") + ch + "'");
      }
      w.letters.push_back(alphabet_letter(ch - 'A', 5));
    } else {
      if (ch == 'a' || ch == 'b') {
        w.letters.push_back({ch - 'a', 1});
      } else if (ch == 'A' || ch == 'B') {
        w.letters.push_back({ch - 'A', -1});
      } else {
        throw std::invalid_argument(std::string("unknown one-qubit letter '") + ch + "'");
      }
    }
  }
  return w;
}

template <typename Real>
void EbmSet<Real>::finalize() {
  inverses.clear();
  for (const auto& g : generators) inverses.push_back(dagger(g));
}

template <typename Real>
EbmSet<Real> one_qubit_ebms(const ModelSpec& model) {
  require_qubit_model(model);
  const FRTable& fr = FRTable::so3_2();
  const int a = model.a(), b = model.b(), c = model.c(), d = model.d();

  const Matrix<Real> s1 = Matrix<Real>::diagonal(
      {r_of<Real>(a, b, model.channels[0].value()), r_of<Real>(a, b, model.channels[1].value())});
  const Matrix<Real> f = fr.f_matrix<Real>({a, b, c, d});
  std::vector<Complex<Real>> rd;
  for (int x : fusion_product(b, c)) rd.push_back(r_of<Real>(b, c, x));
  const Matrix<Real> s2 = transpose(f) * Matrix<Real>::diagonal(rd) * f;

  EbmSet<Real> set;
  set.name = model.name();
  set.model = model;
  set.arity = Arity::one_qubit;
  set.generators = {s1, s2};
  set.basis = {"0", "1"};
  set.finalize();
  return set;
}

template <typename Real>
Matrix<Real> sigma3_from_fr(const ModelSpec& model) {
  require_qubit_model(model);
  const FRTable& fr = FRTable::so3_2();
  const TwoQubitLabels t = two_qubit_labels(model);
  const int c = model.c();
  auto idx = [&](int i, int j) {
    auto pos = [&](int x) { return static_cast<int>(std::find(t.ch.begin(), t.ch.end(), x) - t.ch.begin()); };
    return 1 + 2 * pos(i) + pos(j);
  };

  Matrix<Real> s(5);
  // States other than (e_nc, e_nc) only pick up the phase of the middle
  // pair's channel.
  for (int i : t.ch) {
    for (int j : t.ch) {
      if (i == t.e_nc && j == t.e_nc) continue;
      std::vector<int> hs;
      for (int h : fusion_product(c, c)) {
        if (contains(fusion_product(i, h), j)) hs.push_back(h);
      }
      const int h = unique_or_throw(hs, "middle channel");
      s(idx(i, j), idx(i, j)) = r_of<Real>(c, c, h);
    }
  }
  // |NC> and (e_nc, e_nc) share the intermediate channel e_nc and mix
  // through F^{c c e}_e.
  const FKey key{c, c, t.e_nc, t.e_nc};
  const Matrix<Real> f = fr.f_matrix<Real>(key);
  const FBlock& blk = fr.f_block(key);
  std::vector<Complex<Real>> rd;
  for (int h : blk.col_labels) rd.push_back(r_of<Real>(c, c, h));
  const Matrix<Real> mix = f * Matrix<Real>::diagonal(rd) * transpose(f);
  auto pos_of = [&](int g) { return g == t.g_nc ? 0 : idx(t.e_nc, t.e_nc); };
  for (int r = 0; r < 2; ++r) {
    for (int col = 0; col < 2; ++col) {
      s(pos_of(blk.row_labels[r]), pos_of(blk.row_labels[col])) = mix(r, col);
    }
  }
  return s;
}

bool has_printed_sigma3(const ModelSpec& model) { return printed_sigma3_data(model) != nullptr; }

template <typename Real>
Matrix<Real> printed_sigma3(const ModelSpec& model) {
  const auto* data = printed_sigma3_data(model);
  if (data == nullptr) throw UnsupportedModelError("no tabulated sigma3 for " + model.name());
  Matrix<Real> s(5);
  for (const PrintedEntry& e : *data) {
    Complex<Real> z;
    for (const PrintedTerm& t : e.terms) z += twelfth_root<Real>(t.twelfths) * Real(t.coef);
    s(e.row, e.col) = z * Real(0.5);
  }
  return s;
}

template <typename Real>
EbmSet<Real> two_qubit_ebms(const ModelSpec& model, EbmVariant variant) {
  require_qubit_model(model);
  const EbmSet<Real> one = one_qubit_ebms<Real>(model);
  const TwoQubitLabels t = two_qubit_labels(model);
  const int a = model.a(), b = model.b(), c = model.c();
  const Matrix<Real>& s1 = one.generators[0];
  const Matrix<Real>& s2 = one.generators[1];
  const Matrix<Real> i2 = Matrix<Real>::identity(2);

  EbmSet<Real> set;
  set.name = model.name();
  set.model = model;
  set.arity = Arity::two_qubit;
  set.variant = variant;
  set.generators.push_back(scalar_plus(r_of<Real>(a, b, t.e_nc), kron(s1, i2)));
  set.generators.push_back(scalar_plus(r_of<Real>(b, c, t.f), kron(s2, i2)));
  if (variant == EbmVariant::printed && has_printed_sigma3(model)) {
    set.generators.push_back(printed_sigma3<Real>(model));
  } else {
    set.generators.push_back(sigma3_from_fr<Real>(model));
  }
  if (variant == EbmVariant::derived) {
    set.generators.push_back(scalar_plus(r_of<Real>(c, b, t.f), kron(i2, s2)));
    set.generators.push_back(scalar_plus(r_of<Real>(b, a, t.e_nc), kron(i2, s1)));
  } else {
    set.generators.push_back(scalar_plus(r_of<Real>(c, b, t.f), kron(i2, s1)));
    set.generators.push_back(scalar_plus(r_of<Real>(b, a, t.e_nc), kron(i2, s2)));
  }
  set.basis = {"NC", "00", "01", "10", "11"};
  set.finalize();
  return set;
}

template <typename Real>
EbmSet<Real> fibonacci_ebms() {
  using std::sqrt;
  const Real pi = pi_value<Real>();
  const Real phi = (Real(1) + sqrt(Real(5))) / Real(2);
  const Real inv_phi = Real(1) / phi;
  const Real inv_sqrt_phi = Real(1) / sqrt(phi);
  const Matrix<Real> s1 = Matrix<Real>::diagonal(
      {polar_unit<Real>(Real(-4) * pi / Real(5)), polar_unit<Real>(Real(3) * pi / Real(5))});
  Matrix<Real> f(2);
  f(0, 0) = Complex<Real>(inv_phi);
  f(0, 1) = Complex<Real>(inv_sqrt_phi);
  f(1, 0) = Complex<Real>(inv_sqrt_phi);
  f(1, 1) = Complex<Real>(Real(-inv_phi));
  EbmSet<Real> set;
  set.name = "fibonacci";
  set.arity = Arity::one_qubit;
  set.generators = {s1, f * s1 * f};
  set.basis = {"0", "1"};
  set.finalize();
  return set;
}

template <typename Real>
EbmSet<Real> ebm_set_from_json(const Json& j) {
  EbmSet<Real> set;
  set.name = j.value("name", std::string("external"));
  set.arity = parse_arity(j.at("arity").get<std::string>());
  for (const Json& m : j.at("generators")) set.generators.push_back(matrix_from_json<Real>(m));
  if (static_cast<int>(set.generators.size()) != generator_count(set.arity)) {
    throw std::invalid_argument("external EBM set '" + set.name + "' needs " +
                                std::to_string(generator_count(set.arity)) + " generators");
  }
  const int dim = set.arity == Arity::one_qubit ? 2 : 5;
  for (const auto& g : set.generators) {
    if (g.dim() != dim) throw DimensionError("external generator has dimension " + std::to_string(g.dim()));
  }
  if (j.contains("basis")) {
    set.basis = j.at("basis").get<std::vector<std::string>>();
  } else if (set.arity == Arity::one_qubit) {
    set.basis = {"0", "1"};
  } else {
    set.basis = {"NC", "00", "01", "10", "11"};
  }
  set.finalize();
  return set;
}

template <typename Real>
Json ebm_set_to_json(const EbmSet<Real>& set) {
  Json j;
  j["name"] = set.name;
  j["arity"] = to_string(set.arity);
  j["variant"] = to_string(set.variant);
  j["basis"] = set.basis;
  Json gens = Json::array();
  for (const auto& g : set.generators) gens.push_back(matrix_to_json(g));
  j["generators"] = std::move(gens);
  return j;
}

template <typename Real>
EbmSet<Real> make_ebm_set(const std::string& model, Arity arity, EbmVariant variant) {
  std::string lower = model;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "fibonacci" || lower == "fib") {
    if (arity != Arity::one_qubit) {
      throw UnsupportedModelError("Fibonacci two-qubit generators must be supplied externally");
    }
    return fibonacci_ebms<Real>();
  }
  const ModelSpec spec = ModelSpec::parse(model);
  return arity == Arity::one_qubit ? one_qubit_ebms<Real>(spec) : two_qubit_ebms<Real>(spec, variant);
}

template <typename Real>
Matrix<Real> braidword_unitary(const EbmSet<Real>& ebms, const BraidWord& word, ProductOrder order) {
  Matrix<Real> acc = Matrix<Real>::identity(ebms.dim());
  Matrix<Real> tmp(ebms.dim());
  const int n = ebms.generator_count();
  for (const Letter& l : word.letters) {
    if (l.index < 0 || l.index >= n) {
      throw std::out_of_range("generator index " + std::to_string(l.index) + " out of range for " +
                              ebms.name);
    }
    const Matrix<Real>& m = ebms.matrix(l);
    if (order == ProductOrder::left_to_right) {
      matmul_into(acc, m, tmp);
    } else {
      matmul_into(m, acc, tmp);
    }
    std::swap(acc, tmp);
  }
  return acc;
}

template <typename Real>
BlockSplit<Real> split_blocks(const Matrix<Real>& u) {
  if (u.dim() != 5) throw DimensionError("split_blocks requires a 5x5 matrix");
  BlockSplit<Real> out;
  out.m11 = u(0, 0);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out.a(r, c) = u(r + 1, c + 1);
  }
  Real norm_max(0);
  for (int k = 1; k < 5; ++k) {
    Real x = abs(u(0, k));
    Real y = abs(u(k, 0));
    if (x > norm_max) norm_max = x;
    if (y > norm_max) norm_max = y;
  }
  out.off_block_norm = norm_max;
  return out;
}

#define METABRAID_INSTANTIATE_EBM(Real)                                                          \
  template struct EbmSet<Real>;                                                                  \
  template EbmSet<Real> one_qubit_ebms<Real>(const ModelSpec&);                                  \
  template EbmSet<Real> two_qubit_ebms<Real>(const ModelSpec&, EbmVariant);                      \
  template Matrix<Real> sigma3_from_fr<Real>(const ModelSpec&);                                  \
  template Matrix<Real> printed_sigma3<Real>(const ModelSpec&);                                  \
  template EbmSet<Real> fibonacci_ebms<Real>();                                                  \
  template EbmSet<Real> ebm_set_from_json<Real>(const Json&);                                    \
  template Json ebm_set_to_json<Real>(const EbmSet<Real>&);                                      \
  template EbmSet<Real> make_ebm_set<Real>(const std::string&, Arity, EbmVariant);               \
  template Matrix<Real> braidword_unitary<Real>(const EbmSet<Real>&, const BraidWord&,           \
                                                ProductOrder);                                   \
  template BlockSplit<Real> split_blocks<Real>(const Matrix<Real>&);

METABRAID_INSTANTIATE_EBM(double)
METABRAID_INSTANTIATE_EBM(BigFloat)

}  // namespace metabraid
