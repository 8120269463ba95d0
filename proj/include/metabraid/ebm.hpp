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

#include "metabraid/anyon.hpp"
#include "metabraid/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace metabraid {

class UnsupportedModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Arity { one_qubit, two_qubit };

std::string to_string(Arity arity);
Arity parse_arity(const std::string& text);
inline int generator_count(Arity arity) { return arity == Arity::one_qubit ? 2 : 5; }

/// Which two-qubit generator set to build.
///
/// derived: every generator assembled from the F/R tables for the mirrored
///   second qubit (anyons abc|cba). sigma4 acts as sigma2 and sigma5 as
///   sigma1 on the second qubit.
/// printed: sigma4 = R (+) (I (x) sigma1), sigma5 = R (+) (I (x) sigma2), and
///   the tabulated literal sigma3 where one exists.
enum class EbmVariant { derived, printed };

std::string to_string(EbmVariant v);
EbmVariant parse_variant(const std::string& text);

enum class ProductOrder { left_to_right, right_to_left };

std::string to_string(ProductOrder order);

struct Letter {
  int index = 0;  // 0-based generator index
  int sign = 1;   // +1 generator, -1 inverse

  bool operator==(const Letter&) const = default;
  Letter inverse() const { return {index, -sign}; }
};

struct BraidWord {
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const BraidWord&) const = default;

  /// Reversed order, every sign flipped.
  BraidWord inverse() const;
  BraidWord operator+(const BraidWord& o) const;
  /// True when some letter is immediately followed by its inverse.
  bool has_adjacent_cancellation() const;
};

/// Letter alphabet position: generators first, then inverses. This is also
/// the lexicographic order used for tie-breaking.
inline int alphabet_index(Letter l, int generators) {
  return l.sign > 0 ? l.index : generators + l.index;
}
inline Letter alphabet_letter(int k, int generators) {
  return k < generators ? Letter{k, 1} : Letter{k - generators, -1};
}

/// Two-qubit words use A..E for sigma1..sigma5 and F..J for the inverses.
/// One-qubit words use a, b for sigma1, sigma2 and A, B for the inverses.
std::string encode_word(const BraidWord& w, Arity arity);
BraidWord decode_word(const std::string& text, Arity arity);

template <typename Real>
struct EbmSet {
  std::string name;
  std::optional<ModelSpec> model;
  Arity arity = Arity::one_qubit;
  EbmVariant variant = EbmVariant::derived;
  std::vector<Matrix<Real>> generators;
  std::vector<Matrix<Real>> inverses;
  std::vector<std::string> basis;

  int dim() const { return generators.front().dim(); }
  int generator_count() const { return static_cast<int>(generators.size()); }
  const Matrix<Real>& matrix(Letter l) const {
    return l.sign > 0 ? generators.at(l.index) : inverses.at(l.index);
  }
  /// Fills inverses from generators.
  void finalize();
};

/// sigma1 = diag of R over the two channels; sigma2 = F^T diag(R) F.
template <typename Real>
EbmSet<Real> one_qubit_ebms(const ModelSpec& model);

template <typename Real>
EbmSet<Real> two_qubit_ebms(const ModelSpec& model, EbmVariant variant = EbmVariant::derived);

/// sigma3 of the two-qubit set assembled from F/R data, independent of any
/// tabulated literal.
template <typename Real>
Matrix<Real> sigma3_from_fr(const ModelSpec& model);

/// The tabulated literal sigma3 for V113_3, V131_3 and V133_1.
bool has_printed_sigma3(const ModelSpec& model);
template <typename Real>
Matrix<Real> printed_sigma3(const ModelSpec& model);

/// Standard Fibonacci one-qubit generators.
template <typename Real>
EbmSet<Real> fibonacci_ebms();

/// Builds a set from JSON {"name", "arity", "generators": [matrix, ...]}.
template <typename Real>
EbmSet<Real> ebm_set_from_json(const Json& j);
template <typename Real>
Json ebm_set_to_json(const EbmSet<Real>& set);

/// "V113_3" or "fibonacci".
template <typename Real>
EbmSet<Real> make_ebm_set(const std::string& model, Arity arity,
                          EbmVariant variant = EbmVariant::derived);

/// Recipe for building an EbmSet at any precision: a named model or an
/// externally supplied JSON set.
struct EbmSource {
  std::string model;
  Arity arity = Arity::two_qubit;
  EbmVariant variant = EbmVariant::derived;
  std::optional<Json> external;

  template <typename Real>
  EbmSet<Real> build() const {
    if (external) return ebm_set_from_json<Real>(*external);
    return make_ebm_set<Real>(model, arity, variant);
  }
  std::string name() const { return external ? external->value("name", std::string("external")) : model; }
};

/// Product of the word's matrices; left_to_right puts the first letter
/// leftmost.
template <typename Real>
Matrix<Real> braidword_unitary(const EbmSet<Real>& ebms, const BraidWord& word,
                               ProductOrder order = ProductOrder::left_to_right);

template <typename Real>
struct BlockSplit {
  Complex<Real> m11;
  Matrix<Real> a{4};
  /// Largest |entry| in row 0 / column 0 off the diagonal.
  Real off_block_norm{};
};

template <typename Real>
BlockSplit<Real> split_blocks(const Matrix<Real>& u);

}  // namespace metabraid
