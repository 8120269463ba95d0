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

#include "metabraid/ebm.hpp"
#include "metabraid/metrics.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace metabraid {

enum class ObjectiveKind { one_qubit_gate, cnot_local_class };

/// What a search minimizes.
///
/// one_qubit_gate: global phase distance to a 2x2 target.
/// cnot_local_class: invariant distance of the computational block to the
///   CNOT class. Words that couple |NC> to the computational space
///   (off-block norm above leakage_tolerance) are not valid two-qubit gates
///   and are rejected.
struct Objective {
  ObjectiveKind kind = ObjectiveKind::cnot_local_class;
  /// Gate name understood by gate_matrix(), or "custom".
  std::string target_name = "CNOT";
  /// Custom 2x2 target as decimal-string JSON (used when target_name is
  /// "custom").
  Json target_json;
  Backend backend = Backend::native();
  double leakage_tolerance = 1e-9;

  static Objective one_qubit(const std::string& gate, Backend backend = Backend::native());
  template <typename Real>
  static Objective one_qubit_custom(const Matrix<Real>& target, Backend backend = Backend::native());
  static Objective cnot(Backend backend = Backend::native());

  std::string to_string() const;

  template <typename Real>
  Matrix<Real> target() const;
};

template <typename Real>
struct Score {
  Real distance{};
  bool admissible = true;
  /// Two-qubit only.
  Real m11_abs{};
  Real off_block_norm{};
  /// Of the 2x2 word matrix (one-qubit) or the 4x4 block (two-qubit).
  Real unitarity_defect{};
};

/// Fast scoring of a word matrix; unitarity defect is not computed.
template <typename Real>
Score<Real> score_fast(const Objective& obj, const Matrix<Real>& target, const Matrix<Real>& u);

/// Full report including the unitarity defect.
template <typename Real>
Score<Real> score_full(const Objective& obj, const Matrix<Real>& target, const Matrix<Real>& u);

/// One reported word.
struct SearchRecord {
  std::string model;
  std::string objective;
  BraidWord word;
  std::string letters;
  int length = 0;
  /// Reported value (at `backend`), and its full decimal expansion.
  double distance = 0;
  std::string distance_text;
  bool numerically_zero = false;
  /// Native64 value seen during the search.
  double distance_native = 0;
  bool admissible = true;
  std::optional<double> m11_abs;
  std::optional<double> off_block_norm;
  double unitarity_defect = 0;
  std::uint64_t seed = 0;
  std::optional<int> generation;
  std::string backend;
  std::string method;
};

Json record_to_json(const SearchRecord& r);

/// Fills the reported fields of `rec` by evaluating its word at `backend`.
void rescore_record(SearchRecord& rec, const EbmSource& source, const Objective& obj,
                    const Backend& backend);
void rescore_records(std::vector<SearchRecord>& recs, const EbmSource& source, const Objective& obj,
                     const Backend& backend);

/// Distance then alphabet-lexicographic word order.
bool record_less(const SearchRecord& x, const SearchRecord& y, int generators);

}  // namespace metabraid
