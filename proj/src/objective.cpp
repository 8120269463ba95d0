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

#include "metabraid/objective.hpp"

#include <algorithm>

namespace metabraid {

Objective Objective::one_qubit(const std::string& gate, Backend backend) {
  (void)gate_matrix<double>(gate);  // validates the name
  Objective o;
  o.kind = ObjectiveKind::one_qubit_gate;
  o.target_name = gate;
  o.backend = backend;
  return o;
}

template <typename Real>
Objective Objective::one_qubit_custom(const Matrix<Real>& target, Backend backend) {
  if (target.dim() != 2) throw DimensionError("one-qubit target must be 2x2");
  Objective o;
  o.kind = ObjectiveKind::one_qubit_gate;
  o.target_name = "custom";
  o.target_json = matrix_to_json(target);
  o.backend = backend;
  return o;
}

Objective Objective::cnot(Backend backend) {
  Objective o;
  o.kind = ObjectiveKind::cnot_local_class;
  o.target_name = "CNOT";
  o.backend = backend;
  return o;
}

std::string Objective::to_string() const {
  if (kind == ObjectiveKind::cnot_local_class) return "cnot";
  return "gate:" + target_name;
}

template <typename Real>
Matrix<Real> Objective::target() const {
  if (kind == ObjectiveKind::cnot_local_class) return gate_matrix<Real>("CNOT");
  if (target_name == "custom") return matrix_from_json<Real>(target_json);
  return gate_matrix<Real>(target_name);
}

template <typename Real>
Score<Real> score_fast(const Objective& obj, const Matrix<Real>& target, const Matrix<Real>& u) {
  Score<Real> s;
  if (obj.kind == ObjectiveKind::one_qubit_gate) {
    s.distance = global_phase_distance_unchecked(target, u);
    return s;
  }
  const BlockSplit<Real> b = split_blocks(u);
  s.m11_abs = abs(b.m11);
  s.off_block_norm = b.off_block_norm;
  s.admissible = b.off_block_norm <= Real(obj.leakage_tolerance);
  s.distance = cnot_distance_unchecked(b.a);
  return s;
}

template <typename Real>
Score<Real> score_full(const Objective& obj, const Matrix<Real>& target, const Matrix<Real>& u) {
  Score<Real> s = score_fast(obj, target, u);
  if (obj.kind == ObjectiveKind::one_qubit_gate) {
    s.unitarity_defect = unitarity_defect(u);
  } else {
    s.unitarity_defect = unitarity_defect(split_blocks(u).a);
  }
  return s;
}

Json record_to_json(const SearchRecord& r) {
  Json j;
  j["model"] = r.model;
  j["objective"] = r.objective;
  j["word"] = r.letters;
  j["length"] = r.length;
  j["distance"] = r.distance_text;
  j["numerically_zero"] = r.numerically_zero;
  j["distance_native64"] = to_decimal(r.distance_native);
  j["admissible"] = r.admissible;
  if (r.m11_abs) j["m11_abs"] = to_decimal(*r.m11_abs);
  if (r.off_block_norm) j["off_block_norm"] = to_decimal(*r.off_block_norm);
  j["unitarity_defect"] = to_decimal(r.unitarity_defect);
  j["seed"] = r.seed;
  if (r.generation) j["generation"] = *r.generation;
  j["backend"] = r.backend;
  j["method"] = r.method;
  return j;
}

namespace {

template <typename Real>
void rescore_with(std::vector<SearchRecord*>& recs, const EbmSource& source, const Objective& obj,
                  const Backend& backend) {
  const EbmSet<Real> set = source.build<Real>();
  const Matrix<Real> target = obj.target<Real>();
  const Arity arity = set.arity;
  for (SearchRecord* rec : recs) {
    const Matrix<Real> u = braidword_unitary(set, rec->word);
    const Score<Real> s = score_full(obj, target, u);
    rec->distance_text = to_decimal(s.distance);
    rec->distance = to_double(s.distance);
    rec->numerically_zero = s.distance < Real(backend.zero_threshold());
    rec->admissible = s.admissible;
    rec->unitarity_defect = to_double(s.unitarity_defect);
    if (arity == Arity::two_qubit) {
      rec->m11_abs = to_double(s.m11_abs);
      rec->off_block_norm = to_double(s.off_block_norm);
    }
    rec->letters = encode_word(rec->word, arity);
    rec->length = static_cast<int>(rec->word.size());
    rec->backend = backend.to_string();
  }
}

}  // namespace

void rescore_records(std::vector<SearchRecord>& recs, const EbmSource& source, const Objective& obj,
                     const Backend& backend) {
  std::vector<SearchRecord*> ptrs;
  for (auto& r : recs) ptrs.push_back(&r);
  with_backend(backend, [&]<typename Real>() { rescore_with<Real>(ptrs, source, obj, backend); });
}

void rescore_record(SearchRecord& rec, const EbmSource& source, const Objective& obj,
                    const Backend& backend) {
  std::vector<SearchRecord*> ptrs{&rec};
  with_backend(backend, [&]<typename Real>() { rescore_with<Real>(ptrs, source, obj, backend); });
}

bool record_less(const SearchRecord& x, const SearchRecord& y, int generators) {
  if (x.distance != y.distance) return x.distance < y.distance;
  return std::lexicographical_compare(
      x.word.letters.begin(), x.word.letters.end(), y.word.letters.begin(), y.word.letters.end(),
      [generators](Letter a, Letter b) {
        return alphabet_index(a, generators) < alphabet_index(b, generators);
      });
}

template Objective Objective::one_qubit_custom<double>(const Matrix<double>&, Backend);
template Objective Objective::one_qubit_custom<BigFloat>(const Matrix<BigFloat>&, Backend);
template Matrix<double> Objective::target<double>() const;
template Matrix<BigFloat> Objective::target<BigFloat>() const;
template Score<double> score_fast(const Objective&, const Matrix<double>&, const Matrix<double>&);
template Score<BigFloat> score_fast(const Objective&, const Matrix<BigFloat>&,
                                    const Matrix<BigFloat>&);
template Score<double> score_full(const Objective&, const Matrix<double>&, const Matrix<double>&);
template Score<BigFloat> score_full(const Objective&, const Matrix<BigFloat>&,
                                    const Matrix<BigFloat>&);

}  // namespace metabraid
