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

#include "json.hpp"

namespace metabraid {

using Json = nlohmann::ordered_json;

/// Array of rows, each an array of [re, im] decimal strings.
template <typename Real>
Json matrix_to_json(const Matrix<Real>& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.dim(); ++c) {
      row.push_back(Json::array({to_decimal(m(r, c).re), to_decimal(m(r, c).im)}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Inverse of matrix_to_json. Numbers are accepted in place of strings.
template <typename Real>
Matrix<Real> matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix JSON must be a nonempty array");
  const int n = static_cast<int>(j.size());
  Matrix<Real> m(n);
  auto parse = [](const Json& v) -> Real {
    if (v.is_string()) return from_decimal<Real>(v.get<std::string>());
    if (v.is_number()) return Real(v.get<double>());
    throw std::invalid_argument("matrix entry must be a decimal string or number");
  };
  for (int r = 0; r < n; ++r) {
    const Json& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw DimensionError("matrix JSON row " + std::to_string(r) + " has wrong length");
    }
    for (int c = 0; c < n; ++c) {
      const Json& z = row.at(c);
      if (!z.is_array() || z.size() != 2) {
        throw std::invalid_argument("matrix entry must be a [re, im] pair");
      }
      m(r, c) = {parse(z[0]), parse(z[1])};
    }
  }
  return m;
}

}  // namespace metabraid
