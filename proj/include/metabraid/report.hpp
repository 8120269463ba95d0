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

#include "metabraid/search.hpp"
#include "metabraid/ska.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace metabraid {

std::string code_version();
/// ISO-8601 UTC, second resolution.
std::string utc_timestamp();

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);

/// Provenance record written next to every result file.
struct RunManifest {
  std::string command_line;
  Json config = Json::object();
  std::uint64_t seed = 0;
  std::string backend;
  std::string version = code_version();
  std::string timestamp = utc_timestamp();
  /// (path, sha256) of every file this run produced.
  std::vector<std::pair<std::string, std::string>> outputs;

  void add_output(const std::string& path);
  Json to_json() const;
  void write(const std::string& path) const;
};

class CsvTable {
 public:
  CsvTable() = default;
  explicit CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row);
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  /// Column index by name; throws std::out_of_range.
  int column(const std::string& name) const;
  const std::string& at(std::size_t row, const std::string& col) const {
    return rows_.at(row).at(column(col));
  }

  /// RFC 4180 quoting, "\n" line ends.
  std::string to_string() const;
  void write(const std::string& path) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Reference values used for the diff columns.

struct ReferenceWord {
  std::string model;
  std::string letters;
  double unitarity_defect = 0;
};

const std::vector<ReferenceWord>& table1_reference();

/// Printed minimum CNOT-class distance for one of the six qubit models, or
/// nullopt outside the tabulated range (3..13 without inverses, 3..7 with).
std::optional<double> reference_min_distance(bool with_inverses, const std::string& model,
                                             int length);

/// "sigma1 differs by pi" / "same" / "sigma2 differs by pi" keyed by the
/// first model of each class.
std::optional<std::string> reference_phase_class(const std::string& first_model);

/// Both tiny (< 1e-30) or within 1% relative.
bool reference_agrees(double value, double reference);

// Reproductions.

struct TableOptions {
  Backend backend = Backend::reporting_default();
  /// 0 selects the default range (10 without inverses, 7 with).
  int max_length = 0;
  int min_length = 3;
  std::uint64_t node_budget = 4'000'000'000ULL;
  int threads = 1;
  /// Empty selects all six qubit models.
  std::vector<std::string> models;
  EbmVariant variant = EbmVariant::derived;
};

struct FigureOptions {
  Backend backend = Backend::reporting_default();
  std::vector<std::uint64_t> seeds{1, 2, 3};
  int threads = 1;
  /// fig2
  int max_level = 3;
  int basic_length = 30;
  std::vector<std::string> gates{"H", "T"};
  /// fig45: exhaustive below the crossover, GA from it up to max_length.
  int max_length = 20;
  int crossover_no_inverses = 10;
  int crossover_inverses = 7;
  std::uint64_t node_budget = 4'000'000'000ULL;
  /// Empty selects the defaults for the figure.
  std::vector<std::string> models;
  /// Externally supplied two-qubit sets (e.g. Fibonacci) added to fig45.
  std::vector<Json> external_sets;
  GAConfig ga;
};

struct Report {
  std::string id;
  CsvTable table;
  bool truncated = false;
  Json config = Json::object();
};

Report run_table(const std::string& table_id, const TableOptions& opt);
Report run_figure(const std::string& fig_id, const FigureOptions& opt);

struct OrderEvaluation {
  ProductOrder order = ProductOrder::left_to_right;
  std::string distance;
  bool numerically_zero = false;
  bool admissible = true;
  std::optional<std::string> m11_abs;
  std::optional<std::string> off_block_norm;
  std::string unitarity_defect;
};

struct VerifyReport {
  std::string model;
  std::string letters;
  std::string objective;
  std::string backend;
  std::vector<OrderEvaluation> orders;

  Json to_json() const;
  std::string to_text() const;
};

/// Evaluates the word under both product orders at obj.backend. Throws
/// std::invalid_argument on an unknown letter.
VerifyReport verify_word(const EbmSource& source, const std::string& letters,
                         const Objective& obj);

}  // namespace metabraid
