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

#include "metabraid/report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iterator>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#ifndef METABRAID_VERSION
#define METABRAID_VERSION "unknown"
#endif

namespace metabraid {

std::string code_version() { return METABRAID_VERSION; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  return sha256_hex(std::string(std::istreambuf_iterator<char>(in), {}));
}

void RunManifest::add_output(const std::string& path) { outputs.emplace_back(path, sha256_file(path)); }

Json RunManifest::to_json() const {
  Json j;
  j["command_line"] = command_line;
  j["config"] = config;
  j["seed"] = seed;
  j["backend"] = backend;
  j["version"] = version;
  j["timestamp"] = timestamp;
  Json outs = Json::array();
  for (const auto& [path, digest] : outputs) outs.push_back({{"path", path}, {"sha256", digest}});
  j["outputs"] = outs;
  return j;
}

void RunManifest::write(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json().dump(2) << "\n";
}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw std::invalid_argument("CSV row has " + std::to_string(row.size()) + " fields, header has " +
                                std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

int CsvTable::column(const std::string& name) const {
  auto it = std::find(header_.begin(), header_.end(), name);
  if (it == header_.end()) throw std::out_of_range("no CSV column " + name);
  return static_cast<int>(it - header_.begin());
}

namespace {

void put_field(std::string& out, const std::string& f) {
  if (f.find_first_of(",\"\n\r") == std::string::npos) {
    out += f;
    return;
  }
  out += '"';
  for (char ch : f) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
}

void put_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    put_field(out, row[i]);
  }
  out += '\n';
}

}  // namespace

std::string CsvTable::to_string() const {
  std::string out;
  put_row(out, header_);
  for (const auto& r : rows_) put_row(out, r);
  return out;
}

void CsvTable::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_string();
}

// ---------------------------------------------------------------------------
// Reference data

const std::vector<ReferenceWord>& table1_reference() {
  static const std::vector<ReferenceWord> rows = {
      {"V113_3", "BBIFBDAAHFJBAHBHBBJA", 4.629e-15},
      {"V131_3", "GFEAGJCBAAHHBCBBBJBJ", 4.586e-15},
      {"V133_1", "DGIGJHBFBEFFCBFBHBFE", 2.554e-15},
  };
  return rows;
}

namespace {

const std::array<const char*, 6> kRefModels = {"V113_3", "V331_1", "V131_3",
                                               "V313_1", "V311_3", "V133_1"};

// Lengths 3..13.
const std::array<std::array<double, 6>, 11> kMinNoInverses = {{
    {5, 5, 5, 5, 5, 5},
    {5, 5, 5, 5, 5, 5},
    {5, 5, 5, 5, 5, 5},
    {5, 5, 5, 5, 5, 5},
    {1.28e-33, 5, 2.70e-35, 1.83e-32, 5, 5},
    {1.23e-32, 5, 1.23e-32, 1.23e-32, 5, 5},
    {1.23e-32, 5, 1.23e-32, 1.23e-32, 5, 5},
    {9.46e-63, 1.79, 1.16e-62, 2.57e-62, 2.48e-32, 1.98e-31},
    {1.23e-32, 3.11e-3, 1.23e-32, 1.23e-32, 1.23e-32, 1.23e-32},
    {3.26e-35, 9.80e-6, 3.08e-36, 3.24e-34, 1.23e-32, 1.23e-32},
    {3.75e-43, 2.36e-8, 1.24e-43, 2.38e-43, 7.24e-37, 4.00e-38},
}};

// Lengths 3..7.
const std::array<std::array<double, 6>, 5> kMinInverses = {{
    {5, 5, 5, 5, 5, 5},
    {5, 5, 5, 5, 5, 5},
    {5, 5, 5, 5, 5, 5},
    {1.23e-32, 5, 5, 5.00e-5, 5, 5},
    {2.37e-37, 4.40, 2.70e-35, 1.23e-32, 5, 5},
}};

}  // namespace

std::optional<double> reference_min_distance(bool with_inverses, const std::string& model,
                                             int length) {
  auto it = std::find(kRefModels.begin(), kRefModels.end(), model);
  if (it == kRefModels.end()) return std::nullopt;
  const auto col = static_cast<std::size_t>(it - kRefModels.begin());
  const int row = length - 3;
  if (row < 0) return std::nullopt;
  if (with_inverses) {
    if (row >= static_cast<int>(kMinInverses.size())) return std::nullopt;
    return kMinInverses[row][col];
  }
  if (row >= static_cast<int>(kMinNoInverses.size())) return std::nullopt;
  return kMinNoInverses[row][col];
}

std::optional<std::string> reference_phase_class(const std::string& first_model) {
  static const std::map<std::string, std::string> ref = {
      {"V113_3", "sigma1 differs by pi"},
      {"V131_3", "same"},
      {"V311_3", "sigma2 differs by pi"},
  };
  auto it = ref.find(first_model);
  if (it == ref.end()) return std::nullopt;
  return it->second;
}

bool reference_agrees(double value, double reference) {
  constexpr double kTiny = 1e-30;
  if (value < kTiny && reference < kTiny) return true;
  return std::abs(value - reference) <= 1e-2 * std::abs(reference);
}

// ---------------------------------------------------------------------------
// Word evaluation

namespace {

std::string fmt_short(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

OrderEvaluation evaluate_word(const EbmSource& source, const Objective& obj, const BraidWord& word,
                              ProductOrder order, const Backend& backend) {
  return with_backend(backend, [&]<typename Real>() {
    const EbmSet<Real> set = source.build<Real>();
    const Matrix<Real> u = braidword_unitary(set, word, order);
    const Score<Real> s = score_full(obj, obj.target<Real>(), u);
    OrderEvaluation e;
    e.order = order;
    e.distance = to_decimal(s.distance);
    e.numerically_zero = s.distance < Real(backend.zero_threshold());
    e.admissible = s.admissible;
    e.unitarity_defect = to_decimal(s.unitarity_defect);
    if (set.arity == Arity::two_qubit) {
      e.m11_abs = to_decimal(s.m11_abs);
      e.off_block_norm = to_decimal(s.off_block_norm);
    }
    return e;
  });
}

}  // namespace

VerifyReport verify_word(const EbmSource& source, const std::string& letters,
                         const Objective& obj) {
  const BraidWord word = decode_word(letters, source.arity);
  if ((source.arity == Arity::two_qubit) != (obj.kind == ObjectiveKind::cnot_local_class)) {
    throw std::invalid_argument("objective " + obj.to_string() + " does not match a " +
                                to_string(source.arity) + " word");
  }
  VerifyReport rep;
  rep.model = source.name();
  rep.letters = letters;
  rep.objective = obj.to_string();
  rep.backend = obj.backend.to_string();
  for (ProductOrder order : {ProductOrder::left_to_right, ProductOrder::right_to_left}) {
    rep.orders.push_back(evaluate_word(source, obj, word, order, obj.backend));
  }
  return rep;
}

Json VerifyReport::to_json() const {
  Json j;
  j["model"] = model;
  j["word"] = letters;
  j["objective"] = objective;
  j["backend"] = backend;
  Json arr = Json::array();
  for (const auto& e : orders) {
    Json o;
    o["order"] = to_string(e.order);
    o["distance"] = e.distance;
    o["numerically_zero"] = e.numerically_zero;
    o["admissible"] = e.admissible;
    if (e.m11_abs) o["m11_abs"] = *e.m11_abs;
    if (e.off_block_norm) o["off_block_norm"] = *e.off_block_norm;
    o["unitarity_defect"] = e.unitarity_defect;
    arr.push_back(o);
  }
  j["orders"] = arr;
  return j;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << "model      " << model << "\n"
     << "word       " << letters << " (length " << letters.size() << ")\n"
     << "objective  " << objective << "\n"
     << "backend    " << backend << "\n";
  for (const auto& e : orders) {
    os << "[" << to_string(e.order) << "]\n"
       << "  distance          " << e.distance << (e.numerically_zero ? "  (numerically zero)" : "")
       << "\n";
    if (e.m11_abs) os << "  |M11|             " << *e.m11_abs << "\n";
    if (e.off_block_norm) {
      os << "  off-block norm    " << *e.off_block_norm << (e.admissible ? "" : "  (leaks)") << "\n";
    }
    os << "  unitarity defect  " << e.unitarity_defect << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Tables

namespace {

std::vector<std::string> default_models(const std::vector<std::string>& requested) {
  if (!requested.empty()) return requested;
  std::vector<std::string> out;
  for (const auto& m : qubit_models()) out.push_back(m.name());
  return out;
}

Report table1(const TableOptions& opt) {
  const Backend native = Backend::native();
  const std::string b = opt.backend.to_string();
  Report rep;
  rep.id = "table1";
  rep.table = CsvTable({"model", "word", "order", "distance_native64", "distance_" + b,
                        "numerically_zero", "m11_abs_native64", "m11_abs_" + b,
                        "unitarity_defect_native64", "unitarity_defect_" + b, "reference_distance",
                        "reference_unitarity_defect", "diff_unitarity_defect"});
  for (const auto& ref : table1_reference()) {
    const EbmSource src{ref.model, Arity::two_qubit, opt.variant, std::nullopt};
    const BraidWord word = decode_word(ref.letters, Arity::two_qubit);
    for (ProductOrder order : {ProductOrder::left_to_right, ProductOrder::right_to_left}) {
      const OrderEvaluation lo = evaluate_word(src, Objective::cnot(native), word, order, native);
      const OrderEvaluation hi =
          evaluate_word(src, Objective::cnot(opt.backend), word, order, opt.backend);
      const double ud = std::stod(lo.unitarity_defect);
      rep.table.add_row({ref.model, ref.letters, to_string(order), lo.distance, hi.distance,
                         yes_no(hi.numerically_zero), *lo.m11_abs, *hi.m11_abs, lo.unitarity_defect,
                         hi.unitarity_defect, "0", fmt_short(ref.unitarity_defect),
                         fmt_short(ud - ref.unitarity_defect)});
    }
  }
  return rep;
}

Report table2() {
  Report rep;
  rep.id = "table2";
  rep.table = CsvTable({"first", "second", "phase_difference", "reference", "agrees"});
  for (const auto& cls : qubit_model_classes()) {
    const auto ref = reference_phase_class(cls.first.name());
    rep.table.add_row({cls.first.name(), cls.second.name(), cls.phase_difference, ref.value_or(""),
                       yes_no(ref && *ref == cls.phase_difference)});
  }
  return rep;
}

Report exhaustive_table(const std::string& id, bool with_inverses, const TableOptions& opt) {
  const int max_len = opt.max_length > 0 ? opt.max_length : (with_inverses ? 7 : 10);
  const std::string b = opt.backend.to_string();
  Report rep;
  rep.id = id;
  rep.table = CsvTable({"model", "length", "min_distance_native64", "min_distance_" + b,
                        "numerically_zero", "best_word", "words", "admissible_words", "reference",
                        "diff", "agrees", "truncated"});
  const Objective obj = Objective::cnot(opt.backend);
  for (const auto& model : default_models(opt.models)) {
    SearchConfig cfg;
    cfg.source = {model, Arity::two_qubit, opt.variant, std::nullopt};
    cfg.use_inverses = with_inverses;
    cfg.min_len = opt.min_length;
    cfg.max_len = max_len;
    cfg.keep_top_k = 1;
    cfg.threads = opt.threads;
    cfg.node_budget = opt.node_budget;
    const SearchResult res = exhaustive_search(cfg, obj);
    rep.truncated = rep.truncated || res.truncated;
    for (const auto& lr : res.per_length) {
      const auto ref = reference_min_distance(with_inverses, model, lr.length);
      const std::string ref_s = ref ? fmt_short(*ref) : "";
      if (lr.truncated || lr.top.empty()) {
        rep.table.add_row({model, std::to_string(lr.length), "", "", "", "",
                           std::to_string(lr.nodes), std::to_string(lr.admissible), ref_s, "", "",
                           yes_no(lr.truncated)});
        continue;
      }
      const SearchRecord& best = lr.top.front();
      rep.table.add_row({model, std::to_string(lr.length), to_decimal(best.distance_native),
                         best.distance_text, yes_no(best.numerically_zero), best.letters,
                         std::to_string(lr.nodes), std::to_string(lr.admissible), ref_s,
                         ref ? fmt_short(best.distance - *ref) : "",
                         ref ? yes_no(reference_agrees(best.distance, *ref)) : "", "false"});
    }
  }
  Json c;
  c["max_length"] = max_len;
  c["min_length"] = opt.min_length;
  c["inverses"] = with_inverses;
  c["node_budget"] = opt.node_budget;
  rep.config = c;
  return rep;
}

}  // namespace

Report run_table(const std::string& table_id, const TableOptions& opt) {
  Report rep;
  if (table_id == "table1") {
    rep = table1(opt);
  } else if (table_id == "table2") {
    rep = table2();
  } else if (table_id == "table3") {
    rep = exhaustive_table(table_id, false, opt);
  } else if (table_id == "table4") {
    rep = exhaustive_table(table_id, true, opt);
  } else {
    throw std::invalid_argument("unknown table '" + table_id + "' (table1..table4)");
  }
  rep.config["table"] = table_id;
  rep.config["backend"] = opt.backend.to_string();
  rep.config["variant"] = to_string(opt.variant);
  return rep;
}

// ---------------------------------------------------------------------------
// Figures

namespace {

Report fig2(const FigureOptions& opt) {
  std::vector<std::string> models = opt.models;
  if (models.empty()) models = {"V113_3", "V131_3", "V133_1", "fibonacci"};
  Report rep;
  rep.id = "fig2";
  rep.table = CsvTable({"model", "gate", "seed", "level", "word_length", "distance", "word"});
  for (const auto& model : models) {
    for (const auto& gate : opt.gates) {
      for (std::uint64_t seed : opt.seeds) {
        SKAConfig cfg;
        cfg.model = model;
        cfg.basic_length = opt.basic_length;
        cfg.max_level = opt.max_level;
        cfg.ga = opt.ga;
        cfg.ga.seed = seed;
        cfg.ga.threads = opt.threads;
        SolovayKitaev ska(cfg);
        const auto levels = ska.compile(gate_matrix<double>(gate));
        for (const auto& a : levels) {
          rep.table.add_row({model, gate, std::to_string(seed), std::to_string(a.level),
                             std::to_string(a.word.size()), to_decimal(a.distance),
                             encode_word(a.word, Arity::one_qubit)});
        }
      }
    }
  }
  SKAConfig proto;
  proto.basic_length = opt.basic_length;
  proto.max_level = opt.max_level;
  proto.ga = opt.ga;
  rep.config["ska"] = proto.to_json();
  return rep;
}

void fig45_rows(Report& rep, const EbmSource& src, bool inverses, const FigureOptions& opt) {
  const Objective obj = Objective::cnot(opt.backend);
  const int crossover = inverses ? opt.crossover_inverses : opt.crossover_no_inverses;
  const std::string name = src.name();
  auto add = [&](const SearchRecord& r, int length, const std::string& method) {
    const auto ref = reference_min_distance(inverses, name, length);
    rep.table.add_row({name, yes_no(inverses), std::to_string(length), method, r.letters,
                       to_decimal(r.distance_native), r.distance_text, yes_no(r.numerically_zero),
                       r.m11_abs ? to_decimal(*r.m11_abs) : "",
                       to_decimal(r.unitarity_defect), yes_no(r.admissible),
                       ref ? fmt_short(*ref) : ""});
  };

  const int exhaustive_max = std::min(crossover - 1, opt.max_length);
  if (exhaustive_max >= 1) {
    SearchConfig cfg;
    cfg.source = src;
    cfg.use_inverses = inverses;
    cfg.min_len = 1;
    cfg.max_len = exhaustive_max;
    cfg.keep_top_k = 1;
    cfg.threads = opt.threads;
    cfg.node_budget = opt.node_budget;
    const SearchResult res = exhaustive_search(cfg, obj);
    rep.truncated = rep.truncated || res.truncated;
    for (const auto& lr : res.per_length) {
      if (lr.top.empty()) continue;
      add(lr.top.front(), lr.length, lr.truncated ? "exhaustive-truncated" : "exhaustive");
    }
  }
  for (int len = std::max(crossover, 1); len <= opt.max_length; ++len) {
    std::optional<SearchRecord> best;
    for (std::uint64_t seed : opt.seeds) {
      GAConfig ga = opt.ga;
      ga.word_length = len;
      ga.use_inverses = inverses;
      ga.seed = seed;
      ga.threads = opt.threads;
      const GAResult res = ga_search(ga, src, obj);
      if (!best || res.best.distance < best->distance) best = res.best;
    }
    add(*best, len, "ga");
  }
}

Report fig45(const FigureOptions& opt) {
  std::vector<std::string> models = opt.models;
  if (models.empty()) models = {"V113_3", "V131_3", "V133_1"};
  Report rep;
  rep.id = "fig45";
  rep.table = CsvTable({"model", "inverses", "length", "method", "word", "distance_native64",
                        "distance_" + opt.backend.to_string(), "numerically_zero", "m11_abs",
                        "unitarity_defect", "admissible", "reference"});
  std::vector<EbmSource> sources;
  for (const auto& m : models) sources.push_back({m, Arity::two_qubit, EbmVariant::derived, std::nullopt});
  for (const auto& ext : opt.external_sets) sources.push_back({"", Arity::two_qubit, EbmVariant::derived, ext});
  for (bool inverses : {false, true}) {
    for (const auto& src : sources) fig45_rows(rep, src, inverses, opt);
  }
  rep.config["max_length"] = opt.max_length;
  rep.config["crossover_no_inverses"] = opt.crossover_no_inverses;
  rep.config["crossover_inverses"] = opt.crossover_inverses;
  rep.config["node_budget"] = opt.node_budget;
  rep.config["ga"] = opt.ga.to_json();
  return rep;
}

}  // namespace

Report run_figure(const std::string& fig_id, const FigureOptions& opt) {
  Report rep;
  if (fig_id == "fig2") {
    rep = fig2(opt);
  } else if (fig_id == "fig45") {
    rep = fig45(opt);
  } else {
    throw std::invalid_argument("unknown figure '" + fig_id + "' (fig2, fig45)");
  }
  rep.config["figure"] = fig_id;
  rep.config["backend"] = opt.backend.to_string();
  rep.config["seeds"] = opt.seeds;
  return rep;
}

}  // namespace metabraid
