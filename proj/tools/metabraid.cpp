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

// metabraid: braidword compiler front end.
//
// Exit status: 0 success, 2 a search budget truncated the result, 1 error.

#include "metabraid/report.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

namespace mb = metabraid;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTruncated = 2;

std::string g_command_line;

int default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

mb::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return mb::Json::parse(in);
}

mb::Backend backend_or_default(const std::string& text) {
  return text.empty() ? mb::Backend::reporting_default() : mb::Backend::parse(text);
}

void add_ga_options(CLI::App* cmd, mb::GAConfig& ga) {
  cmd->add_option("--population", ga.population, "GA population size")->capture_default_str();
  cmd->add_option("--generations", ga.generations, "GA generations per restart")->capture_default_str();
  cmd->add_option("--restarts", ga.restarts, "independent GA restarts")->capture_default_str();
  cmd->add_option("--crossover-rate", ga.crossover_rate, "crossover probability")->capture_default_str();
  cmd->add_option("--mutation-rate", ga.mutation_rate, "per-letter mutation probability")
      ->capture_default_str();
  cmd->add_option("--elite", ga.elite_fraction, "elite fraction")->capture_default_str();
  cmd->add_option("--tournament", ga.tournament_size, "tournament size")->capture_default_str();
}

// Writes <dir>/<stem>.csv and its manifest; returns the CSV path.
std::string write_report(const mb::Report& rep, const std::string& dir, std::uint64_t seed,
                         const std::string& backend) {
  fs::create_directories(dir);
  const std::string csv = (fs::path(dir) / (rep.id + ".csv")).string();
  rep.table.write(csv);
  mb::RunManifest man;
  man.command_line = g_command_line;
  man.config = rep.config;
  man.seed = seed;
  man.backend = backend;
  man.add_output(csv);
  const std::string mpath = (fs::path(dir) / (rep.id + ".manifest.json")).string();
  man.write(mpath);
  std::cerr << "wrote " << csv << " and " << mpath << "\n";
  return csv;
}

void print_csv(const mb::CsvTable& t) { std::cout << t.to_string(); }

}  // namespace

int main(int argc, char** argv) {
  for (int i = 0; i < argc; ++i) {
    if (i) g_command_line += ' ';
    g_command_line += argv[i];
  }

  CLI::App app{"metabraid: braidword compiler for metaplectic anyons"};
  app.require_subcommand(1);
  int status = kExitOk;

  // models ------------------------------------------------------------------
  auto* models = app.add_subcommand("models", "anyon models");
  models->require_subcommand(1);
  auto* models_list = models->add_subcommand("list", "list candidate encodings");
  bool list_json = false;
  models_list->add_flag("--json", list_json, "JSON output");
  models_list->callback([&] {
    const auto candidates = mb::enumerate_candidate_models();
    const auto braidable = mb::filter_braidable(candidates);
    const auto classes = mb::qubit_model_classes();
    auto is_braidable = [&](const mb::ModelSpec& m) {
      return std::find(braidable.begin(), braidable.end(), m) != braidable.end();
    };
    auto class_of = [&](const mb::ModelSpec& m) -> std::string {
      for (const auto& c : classes) {
        if (c.first == m || c.second == m) return c.first.name() + "/" + c.second.name();
      }
      return "";
    };
    if (list_json) {
      mb::Json arr = mb::Json::array();
      for (const auto& m : candidates) {
        arr.push_back({{"model", m.name()},
                       {"channels", {m.channels[0].name(), m.channels[1].name()}},
                       {"braidable", is_braidable(m)},
                       {"excluded_standard", mb::is_excluded_standard_encoding(m)},
                       {"class", class_of(m)}});
      }
      mb::Json classes_json = mb::Json::array();
      for (const auto& c : classes) {
        classes_json.push_back(
            {{"first", c.first.name()}, {"second", c.second.name()}, {"phase_difference", c.phase_difference}});
      }
      std::cout << mb::Json{{"models", arr}, {"classes", classes_json}}.dump(2) << "\n";
      return;
    }
    std::printf("%-8s %-8s %-10s %s\n", "model", "channels", "braidable", "class");
    for (const auto& m : candidates) {
      const std::string ch = m.channels[0].name() + "," + m.channels[1].name();
      std::string cls = class_of(m);
      if (cls.empty() && mb::is_excluded_standard_encoding(m)) cls = "(no H/T)";
      std::printf("%-8s %-8s %-10s %s\n", m.name().c_str(), ch.c_str(),
                  is_braidable(m) ? "yes" : "no", cls.c_str());
    }
    std::printf("\n%zu candidates, %zu braidable\n", candidates.size(), braidable.size());
    for (const auto& c : classes) {
      std::printf("%s/%s: %s\n", c.first.name().c_str(), c.second.name().c_str(),
                  c.phase_difference.c_str());
    }
  });

  auto* models_dump = models->add_subcommand("dump", "model spec with the SO(3)_2 F/R tables");
  std::string dump_model = "V113_3";
  models_dump->add_option("--model", dump_model, "model name")->capture_default_str();
  models_dump->callback([&] {
    const mb::ModelSpec m = mb::ModelSpec::parse(dump_model);
    const auto& fr = mb::FRTable::so3_2();
    mb::Json j;
    j["model"] = m.name();
    j["initial"] = {m.initial[0].name(), m.initial[1].name(), m.initial[2].name()};
    j["total_charge"] = m.total_charge.name();
    j["channels"] = {m.channels[0].name(), m.channels[1].name()};
    mb::Json fj = mb::Json::object();
    for (const auto& [key, blk] : fr.f_entries()) {
      mb::Json e;
      e["rows"] = blk.row_labels;
      e["cols"] = blk.col_labels;
      mb::Json ent = mb::Json::array();
      for (const auto& row : blk.entries) {
        ent.push_back({row[0].to_string(), row[1].to_string()});
      }
      e["entries"] = ent;
      e["inferred"] = blk.inferred;
      fj[key.to_string()] = e;
    }
    mb::Json rj = mb::Json::object();
    for (const auto& [key, k] : fr.r_entries()) rj[key.to_string()] = std::to_string(k) + "*pi/12";
    j["f"] = fj;
    j["r"] = rj;
    std::cout << j.dump(2) << "\n";
  });

  // ebm dump ----------------------------------------------------------------
  auto* ebm = app.add_subcommand("ebm", "elementary braid matrices");
  ebm->require_subcommand(1);
  auto* ebm_dump = ebm->add_subcommand("dump", "print an EBM set as JSON");
  std::string ebm_model = "V113_3", ebm_arity = "two", ebm_variant = "derived", ebm_backend = "native64";
  ebm_dump->add_option("--model", ebm_model, "model name or fibonacci")->capture_default_str();
  ebm_dump->add_option("--arity", ebm_arity, "one or two")->capture_default_str();
  ebm_dump->add_option("--variant", ebm_variant, "derived or printed")->capture_default_str();
  ebm_dump->add_option("--backend", ebm_backend, "native64 or bigfloat[:bits]")->capture_default_str();
  ebm_dump->callback([&] {
    const mb::Arity arity = mb::parse_arity(ebm_arity);
    const mb::EbmVariant variant = mb::parse_variant(ebm_variant);
    const mb::Json j = mb::with_backend(mb::Backend::parse(ebm_backend), [&]<typename Real>() {
      return mb::ebm_set_to_json(mb::make_ebm_set<Real>(ebm_model, arity, variant));
    });
    std::cout << j.dump(2) << "\n";
  });

  // compile -----------------------------------------------------------------
  auto* compile = app.add_subcommand("compile", "GA-seeded Solovay-Kitaev compilation of a 1-qubit gate");
  mb::SKAConfig ska_cfg;
  std::string gate = "H", target_file, cache_path, compile_out;
  ska_cfg.ga.threads = default_threads();
  compile->add_option("--model", ska_cfg.model, "model name or fibonacci")->capture_default_str();
  compile->add_option("--gate", gate, "H, T or I2")->capture_default_str();
  compile->add_option("--target", target_file, "JSON 2x2 target matrix (overrides --gate)");
  compile->add_option("--level", ska_cfg.max_level, "maximum recursion level")->capture_default_str();
  compile->add_option("--basic-length", ska_cfg.basic_length, "level-0 word length")->capture_default_str();
  compile->add_option("--seed", ska_cfg.ga.seed, "GA seed")->capture_default_str();
  compile->add_option("--threads", ska_cfg.ga.threads, "fitness workers");
  compile->add_option("--cache", cache_path, "JSON cache of compiled words");
  compile->add_option("--out", compile_out, "write per-level CSV and manifest to this directory");
  add_ga_options(compile, ska_cfg.ga);
  compile->callback([&] {
    const std::string target_name = target_file.empty() ? gate : fs::path(target_file).stem().string();
    const mb::Matrix<double> target = target_file.empty()
                                          ? mb::gate_matrix<double>(gate)
                                          : mb::matrix_from_json<double>(read_json_file(target_file));
    mb::SKACache cache;
    if (!cache_path.empty()) cache.load(cache_path);
    const std::string key = mb::SKACache::key(ska_cfg.model, target_name, ska_cfg.basic_length,
                                              ska_cfg.ga.seed, ska_cfg.max_level);
    mb::Report rep;
    rep.id = "compile_" + ska_cfg.model + "_" + target_name;
    rep.table = mb::CsvTable({"model", "gate", "seed", "level", "word_length", "distance", "word"});
    rep.config = ska_cfg.to_json();
    if (!cache_path.empty() && cache.has(key)) {
      for (const auto& row : cache.get(key)) {
        rep.table.add_row(row.get<std::vector<std::string>>());
      }
    } else {
      mb::SolovayKitaev ska(ska_cfg);
      for (const auto& a : ska.compile(target)) {
        rep.table.add_row({ska_cfg.model, target_name, std::to_string(ska_cfg.ga.seed),
                           std::to_string(a.level), std::to_string(a.word.size()),
                           mb::to_decimal(a.distance), mb::encode_word(a.word, mb::Arity::one_qubit)});
      }
      if (!cache_path.empty()) {
        cache.put(key, rep.table.rows());
        cache.save(cache_path);
      }
    }
    for (std::size_t i = 0; i < rep.table.rows().size(); ++i) {
      std::printf("level %s  length %6s  distance %s\n", rep.table.at(i, "level").c_str(),
                  rep.table.at(i, "word_length").c_str(), rep.table.at(i, "distance").c_str());
    }
    if (!compile_out.empty()) write_report(rep, compile_out, ska_cfg.ga.seed, "native64");
  });

  // ga-search ---------------------------------------------------------------
  auto* ga_cmd = app.add_subcommand("ga-search", "genetic search for one word length");
  mb::GAConfig ga_cfg;
  ga_cfg.threads = default_threads();
  std::string ga_model = "V113_3", ga_objective = "cnot", ga_backend, ga_ebm_json;
  bool ga_no_inverses = false, ga_trace = false;
  ga_cmd->add_option("--model", ga_model, "model name or fibonacci")->capture_default_str();
  ga_cmd->add_option("--objective", ga_objective, "cnot or a gate name (H, T)")->capture_default_str();
  ga_cmd->add_option("--length", ga_cfg.word_length, "word length")->capture_default_str();
  ga_cmd->add_option("--seed", ga_cfg.seed, "seed")->capture_default_str();
  ga_cmd->add_option("--threads", ga_cfg.threads, "fitness workers");
  ga_cmd->add_option("--backend", ga_backend, "backend for the reported value");
  ga_cmd->add_option("--ebm-json", ga_ebm_json, "external two-qubit EBM set");
  ga_cmd->add_flag("--no-inverses", ga_no_inverses, "generators only");
  ga_cmd->add_flag("--trace", ga_trace, "include per-generation best/mean fitness");
  add_ga_options(ga_cmd, ga_cfg);
  ga_cmd->callback([&] {
    const mb::Backend backend = backend_or_default(ga_backend);
    const bool cnot = ga_objective == "cnot";
    mb::EbmSource src{ga_model, cnot ? mb::Arity::two_qubit : mb::Arity::one_qubit,
                      mb::EbmVariant::derived, std::nullopt};
    if (!ga_ebm_json.empty()) src.external = read_json_file(ga_ebm_json);
    const mb::Objective obj = cnot ? mb::Objective::cnot(backend) : mb::Objective::one_qubit(ga_objective, backend);
    ga_cfg.use_inverses = !ga_no_inverses;
    const mb::GAResult res = mb::ga_search(ga_cfg, src, obj);
    mb::Json j = mb::record_to_json(res.best);
    j["config"] = ga_cfg.to_json();
    if (ga_trace) {
      mb::Json tr = mb::Json::array();
      for (const auto& p : res.trace) tr.push_back({p.restart, p.generation, p.best, p.mean});
      j["trace"] = tr;
    }
    std::cout << j.dump(2) << "\n";
  });

  // search-cnot -------------------------------------------------------------
  auto* search = app.add_subcommand("search-cnot", "exhaustive search for the CNOT class");
  mb::SearchConfig scfg;
  scfg.threads = default_threads();
  std::string s_model = "V113_3", s_backend, s_variant = "derived", s_ebm_json;
  search->add_option("--model", s_model, "model name")->capture_default_str();
  search->add_option("--min-len", scfg.min_len, "shortest length")->capture_default_str();
  search->add_option("--max-len", scfg.max_len, "longest length")->capture_default_str();
  search->add_flag("--inverses", scfg.use_inverses, "include inverse generators");
  search->add_option("--top-k", scfg.keep_top_k, "words kept per length")->capture_default_str();
  search->add_option("--threads", scfg.threads, "worker threads");
  search->add_option("--node-budget", scfg.node_budget, "total words visited before truncation")
      ->capture_default_str();
  search->add_option("--backend", s_backend, "backend for rescoring survivors");
  search->add_option("--variant", s_variant, "derived or printed")->capture_default_str();
  search->add_option("--ebm-json", s_ebm_json, "external two-qubit EBM set");
  search->callback([&] {
    const mb::Backend backend = backend_or_default(s_backend);
    scfg.source = {s_model, mb::Arity::two_qubit, mb::parse_variant(s_variant), std::nullopt};
    if (!s_ebm_json.empty()) scfg.source.external = read_json_file(s_ebm_json);
    const mb::SearchResult res = mb::exhaustive_search(scfg, mb::Objective::cnot(backend));
    mb::CsvTable t({"length", "rank", "word", "distance", "numerically_zero", "m11_abs",
                    "unitarity_defect", "words", "truncated"});
    for (const auto& lr : res.per_length) {
      if (lr.top.empty()) {
        t.add_row({std::to_string(lr.length), "", "", "", "", "", "", std::to_string(lr.nodes),
                   lr.truncated ? "true" : "false"});
      }
      for (std::size_t i = 0; i < lr.top.size(); ++i) {
        const auto& r = lr.top[i];
        t.add_row({std::to_string(lr.length), std::to_string(i + 1), r.letters, r.distance_text,
                   r.numerically_zero ? "true" : "false", r.m11_abs ? mb::to_decimal(*r.m11_abs) : "",
                   mb::to_decimal(r.unitarity_defect), std::to_string(lr.nodes),
                   lr.truncated ? "true" : "false"});
      }
    }
    print_csv(t);
    if (res.truncated) status = kExitTruncated;
  });

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "evaluate a braidword under both product orders");
  std::string v_model = "V113_3", v_word, v_backend, v_gate = "H", v_ebm_json, v_variant = "derived";
  bool v_json = false;
  verify->add_option("--model", v_model, "model name or fibonacci")->capture_default_str();
  verify->add_option("--word", v_word, "letters: A..J two-qubit, a/b/A/B one-qubit")->required();
  verify->add_option("--backend", v_backend, "native64 or bigfloat[:bits]");
  verify->add_option("--gate", v_gate, "target for one-qubit words")->capture_default_str();
  verify->add_option("--variant", v_variant, "derived or printed")->capture_default_str();
  verify->add_option("--ebm-json", v_ebm_json, "external two-qubit EBM set");
  verify->add_flag("--json", v_json, "JSON output");
  verify->callback([&] {
    const mb::Backend backend = backend_or_default(v_backend);
    const bool one_qubit =
        !v_word.empty() && std::all_of(v_word.begin(), v_word.end(),
                                       [](char c) { return c == 'a' || c == 'b' || c == 'A' || c == 'B'; }) &&
        v_word.find_first_of("ab") != std::string::npos;
    mb::EbmSource src{v_model, one_qubit ? mb::Arity::one_qubit : mb::Arity::two_qubit,
                      mb::parse_variant(v_variant), std::nullopt};
    if (!v_ebm_json.empty()) src.external = read_json_file(v_ebm_json);
    const mb::Objective obj =
        one_qubit ? mb::Objective::one_qubit(v_gate, backend) : mb::Objective::cnot(backend);
    const mb::VerifyReport rep = mb::verify_word(src, v_word, obj);
    std::cout << (v_json ? rep.to_json().dump(2) + "\n" : rep.to_text());
  });

  // run-table / run-figure ----------------------------------------------------
  auto* run_table = app.add_subcommand("run-table", "reproduce a results table as CSV");
  std::string table_id, t_backend, t_out = "results", t_variant = "derived";
  mb::TableOptions topt;
  topt.threads = default_threads();
  run_table->add_option("table", table_id, "table1, table2, table3 or table4")->required();
  run_table->add_option("--backend", t_backend, "reporting backend");
  run_table->add_option("--max-length", topt.max_length, "longest length (0: 10 for table3, 7 for table4)")
      ->capture_default_str();
  run_table->add_option("--min-length", topt.min_length, "shortest length")->capture_default_str();
  run_table->add_option("--node-budget", topt.node_budget, "total words visited per model")
      ->capture_default_str();
  run_table->add_option("--threads", topt.threads, "worker threads");
  run_table->add_option("--models", topt.models, "subset of models");
  run_table->add_option("--variant", t_variant, "derived or printed")->capture_default_str();
  run_table->add_option("--out-dir", t_out, "output directory")->capture_default_str();
  run_table->callback([&] {
    topt.backend = backend_or_default(t_backend);
    topt.variant = mb::parse_variant(t_variant);
    const mb::Report rep = mb::run_table(table_id, topt);
    print_csv(rep.table);
    write_report(rep, t_out, 0, topt.backend.to_string());
    if (rep.truncated) status = kExitTruncated;
  });

  auto* run_figure = app.add_subcommand("run-figure", "regenerate plot data as CSV");
  std::string fig_id, f_backend, f_out = "results";
  std::vector<std::string> f_ebm_json;
  mb::FigureOptions fopt;
  fopt.threads = default_threads();
  run_figure->add_option("figure", fig_id, "fig2 or fig45")->required();
  run_figure->add_option("--seeds", fopt.seeds, "GA seeds")->delimiter(',');
  run_figure->add_option("--backend", f_backend, "reporting backend");
  run_figure->add_option("--threads", fopt.threads, "worker threads");
  run_figure->add_option("--models", fopt.models, "subset of models");
  run_figure->add_option("--gates", fopt.gates, "fig2 targets")->delimiter(',');
  run_figure->add_option("--max-level", fopt.max_level, "fig2 maximum SKA level")->capture_default_str();
  run_figure->add_option("--basic-length", fopt.basic_length, "fig2 level-0 length")->capture_default_str();
  run_figure->add_option("--max-length", fopt.max_length, "fig45 longest word")->capture_default_str();
  run_figure->add_option("--crossover", fopt.crossover_no_inverses,
                         "fig45 first GA length without inverses")->capture_default_str();
  run_figure->add_option("--crossover-inverses", fopt.crossover_inverses,
                         "fig45 first GA length with inverses")->capture_default_str();
  run_figure->add_option("--node-budget", fopt.node_budget, "fig45 exhaustive budget")->capture_default_str();
  run_figure->add_option("--ebm-json", f_ebm_json, "external two-qubit EBM sets for fig45");
  run_figure->add_option("--out-dir", f_out, "output directory")->capture_default_str();
  add_ga_options(run_figure, fopt.ga);
  run_figure->callback([&] {
    fopt.backend = backend_or_default(f_backend);
    for (const auto& p : f_ebm_json) fopt.external_sets.push_back(read_json_file(p));
    const mb::Report rep = mb::run_figure(fig_id, fopt);
    write_report(rep, f_out, fopt.seeds.empty() ? 0 : fopt.seeds.front(), fopt.backend.to_string());
    std::cout << rep.table.to_string();
    if (rep.truncated) status = kExitTruncated;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return status;
}
