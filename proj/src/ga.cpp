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

#include "metabraid/ga.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace metabraid {

namespace {

constexpr std::uint64_t kInitStream = 0x1e1e1e1e1e1e1e1eULL;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream: the i-th draw is splitmix64(key + i * golden).
class CounterStream {
 public:
  using result_type = std::uint64_t;
  explicit CounterStream(std::uint64_t key) : state_(key) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

void evaluate(Population& pop, std::size_t from, const FitnessFn& fitness, int threads) {
  const std::size_t n = pop.size();
  if (from >= n) return;
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < n; i += step) pop[i].fitness = fitness(pop[i].genes);
  };
  const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(n - from)));
  if (nthreads == 1) {
    work(from, 1);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, from + t, nthreads);
  for (auto& th : pool) th.join();
}

Population random_population(const GAConfig& cfg, int alphabet, std::uint64_t key) {
  Population pop(cfg.population);
  for (int i = 0; i < cfg.population; ++i) {
    CounterStream rng(derive_seed(key, kInitStream, static_cast<std::uint64_t>(i)));
    std::uniform_int_distribution<int> letter(0, alphabet - 1);
    pop[i].genes.resize(cfg.word_length);
    for (auto& g : pop[i].genes) g = static_cast<std::uint8_t>(letter(rng));
  }
  return pop;
}

double mean_fitness(const Population& pop) {
  double s = 0;
  for (const auto& ind : pop) s += ind.fitness;
  return s / static_cast<double>(pop.size());
}

}  // namespace

void GAConfig::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("GA config: " + what); };
  if (word_length < 1) fail("word_length must be >= 1");
  if (population < 2) fail("population must be >= 2");
  if (generations < 0) fail("generations must be >= 0");
  if (crossover_rate < 0 || crossover_rate > 1) fail("crossover_rate must be in [0, 1]");
  if (mutation_rate < 0 || mutation_rate > 1) fail("mutation_rate must be in [0, 1]");
  if (elite_fraction < 0 || elite_fraction > 1 || elite_fraction * population < 1) {
    fail("elite_fraction * population must be >= 1");
  }
  if (restarts < 1) fail("restarts must be >= 1");
  if (tournament_size < 1) fail("tournament_size must be >= 1");
}

Json GAConfig::to_json() const {
  Json j;
  j["word_length"] = word_length;
  j["population"] = population;
  j["generations"] = generations;
  j["crossover_rate"] = crossover_rate;
  j["mutation_rate"] = mutation_rate;
  j["elite_fraction"] = elite_fraction;
  j["restarts"] = restarts;
  j["seed"] = seed;
  j["tournament_size"] = tournament_size;
  j["use_inverses"] = use_inverses;
  j["leakage_penalty"] = leakage_penalty;
  return j;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  return splitmix64(h ^ c);
}

void sort_population(Population& pop) {
  std::sort(pop.begin(), pop.end(), [](const Individual& x, const Individual& y) {
    if (x.fitness != y.fitness) return x.fitness > y.fitness;
    return x.genes < y.genes;
  });
}

Population evolve_step(const Population& pop, const GAConfig& cfg, int alphabet,
                       std::uint64_t stream_key, const FitnessFn& fitness) {
  const int n = static_cast<int>(pop.size());
  const int n_elite = std::clamp(static_cast<int>(std::lround(cfg.elite_fraction * n)), 1, n);
  Population next(pop.begin(), pop.begin() + n_elite);
  next.resize(n);

  for (int slot = n_elite; slot < n; ++slot) {
    CounterStream rng(derive_seed(stream_key, static_cast<std::uint64_t>(slot)));
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    auto tournament = [&]() {
      int best = pick(rng);
      for (int t = 1; t < cfg.tournament_size; ++t) best = std::min(best, pick(rng));
      return best;  // pop is sorted best-first
    };
    const Individual& p1 = pop[tournament()];
    const Individual& p2 = pop[tournament()];
    std::vector<std::uint8_t> child = p1.genes;
    const int len = static_cast<int>(child.size());
    if (len > 1 && coin(rng) < cfg.crossover_rate) {
      std::uniform_int_distribution<int> cut_at(1, len - 1);
      const int cut = cut_at(rng);
      std::copy(p2.genes.begin() + cut, p2.genes.end(), child.begin() + cut);
    }
    if (alphabet > 1) {
      std::uniform_int_distribution<int> other(0, alphabet - 2);
      for (auto& g : child) {
        if (coin(rng) < cfg.mutation_rate) {
          int x = other(rng);
          if (x >= g) ++x;
          g = static_cast<std::uint8_t>(x);
        }
      }
    }
    next[slot].genes = std::move(child);
  }
  evaluate(next, static_cast<std::size_t>(n_elite), fitness, cfg.threads);
  sort_population(next);
  return next;
}

FitnessFn make_fitness(const EbmSet<double>& set, const Objective& obj, double leakage_penalty) {
  const int gens = set.generator_count();
  std::vector<Matrix<double>> letters;
  for (int a = 0; a < 2 * gens; ++a) letters.push_back(set.matrix(alphabet_letter(a, gens)));
  const Matrix<double> target = obj.target<double>();
  const int dim = set.dim();
  return [letters, target, dim, obj, leakage_penalty](const std::vector<std::uint8_t>& genes) {
    Matrix<double> buf[2] = {Matrix<double>::identity(dim), Matrix<double>(dim)};
    int cur = 0;
    for (std::uint8_t g : genes) {
      matmul_into(buf[cur], letters[g], buf[1 - cur]);
      cur = 1 - cur;
    }
    const Score<double> s = score_fast(obj, target, buf[cur]);
    double value = s.distance;
    if (obj.kind == ObjectiveKind::cnot_local_class) value += leakage_penalty * s.off_block_norm;
    if (std::isnan(value)) return -std::numeric_limits<double>::infinity();
    return -value;
  };
}

namespace {

struct RunOutcome {
  std::vector<std::uint8_t> genes;
  double fitness = -std::numeric_limits<double>::infinity();
  int generation = 0;
  int restart = 0;
  std::vector<GATracePoint> trace;
  std::vector<double> restart_best;
};

RunOutcome run_restarts(const GAConfig& cfg, int alphabet, const FitnessFn& fitness) {
  cfg.validate();
  RunOutcome out;
  for (int r = 0; r < cfg.restarts; ++r) {
    const std::uint64_t key = derive_seed(cfg.seed, static_cast<std::uint64_t>(r));
    Population pop = random_population(cfg, alphabet, key);
    evaluate(pop, 0, fitness, cfg.threads);
    sort_population(pop);
    double best = pop.front().fitness;
    int best_gen = 0;
    out.trace.push_back({r, 0, best, mean_fitness(pop)});
    for (int g = 1; g <= cfg.generations; ++g) {
      pop = evolve_step(pop, cfg, alphabet, derive_seed(key, static_cast<std::uint64_t>(g)), fitness);
      if (pop.front().fitness > best) {
        best = pop.front().fitness;
        best_gen = g;
      }
      out.trace.push_back({r, g, pop.front().fitness, mean_fitness(pop)});
    }
    out.restart_best.push_back(best);
    if (best > out.fitness ||
        (best == out.fitness && pop.front().genes < out.genes)) {
      out.fitness = best;
      out.genes = pop.front().genes;
      out.generation = best_gen;
      out.restart = r;
    }
  }
  return out;
}

SearchRecord base_record(const GAConfig& cfg, const RunOutcome& run, int gens,
                         const std::string& model, const Objective& obj) {
  SearchRecord rec;
  rec.model = model;
  rec.objective = obj.to_string();
  for (std::uint8_t a : run.genes) rec.word.letters.push_back(alphabet_letter(a, gens));
  rec.seed = cfg.seed;
  rec.generation = run.generation;
  rec.method = "ga";
  return rec;
}

}  // namespace

GAResult ga_search(const GAConfig& cfg, const EbmSet<double>& set, const Objective& obj) {
  const int gens = set.generator_count();
  const int alphabet = cfg.use_inverses ? 2 * gens : gens;
  const RunOutcome run = run_restarts(cfg, alphabet, make_fitness(set, obj, cfg.leakage_penalty));
  GAResult res;
  res.best = base_record(cfg, run, gens, set.name, obj);
  const Matrix<double> u = braidword_unitary(set, res.best.word);
  const Score<double> s = score_full(obj, obj.target<double>(), u);
  res.best.distance_native = s.distance;
  res.best.distance = s.distance;
  res.best.distance_text = to_decimal(s.distance);
  res.best.numerically_zero = Backend::native().numerically_zero(s.distance);
  res.best.admissible = s.admissible;
  res.best.unitarity_defect = s.unitarity_defect;
  if (set.arity == Arity::two_qubit) {
    res.best.m11_abs = s.m11_abs;
    res.best.off_block_norm = s.off_block_norm;
  }
  res.best.letters = encode_word(res.best.word, set.arity);
  res.best.length = static_cast<int>(res.best.word.size());
  res.best.backend = Backend::native().to_string();
  res.trace = run.trace;
  res.restart_best = run.restart_best;
  return res;
}

GAResult ga_search(const GAConfig& cfg, const EbmSource& source, const Objective& obj) {
  const EbmSet<double> set = source.build<double>();
  GAResult res = ga_search(cfg, set, obj);
  res.best.model = source.name();
  rescore_record(res.best, source, obj, obj.backend);
  return res;
}

}  // namespace metabraid
