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
#include "metabraid/search.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

namespace mb = metabraid;

namespace {

mb::GAConfig small_config() {
  mb::GAConfig cfg;
  cfg.word_length = 12;
  cfg.population = 40;
  cfg.generations = 30;
  cfg.restarts = 2;
  cfg.seed = 7;
  return cfg;
}

mb::EbmSource source(const std::string& model, mb::Arity arity) {
  mb::EbmSource s;
  s.model = model;
  s.arity = arity;
  return s;
}

// Counts zeros; the optimum is the all-zero genome.
double count_zeros(const std::vector<std::uint8_t>& g) {
  return static_cast<double>(std::count(g.begin(), g.end(), 0));
}

mb::Population random_pop(int n, int len, int alphabet, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  mb::Population pop(n);
  for (auto& ind : pop) {
    for (int i = 0; i < len; ++i) ind.genes.push_back(static_cast<std::uint8_t>(rng() % alphabet));
    ind.fitness = count_zeros(ind.genes);
  }
  mb::sort_population(pop);
  return pop;
}

}  // namespace

TEST(DeriveSeed, DeterministicAndSpread) {
  EXPECT_EQ(mb::derive_seed(1, 2, 3, 4), mb::derive_seed(1, 2, 3, 4));
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 4; ++s)
    for (std::uint64_t a = 0; a < 8; ++a)
      for (std::uint64_t b = 0; b < 8; ++b)
        for (std::uint64_t c = 0; c < 4; ++c) seen.insert(mb::derive_seed(s, a, b, c));
  EXPECT_EQ(seen.size(), 4u * 8 * 8 * 4);
  // Argument order matters.
  EXPECT_NE(mb::derive_seed(0, 1, 2), mb::derive_seed(0, 2, 1));
}

TEST(SortPopulation, FitnessDescendingThenGenes) {
  mb::Population pop = {{{2, 1}, 1.0}, {{0, 1}, 3.0}, {{1, 0}, 1.0}, {{0, 0}, 1.0}};
  mb::sort_population(pop);
  EXPECT_EQ(pop[0].genes, (std::vector<std::uint8_t>{0, 1}));
  EXPECT_EQ(pop[1].genes, (std::vector<std::uint8_t>{0, 0}));
  EXPECT_EQ(pop[2].genes, (std::vector<std::uint8_t>{1, 0}));
  EXPECT_EQ(pop[3].genes, (std::vector<std::uint8_t>{2, 1}));
}

TEST(EvolveStep, ElitesKeptShapePreserved) {
  mb::GAConfig cfg = small_config();
  cfg.population = 60;
  cfg.elite_fraction = 0.1;
  const auto pop = random_pop(60, 12, 10, 3);
  const auto next = mb::evolve_step(pop, cfg, 10, 99, count_zeros);
  ASSERT_EQ(next.size(), pop.size());
  // Elites survive; ties may reorder them among offspring.
  for (int i = 0; i < 6; ++i) {
    const bool kept = std::any_of(next.begin(), next.end(),
                                  [&](const mb::Individual& x) { return x.genes == pop[i].genes; });
    EXPECT_TRUE(kept) << i;
  }
  EXPECT_GE(next.front().fitness, pop.front().fitness);
  for (std::size_t i = 0; i < next.size(); ++i) {
    EXPECT_EQ(next[i].genes.size(), 12u);
    for (auto g : next[i].genes) EXPECT_LT(g, 10);
    EXPECT_EQ(next[i].fitness, count_zeros(next[i].genes));
    if (i) EXPECT_GE(next[i - 1].fitness, next[i].fitness);
  }
}

TEST(EvolveStep, SameKeySameOffspring) {
  const mb::GAConfig cfg = small_config();
  const auto pop = random_pop(40, 12, 10, 4);
  const auto a = mb::evolve_step(pop, cfg, 10, 1234, count_zeros);
  const auto b = mb::evolve_step(pop, cfg, 10, 1234, count_zeros);
  const auto c = mb::evolve_step(pop, cfg, 10, 1235, count_zeros);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].genes, b[i].genes);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) differs |= a[i].genes != c[i].genes;
  EXPECT_TRUE(differs);
}

TEST(EvolveStep, MutationAlwaysChangesLetter) {
  mb::GAConfig cfg = small_config();
  cfg.crossover_rate = 0;
  cfg.mutation_rate = 1;
  cfg.tournament_size = 1;
  // Uniform population: with every letter mutated, no offspring keeps a zero.
  mb::Population pop(40, mb::Individual{std::vector<std::uint8_t>(12, 0), 12.0});
  const auto next = mb::evolve_step(pop, cfg, 4, 5, count_zeros);
  const int n_elite = static_cast<int>(std::lround(cfg.elite_fraction * cfg.population));
  int children = 0;
  for (const auto& ind : next) {
    if (ind.fitness == 0) ++children;
  }
  EXPECT_EQ(children, cfg.population - std::max(1, n_elite));
}

TEST(EvolveStep, ConvergesOnToyProblem) {
  mb::GAConfig cfg = small_config();
  auto pop = random_pop(40, 12, 4, 6);
  for (int g = 0; g < 80; ++g) pop = mb::evolve_step(pop, cfg, 4, mb::derive_seed(6, g), count_zeros);
  EXPECT_EQ(pop.front().fitness, 12.0);
}

TEST(Fitness, CnotIncludesLeakagePenalty) {
  const auto set = mb::make_ebm_set<double>("V113_3", mb::Arity::two_qubit);
  const auto fit = mb::make_fitness(set, mb::Objective::cnot(), 10.0);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint8_t> g(6);
    for (auto& x : g) x = static_cast<std::uint8_t>(rng() % 10);
    oracle::CM u = oracle::eye(5);
    for (auto x : g) {
      const auto m = oracle::from_lib(set.matrix(mb::alphabet_letter(x, 5)));
      u = oracle::mul(u, m);
    }
    double off = 0;
    for (int j = 1; j < 5; ++j) off = std::max({off, std::abs(u[0][j]), std::abs(u[j][0])});
    oracle::CM block = oracle::zeros(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) block[i][j] = u[i + 1][j + 1];
    // Only meaningful when the block is unitary enough for the invariants.
    if (off > 1e-9) {
      EXPECT_LT(fit(g), -10 * off + 1e-9);
      continue;
    }
    EXPECT_NEAR(fit(g), -oracle::cnot_distance(block), 1e-10 + 10 * off);
  }
}

TEST(Fitness, OneQubitIsNegatedDistance) {
  const auto set = mb::make_ebm_set<double>("V131_3", mb::Arity::one_qubit);
  const auto fit = mb::make_fitness(set, mb::Objective::one_qubit("H"), 10.0);
  const oracle::CM h = oracle::from_lib(mb::gate_matrix<double>("H"));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint8_t> g(10);
    for (auto& x : g) x = static_cast<std::uint8_t>(rng() % 4);
    oracle::CM u = oracle::eye(2);
    for (auto x : g) u = oracle::mul(u, oracle::from_lib(set.matrix(mb::alphabet_letter(x, 2))));
    EXPECT_NEAR(fit(g), -oracle::phase_distance(h, u), 1e-12);
  }
}

TEST(GASearch, DeterministicAcrossThreadCounts) {
  mb::GAConfig cfg = small_config();
  const auto src = source("V113_3", mb::Arity::two_qubit);
  const auto a = mb::ga_search(cfg, src, mb::Objective::cnot());
  cfg.threads = 4;
  const auto b = mb::ga_search(cfg, src, mb::Objective::cnot());
  EXPECT_EQ(a.best.letters, b.best.letters);
  EXPECT_EQ(a.best.distance_native, b.best.distance_native);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    EXPECT_EQ(a.trace[i].best, b.trace[i].best);
    EXPECT_EQ(a.trace[i].mean, b.trace[i].mean);
  }
}

TEST(GASearch, SeedChangesRun) {
  mb::GAConfig cfg = small_config();
  const auto src = source("V131_3", mb::Arity::one_qubit);
  const auto a = mb::ga_search(cfg, src, mb::Objective::one_qubit("T"));
  cfg.seed = 8;
  const auto b = mb::ga_search(cfg, src, mb::Objective::one_qubit("T"));
  EXPECT_NE(a.trace.back().mean, b.trace.back().mean);
}

TEST(GASearch, BestNeverWorsensWithinRestart) {
  const auto res =
      mb::ga_search(small_config(), source("V131_3", mb::Arity::two_qubit), mb::Objective::cnot());
  ASSERT_EQ(res.restart_best.size(), 2u);
  ASSERT_EQ(res.trace.size(), 2u * 31);
  for (std::size_t i = 1; i < res.trace.size(); ++i) {
    if (res.trace[i].restart != res.trace[i - 1].restart) continue;
    EXPECT_GE(res.trace[i].best, res.trace[i - 1].best);
    EXPECT_GE(res.trace[i].best, res.trace[i].mean);
  }
  const double best = *std::max_element(res.restart_best.begin(), res.restart_best.end());
  EXPECT_EQ(res.best.length, 12);
  EXPECT_EQ(res.best.method, "ga");
  EXPECT_TRUE(res.best.generation.has_value());
  if (res.best.admissible) EXPECT_NEAR(-res.best.distance_native, best, 1e-12);
}

TEST(GASearch, MatchesExhaustiveOptimumOnShortWords) {
  // With the default budget at least 2 of 3 restarts reach the exhaustive
  // optimum when the word is short enough to enumerate.
  const auto src = source("V131_3", mb::Arity::one_qubit);
  for (const std::string gate : {"H", "T"}) {
    for (int len = 3; len <= 5; ++len) {
      // Genomes may contain cancelling pairs, so a length-L genome spans the
      // reduced words of length L, L-2, ... and the identity for even L.
      mb::SearchConfig sc;
      sc.source = src;
      sc.use_inverses = true;
      sc.min_len = 1;
      sc.max_len = len;
      const auto ex = mb::exhaustive_search(sc, mb::Objective::one_qubit(gate));
      double opt = len % 2 == 0 ? mb::global_phase_distance(mb::Matrix<double>::identity(2),
                                                            mb::gate_matrix<double>(gate))
                                : 1.0;
      for (const auto& lr : ex.per_length)
        if ((len - lr.length) % 2 == 0) opt = std::min(opt, lr.top.front().distance_native);
      mb::GAConfig cfg;
      cfg.word_length = len;
      cfg.seed = 17;
      const auto res = mb::ga_search(cfg, src, mb::Objective::one_qubit(gate));
      int hits = 0;
      for (double f : res.restart_best) hits += std::abs(-f - opt) <= 1e-12;
      EXPECT_GE(hits, 2) << gate << " L=" << len << " opt " << opt;
    }
  }
}

TEST(GAConfig, Validation) {
  auto bad = [](auto mutate) {
    mb::GAConfig c;
    mutate(c);
    EXPECT_THROW(c.validate(), std::invalid_argument);
  };
  EXPECT_NO_THROW(mb::GAConfig{}.validate());
  bad([](mb::GAConfig& c) { c.word_length = 0; });
  bad([](mb::GAConfig& c) { c.population = 1; });
  bad([](mb::GAConfig& c) { c.generations = -1; });
  bad([](mb::GAConfig& c) { c.crossover_rate = 1.5; });
  bad([](mb::GAConfig& c) { c.mutation_rate = -0.1; });
  bad([](mb::GAConfig& c) { c.elite_fraction = 0.001; });
  bad([](mb::GAConfig& c) { c.restarts = 0; });
  bad([](mb::GAConfig& c) { c.tournament_size = 0; });
  const auto j = mb::GAConfig{}.to_json();
  EXPECT_EQ(j.at("population"), 200);
  EXPECT_EQ(j.at("seed"), 1);
}
