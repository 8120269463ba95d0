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

#include "metabraid/objective.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace metabraid {

struct GAConfig {
  int word_length = 20;
  int population = 200;
  int generations = 500;
  double crossover_rate = 0.8;
  double mutation_rate = 0.03;
  double elite_fraction = 0.05;
  int restarts = 3;
  std::uint64_t seed = 1;
  int tournament_size = 3;
  bool use_inverses = true;
  /// Fitness evaluation workers; results do not depend on this.
  int threads = 1;
  /// For the CNOT objective, fitness is -(distance + penalty * off_block_norm).
  double leakage_penalty = 10.0;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
  Json to_json() const;
};

struct Individual {
  std::vector<std::uint8_t> genes;  // alphabet indices
  double fitness = 0;               // -objective
};

using Population = std::vector<Individual>;

/// Fitness of a batch of genomes. Must be a pure function of the genes.
using FitnessFn = std::function<double(const std::vector<std::uint8_t>&)>;

struct GATracePoint {
  int restart = 0;
  int generation = 0;
  double best = 0;
  double mean = 0;
};

struct GAResult {
  SearchRecord best;
  std::vector<GATracePoint> trace;
  /// Best fitness of each restart.
  std::vector<double> restart_best;
};

/// Counter-based 64-bit stream key for (seed, restart, generation, slot).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

/// Sorts by fitness (descending) then genes, ties resolved deterministically.
void sort_population(Population& pop);

/// One generation: elitism, tournament selection, single-point crossover and
/// per-letter mutation to a different letter. `pop` must be sorted; the
/// result is sorted. Each offspring draws from its own random stream keyed by
/// (stream_key, slot).
Population evolve_step(const Population& pop, const GAConfig& cfg, int alphabet,
                       std::uint64_t stream_key, const FitnessFn& fitness);

/// Fitness for an objective over an EBM set at native64.
FitnessFn make_fitness(const EbmSet<double>& set, const Objective& obj, double leakage_penalty);

/// Runs cfg.restarts independent populations and returns the best word found,
/// rescored at the objective's backend.
GAResult ga_search(const GAConfig& cfg, const EbmSource& source, const Objective& obj);

/// Same, against an already built native set (used inside the compiler).
GAResult ga_search(const GAConfig& cfg, const EbmSet<double>& set, const Objective& obj);

}  // namespace metabraid
