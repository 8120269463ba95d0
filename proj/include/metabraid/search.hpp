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
#include <vector>

namespace metabraid {

struct SearchConfig {
  EbmSource source;
  bool use_inverses = false;
  int min_len = 1;
  int max_len = 6;
  int keep_top_k = 8;
  int threads = 1;
  /// Total DFS nodes allowed across all lengths; lengths that would exceed it
  /// are reported as truncated.
  std::uint64_t node_budget = 4'000'000'000ULL;
};

struct LengthResult {
  int length = 0;
  /// Words of exactly this length visited (free reduction applied).
  std::uint64_t nodes = 0;
  /// Words that passed the leakage filter.
  std::uint64_t admissible = 0;
  bool truncated = false;
  /// Best words, rescored at the objective's backend and sorted.
  std::vector<SearchRecord> top;
};

struct SearchResult {
  std::vector<LengthResult> per_length;
  bool truncated = false;

  /// Running minimum over lengths <= L of the reported distance, in length
  /// order; NaN where nothing was found yet.
  std::vector<double> cumulative_minima() const;
};

/// Words of length L visited by the pruned enumeration: a (a-1)^(L-1) with
/// inverses, a^L without.
std::uint64_t expected_node_count(int generators, bool use_inverses, int length);

/// Depth-first enumeration of every word of length min_len..max_len with
/// prefix products cached along the path. Words containing a letter next to
/// its own inverse are skipped. Work is split by first letter across threads
/// and merged deterministically.
SearchResult exhaustive_search(const SearchConfig& cfg, const Objective& obj);

/// Stable top-k by distance, then alphabet-lexicographic word.
std::vector<SearchRecord> rank_words(std::vector<SearchRecord> records, int k, int generators);

}  // namespace metabraid
