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

#include "metabraid/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace metabraid {

namespace {

constexpr int kMaxSearchLength = 32;

struct Candidate {
  double distance;
  std::vector<std::uint8_t> word;  // alphabet indices

  bool operator<(const Candidate& o) const {
    if (distance != o.distance) return distance < o.distance;
    return word < o.word;
  }
};

// Sorted, bounded list of the best candidates.
class TopK {
 public:
  explicit TopK(int k) : k_(static_cast<std::size_t>(std::max(k, 1))) {}

  bool would_accept(double d) const { return items_.size() < k_ || d <= items_.back().distance; }

  void offer(Candidate c) {
    if (items_.size() == k_ && !(c < items_.back())) return;
    auto pos = std::upper_bound(items_.begin(), items_.end(), c);
    items_.insert(pos, std::move(c));
    if (items_.size() > k_) items_.pop_back();
  }

  const std::vector<Candidate>& items() const { return items_; }

 private:
  std::size_t k_;
  std::vector<Candidate> items_;
};

struct TaskResult {
  std::vector<TopK> best;
  std::vector<std::uint64_t> nodes;
  std::vector<std::uint64_t> admissible;
};

class Enumerator {
 public:
  Enumerator(const EbmSet<double>& set, const Objective& obj, bool use_inverses, int min_len,
             int max_len, int k)
      : set_(set),
        obj_(obj),
        target_(obj.target<double>()),
        gens_(set.generator_count()),
        alphabet_(use_inverses ? 2 * gens_ : gens_),
        min_len_(min_len),
        max_len_(max_len),
        k_(k) {
    for (int a = 0; a < alphabet_; ++a) letters_.push_back(set.matrix(alphabet_letter(a, gens_)));
  }

  int alphabet() const { return alphabet_; }

  TaskResult run(int first) {
    TaskResult out;
    out.best.assign(max_len_ + 1, TopK(k_));
    out.nodes.assign(max_len_ + 1, 0);
    out.admissible.assign(max_len_ + 1, 0);
    prods_.assign(max_len_ + 1, Matrix<double>(set_.dim()));
    word_.assign(max_len_, 0);
    word_[0] = static_cast<std::uint8_t>(first);
    prods_[1] = letters_[first];
    visit(1, out);
    return out;
  }

 private:
  bool cancels(int x, int y) const {
    return alphabet_ == 2 * gens_ && (x + gens_ == y || y + gens_ == x);
  }

  void visit(int depth, TaskResult& out) {
    ++out.nodes[depth];
    if (depth >= min_len_) {
      const Score<double> s = score_fast(obj_, target_, prods_[depth]);
      if (s.admissible) {
        ++out.admissible[depth];
        TopK& top = out.best[depth];
        if (top.would_accept(s.distance) && !std::isnan(s.distance)) {
          top.offer({s.distance, std::vector<std::uint8_t>(word_.begin(), word_.begin() + depth)});
        }
      }
    }
    if (depth == max_len_) return;
    const int last = word_[depth - 1];
    for (int a = 0; a < alphabet_; ++a) {
      if (cancels(last, a)) continue;
      word_[depth] = static_cast<std::uint8_t>(a);
      matmul_into(prods_[depth], letters_[a], prods_[depth + 1]);
      visit(depth + 1, out);
    }
  }

  const EbmSet<double>& set_;
  const Objective& obj_;
  Matrix<double> target_;
  int gens_;
  int alphabet_;
  int min_len_;
  int max_len_;
  int k_;
  std::vector<Matrix<double>> letters_;
  std::vector<Matrix<double>> prods_;
  std::vector<std::uint8_t> word_;
};

}  // namespace

std::uint64_t expected_node_count(int generators, bool use_inverses, int length) {
  const std::uint64_t a = use_inverses ? 2 * generators : generators;
  std::uint64_t n = a;
  for (int i = 1; i < length; ++i) n *= use_inverses ? a - 1 : a;
  return n;
}

std::vector<double> SearchResult::cumulative_minima() const {
  std::vector<double> out;
  double best = std::numeric_limits<double>::quiet_NaN();
  for (const LengthResult& lr : per_length) {
    if (!lr.top.empty() && (std::isnan(best) || lr.top.front().distance < best)) {
      best = lr.top.front().distance;
    }
    out.push_back(best);
  }
  return out;
}

SearchResult exhaustive_search(const SearchConfig& cfg, const Objective& obj) {
  if (cfg.min_len < 1 || cfg.max_len < cfg.min_len) {
    throw std::invalid_argument("search lengths must satisfy 1 <= min_len <= max_len");
  }
  if (cfg.max_len > kMaxSearchLength) {
    throw std::invalid_argument("max_len above " + std::to_string(kMaxSearchLength));
  }
  const EbmSet<double> set = cfg.source.build<double>();
  if ((obj.kind == ObjectiveKind::cnot_local_class) != (set.arity == Arity::two_qubit)) {
    throw std::invalid_argument("objective " + obj.to_string() + " does not match " +
                                to_string(set.arity) + " generators");
  }
  const int gens = set.generator_count();

  // Lengths whose cumulative node count fits the budget.
  int reach = 0;
  std::uint64_t total = 0;
  for (int len = 1; len <= cfg.max_len; ++len) {
    total += expected_node_count(gens, cfg.use_inverses, len);
    if (total > cfg.node_budget) break;
    reach = len;
  }

  SearchResult result;
  if (reach >= cfg.min_len) {
    Enumerator proto(set, obj, cfg.use_inverses, cfg.min_len, reach, cfg.keep_top_k);
    const int tasks = proto.alphabet();
    std::vector<TaskResult> slots(tasks);
    std::atomic<int> next{0};
    auto worker = [&]() {
      Enumerator en(set, obj, cfg.use_inverses, cfg.min_len, reach, cfg.keep_top_k);
      for (int t = next++; t < tasks; t = next++) slots[t] = en.run(t);
    };
    const int nthreads = std::clamp(cfg.threads, 1, tasks);
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (int len = cfg.min_len; len <= reach; ++len) {
      TopK merged(cfg.keep_top_k);
      LengthResult lr;
      lr.length = len;
      for (const TaskResult& tr : slots) {
        lr.nodes += tr.nodes[len];
        lr.admissible += tr.admissible[len];
        for (const Candidate& c : tr.best[len].items()) merged.offer(c);
      }
      for (const Candidate& c : merged.items()) {
        SearchRecord rec;
        rec.model = cfg.source.name();
        rec.objective = obj.to_string();
        for (std::uint8_t a : c.word) rec.word.letters.push_back(alphabet_letter(a, gens));
        rec.distance_native = c.distance;
        rec.method = "exhaustive";
        lr.top.push_back(std::move(rec));
      }
      rescore_records(lr.top, cfg.source, obj, obj.backend);
      lr.top = rank_words(std::move(lr.top), cfg.keep_top_k, gens);
      result.per_length.push_back(std::move(lr));
    }
  }
  for (int len = std::max(reach + 1, cfg.min_len); len <= cfg.max_len; ++len) {
    LengthResult lr;
    lr.length = len;
    lr.truncated = true;
    result.per_length.push_back(std::move(lr));
    result.truncated = true;
  }
  return result;
}

std::vector<SearchRecord> rank_words(std::vector<SearchRecord> records, int k, int generators) {
  std::stable_sort(records.begin(), records.end(),
                   [generators](const SearchRecord& x, const SearchRecord& y) {
                     return record_less(x, y, generators);
                   });
  if (k >= 0 && static_cast<std::size_t>(k) < records.size()) records.resize(k);
  return records;
}

}  // namespace metabraid
