// Copyright 2026 The Pursuit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pursuit/solver.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <new>
#include <stdexcept>
#include <string>

#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

constexpr int kMaxCops = 8;

template <typename T>
void insertion_sort(std::span<T> a) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    T x = a[i];
    std::size_t j = i;
    for (; j > 0 && a[j - 1] > x; --j) a[j] = a[j - 1];
    a[j] = x;
  }
}

bool contains(std::span<const Vertex> cops, Vertex v) {
  return std::find(cops.begin(), cops.end(), v) != cops.end();
}

// Closed neighborhood lists, self first.
std::vector<std::vector<Vertex>> closed_neighborhoods(const Graph& g) {
  std::vector<std::vector<Vertex>> out(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out[v].push_back(v);
    for (Vertex w : g.neighbors(v)) out[v].push_back(w);
  }
  return out;
}

// Closed neighborhood lists in ascending order.
std::vector<std::vector<Vertex>> sorted_closed_neighborhoods(const Graph& g) {
  auto out = closed_neighborhoods(g);
  for (auto& nb : out) std::sort(nb.begin(), nb.end());
  return out;
}

}  // namespace

GameState GameState::Canonical(std::vector<Vertex> cops, Vertex robber, Side to_move) {
  std::sort(cops.begin(), cops.end());
  return GameState{std::move(cops), robber, to_move};
}

MultisetRanker::MultisetRanker(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1) throw std::invalid_argument("MultisetRanker: need n >= 1 and k >= 1");
  const int top = n + k;
  binom_.assign(top + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (int a = 0; a <= top; ++a) {
    binom_[a][0] = 1;
    for (int b = 1; b <= std::min(a, k); ++b) {
      const std::uint64_t x = binom_[a - 1][b - 1];
      const std::uint64_t y = b <= a - 1 ? binom_[a - 1][b] : 0;
      if (x > std::numeric_limits<std::uint64_t>::max() - y) throw BudgetExceeded("state count overflows 64 bits");
      binom_[a][b] = x + y;
    }
  }
  count_ = binom(n + k - 1, k);
}

std::uint64_t MultisetRanker::rank(std::span<const Vertex> sorted) const {
  std::uint64_t r = 0;
  for (int i = 0; i < k_; ++i) r += binom(sorted[i] + i, i + 1);
  return r;
}

void MultisetRanker::unrank(std::uint64_t r, std::span<Vertex> out) const {
  int hi = n_ + k_ - 2;
  for (int i = k_ - 1; i >= 0; --i) {
    // Largest b in [i, hi] with C(b, i+1) <= r.
    int lo = i;
    int h = hi;
    while (lo < h) {
      int mid = (lo + h + 1) / 2;
      if (binom(mid, i + 1) <= r) {
        lo = mid;
      } else {
        h = mid - 1;
      }
    }
    r -= binom(lo, i + 1);
    out[i] = lo - i;
    hi = lo - 1;
  }
}

SolveEstimate estimate_solve(int n, int k) {
  MultisetRanker ranker(n, k);
  const std::uint64_t pairs = ranker.count() * static_cast<std::uint64_t>(n);
  SolveEstimate est;
  est.states = 2 * pairs;
  // Two 16-bit time arrays, one 8-bit counter array, the unranked cop sets
  // and a frontier allowance.
  est.bytes = pairs * 5 + ranker.count() * k * sizeof(Vertex) + pairs;
  return est;
}

GameTable::GameTable(Graph g, int k) : graph_(std::move(g)), ranker_(graph_.num_vertices(), k) {}

Label GameTable::label(const GameState& s) const {
  return capture_time(s).has_value() ? Label::kCopWin : Label::kRobberWin;
}

std::optional<int> GameTable::capture_time(const GameState& s) const {
  if (static_cast<int>(s.cops.size()) != num_cops()) throw std::invalid_argument("wrong number of cops");
  std::array<Vertex, kMaxCops> buf{};
  std::copy(s.cops.begin(), s.cops.end(), buf.begin());
  std::span<Vertex> sorted(buf.data(), s.cops.size());
  insertion_sort(sorted);
  for (Vertex c : sorted) {
    if (c < 0 || c >= graph_.num_vertices()) throw std::out_of_range("cop position out of range");
  }
  if (s.robber < 0 || s.robber >= graph_.num_vertices()) throw std::out_of_range("robber position out of range");
  const std::uint16_t t = raw_time(ranker_.rank(sorted), s.robber, s.to_move);
  if (t == kInfinite) return std::nullopt;
  return t;
}

std::uint16_t GameTable::placement_value(std::span<const Vertex> sorted_cops) const {
  const std::uint64_t rank = ranker_.rank(sorted_cops);
  std::uint16_t worst = 0;
  for (Vertex r = 0; r < graph_.num_vertices(); ++r) {
    worst = std::max(worst, raw_time(rank, r, Side::kCops));
    if (worst == kInfinite) break;
  }
  return worst;
}

std::vector<Vertex> GameTable::best_placement() const {
  std::vector<Vertex> cur(num_cops());
  std::vector<Vertex> best;
  std::uint16_t best_value = kInfinite;
  for (std::uint64_t r = 0; r < ranker_.count(); ++r) {
    ranker_.unrank(r, cur);
    const std::uint16_t v = placement_value(cur);
    if (best.empty() || v < best_value || (v == best_value && cur < best)) {
      best = cur;
      best_value = v;
    }
  }
  return best;
}

bool GameTable::cops_win() const { return winning_placements() > 0; }

std::uint64_t GameTable::winning_placements() const {
  std::vector<Vertex> cur(num_cops());
  std::uint64_t wins = 0;
  for (std::uint64_t r = 0; r < ranker_.count(); ++r) {
    ranker_.unrank(r, cur);
    if (placement_value(cur) != kInfinite) ++wins;
  }
  return wins;
}

GameTable solve(const Graph& g, int k, const SolveOptions& options) {
  const int n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("solve: empty graph");
  if (k < 1 || k > kMaxCops) throw std::invalid_argument("solve: cop count must be in [1, 8]");
  if (!is_connected(g)) throw std::invalid_argument("solve: graph is disconnected");
  if (g.max_degree() >= 255) throw std::invalid_argument("solve: maximum degree must be below 255");

  const SolveEstimate est = estimate_solve(n, k);
  if (est.states > options.max_states) {
    throw BudgetExceeded("solve needs " + std::to_string(est.states) + " states, budget is " +
                         std::to_string(options.max_states));
  }
  if (est.bytes > options.max_bytes) {
    throw BudgetExceeded("solve needs about " + std::to_string(est.bytes) + " bytes, budget is " +
                         std::to_string(options.max_bytes));
  }

  GameTable table(g, k);
  const MultisetRanker& ranker = table.ranker_;
  const std::uint64_t sets = ranker.count();
  const std::uint64_t pairs = sets * static_cast<std::uint64_t>(n);

  std::vector<Vertex> cop_sets;
  std::vector<std::uint8_t> pending;
  try {
    table.cop_turn_.assign(pairs, GameTable::kInfinite);
    table.robber_turn_.assign(pairs, GameTable::kInfinite);
    pending.assign(pairs, 0);
    cop_sets.resize(sets * k);
  } catch (const std::bad_alloc&) {
    throw BudgetExceeded("allocation failed for " + std::to_string(est.states) + " states");
  }
  for (std::uint64_t r = 0; r < sets; ++r) {
    ranker.unrank(r, std::span<Vertex>(cop_sets.data() + r * k, k));
  }

  const auto nbhd = closed_neighborhoods(g);
  auto& cop_turn = table.cop_turn_;
  auto& robber_turn = table.robber_turn_;

  // Frontier entries are (pair index << 1) | side.
  std::vector<std::uint64_t> frontier;
  std::vector<std::uint64_t> next;
  for (std::uint64_t r = 0; r < sets; ++r) {
    std::span<const Vertex> cops(cop_sets.data() + r * k, k);
    for (Vertex v = 0; v < n; ++v) {
      const std::uint64_t idx = r * n + v;
      if (contains(cops, v)) {
        cop_turn[idx] = 0;
        robber_turn[idx] = 0;
        frontier.push_back(idx << 1 | 0);
        frontier.push_back(idx << 1 | 1);
      } else {
        pending[idx] = static_cast<std::uint8_t>(g.degree(v) + 1);
      }
    }
  }

  std::array<std::size_t, kMaxCops> choice{};
  std::array<Vertex, kMaxCops> tuple{};
  std::uint32_t t = 0;
  while (!frontier.empty()) {
    if (t + 1 >= GameTable::kInfinite) throw BudgetExceeded("capture time exceeds 16-bit range");
    const auto next_time = static_cast<std::uint16_t>(t + 1);
    next.clear();
    for (const std::uint64_t entry : frontier) {
      const std::uint64_t idx = entry >> 1;
      const std::uint64_t set = idx / n;
      const auto robber = static_cast<Vertex>(idx % n);
      if ((entry & 1) == 0) {
        // A cop-to-move state is won: the robber regrets every move into it.
        for (Vertex from : nbhd[robber]) {
          const std::uint64_t pidx = set * n + from;
          if (robber_turn[pidx] != GameTable::kInfinite) continue;
          if (--pending[pidx] == 0) {
            robber_turn[pidx] = next_time;
            next.push_back(pidx << 1 | 1);
          }
        }
      } else {
        // A robber-to-move state is won: any joint cop move into it wins.
        const Vertex* cops = cop_sets.data() + set * k;
        choice.fill(0);
        while (true) {
          for (int i = 0; i < k; ++i) tuple[i] = nbhd[cops[i]][choice[i]];
          std::span<Vertex> sorted(tuple.data(), k);
          insertion_sort(sorted);
          const std::uint64_t pidx = ranker.rank(sorted) * n + robber;
          if (cop_turn[pidx] == GameTable::kInfinite) {
            cop_turn[pidx] = next_time;
            next.push_back(pidx << 1);
          }
          int i = 0;
          for (; i < k; ++i) {
            if (++choice[i] < nbhd[cops[i]].size()) break;
            choice[i] = 0;
          }
          if (i == k) break;
        }
      }
    }
    frontier.swap(next);
    ++t;
  }
  return table;
}

CopNumberResult cop_number(const Graph& g, int k_max, const SolveOptions& options) {
  if (k_max < 1) throw std::invalid_argument("cop_number: k_max must be at least 1");
  CopNumberResult out;
  out.k_max = k_max;
  for (int k = 1; k <= k_max; ++k) {
    if (solve(g, k, options).cops_win()) {
      out.value = k;
      return out;
    }
  }
  return out;
}

namespace {

class OptimalCops final : public CopPolicy {
 public:
  OptimalCops(const GameTable& table, std::optional<std::vector<Vertex>> placement, TieBreak tie)
      : table_(table), placement_(std::move(placement)), tie_(tie), nbhd_(sorted_closed_neighborhoods(table.graph())) {
    if (tie_ == TieBreak::kPursuit) dist_ = all_pairs_distances(table.graph());
  }

  std::string name() const override { return "optimal"; }
  int num_cops() const override { return table_.num_cops(); }

  std::vector<Vertex> place(const Graph&) override {
    if (!placement_) placement_ = table_.best_placement();
    return *placement_;
  }

  std::vector<Vertex> move(const Graph&, std::span<const Position>, const Position& current) override {
    const int k = table_.num_cops();
    const auto& cops = current.cops;
    std::vector<std::size_t> choice(k, 0);
    std::vector<Vertex> target(k);
    std::vector<Vertex> best;
    std::uint16_t best_value = 0;
    long best_dist = 0;
    std::array<Vertex, kMaxCops> buf{};
    while (true) {
      for (int i = 0; i < k; ++i) target[i] = nbhd_[cops[i]][choice[i]];
      std::copy(target.begin(), target.end(), buf.begin());
      std::span<Vertex> sorted(buf.data(), k);
      insertion_sort(sorted);
      const std::uint16_t value = table_.raw_time(table_.ranker().rank(sorted), current.robber, Side::kRobber);
      long dist = 0;
      if (tie_ == TieBreak::kPursuit) {
        for (Vertex c : target) dist += dist_[c][current.robber];
      }
      // Enumeration is lexicographic, so strict improvement keeps the
      // smallest move among ties.
      if (best.empty() || value < best_value || (value == best_value && dist < best_dist)) {
        best = target;
        best_value = value;
        best_dist = dist;
      }
      int i = k - 1;
      for (; i >= 0; --i) {
        if (++choice[i] < nbhd_[cops[i]].size()) break;
        choice[i] = 0;
      }
      if (i < 0) break;
    }
    return best;
  }

 private:
  const GameTable& table_;
  std::optional<std::vector<Vertex>> placement_;
  TieBreak tie_;
  std::vector<std::vector<Vertex>> nbhd_;
  std::vector<std::vector<int>> dist_;
};

class OptimalRobber final : public RobberPolicy {
 public:
  OptimalRobber(const GameTable& table, TieBreak tie)
      : table_(table), tie_(tie), nbhd_(sorted_closed_neighborhoods(table.graph())) {
    if (tie_ == TieBreak::kPursuit) dist_ = all_pairs_distances(table.graph());
  }

  std::string name() const override { return "optimal"; }

  Vertex place(const Graph& g, std::span<const Vertex> cops) override {
    std::vector<Vertex> candidates(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) candidates[v] = v;
    return pick(cops, candidates);
  }

  Vertex move(const Graph&, std::span<const Position>, const Position& current) override {
    return pick(current.cops, nbhd_[current.robber]);
  }

 private:
  Vertex pick(std::span<const Vertex> cops, std::span<const Vertex> candidates) const {
    std::array<Vertex, kMaxCops> buf{};
    std::copy(cops.begin(), cops.end(), buf.begin());
    std::span<Vertex> sorted(buf.data(), cops.size());
    insertion_sort(sorted);
    const std::uint64_t rank = table_.ranker().rank(sorted);
    Vertex best = -1;
    std::uint16_t best_value = 0;
    int best_dist = -1;
    for (Vertex v : candidates) {
      const std::uint16_t value = table_.raw_time(rank, v, Side::kCops);
      int dist = 0;
      if (tie_ == TieBreak::kPursuit) {
        dist = kUnreachable;
        for (Vertex c : sorted) dist = std::min(dist, dist_[c][v]);
      }
      if (best == -1 || value > best_value || (value == best_value && dist > best_dist)) {
        best = v;
        best_value = value;
        best_dist = dist;
      }
    }
    return best;
  }

  const GameTable& table_;
  TieBreak tie_;
  std::vector<std::vector<Vertex>> nbhd_;
  std::vector<std::vector<int>> dist_;
};

}  // namespace

std::unique_ptr<CopPolicy> optimal_cop_policy(const GameTable& table, TieBreak tie) {
  return std::make_unique<OptimalCops>(table, std::nullopt, tie);
}

std::unique_ptr<CopPolicy> optimal_cop_policy(const GameTable& table, std::vector<Vertex> placement, TieBreak tie) {
  if (static_cast<int>(placement.size()) != table.num_cops()) {
    throw std::invalid_argument("placement size does not match the table's cop count");
  }
  return std::make_unique<OptimalCops>(table, std::move(placement), tie);
}

std::unique_ptr<RobberPolicy> optimal_robber_policy(const GameTable& table, TieBreak tie) {
  return std::make_unique<OptimalRobber>(table, tie);
}

namespace {

class TableSubsetRobber final : public RobberPolicy {
 public:
  explicit TableSubsetRobber(const GameTable& table)
      : table_(table), nbhd_(sorted_closed_neighborhoods(table.graph())), dist_(all_pairs_distances(table.graph())) {}

  std::string name() const override { return "table-subsets"; }

  Vertex place(const Graph& g, std::span<const Vertex> cops) override {
    std::vector<Vertex> all(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
    return pick(cops, all);
  }

  Vertex move(const Graph&, std::span<const Position>, const Position& current) override {
    return pick(current.cops, nbhd_[current.robber]);
  }

 private:
  Vertex pick(std::span<const Vertex> cops, std::span<const Vertex> candidates) const {
    const int k = table_.num_cops();
    const int m = static_cast<int>(cops.size());
    if (m < k) throw std::invalid_argument("table_subset_robber: fewer cops than the table");
    // Ranks of every k-subset of the cops.
    std::vector<std::uint64_t> ranks;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::array<Vertex, kMaxCops> buf{};
      for (int i = 0; i < k; ++i) buf[i] = cops[idx[i]];
      std::span<Vertex> sorted(buf.data(), k);
      insertion_sort(sorted);
      ranks.push_back(table_.ranker().rank(sorted));
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    Vertex best = -1;
    std::uint16_t best_value = 0;
    int best_dist = -1;
    for (Vertex v : candidates) {
      std::uint16_t value = GameTable::kInfinite;
      for (std::uint64_t r : ranks) value = std::min(value, table_.raw_time(r, v, Side::kCops));
      if (contains(cops, v)) value = 0;
      int dist = kUnreachable;
      for (Vertex c : cops) dist = std::min(dist, dist_[c][v]);
      if (best == -1 || value > best_value || (value == best_value && dist > best_dist)) {
        best = v;
        best_value = value;
        best_dist = dist;
      }
    }
    return best;
  }

  const GameTable& table_;
  std::vector<std::vector<Vertex>> nbhd_;
  std::vector<std::vector<int>> dist_;
};

}  // namespace

std::unique_ptr<RobberPolicy> table_subset_robber_policy(const GameTable& table) {
  return std::make_unique<TableSubsetRobber>(table);
}

}  // namespace pursuit
