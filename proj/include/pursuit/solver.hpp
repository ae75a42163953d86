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

// Exact solution of the k-cop game by retrograde analysis.
//
// Rules: cops place first, then the robber. Afterwards cops and robber
// alternate, cops first. On the cops' turn every cop independently moves to a
// neighbor or stays; several cops may share a vertex. On the robber's turn it
// moves to a neighbor or stays. The cops win as soon as the robber shares a
// vertex with any cop.
//
// A state is (sorted cop multiset, robber vertex, side to move). Cop
// multisets are ranked in colexicographic order of the strictly increasing
// sequence c_i + i, so the state space is a dense integer range of size
// 2 * C(n + k - 1, k) * n.

#ifndef PURSUIT_SOLVER_HPP_
#define PURSUIT_SOLVER_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pursuit/graph.hpp"
#include "pursuit/policy.hpp"

namespace pursuit {

enum class Label : std::uint8_t { kCopWin, kRobberWin };

struct GameState {
  std::vector<Vertex> cops;  // sorted ascending
  Vertex robber = 0;
  Side to_move = Side::kCops;

  static GameState Canonical(std::vector<Vertex> cops, Vertex robber, Side to_move);
};

// Ranks sorted k-multisets over {0..n-1}.
class MultisetRanker {
 public:
  MultisetRanker(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::uint64_t count() const { return count_; }
  std::uint64_t rank(std::span<const Vertex> sorted) const;
  void unrank(std::uint64_t rank, std::span<Vertex> out) const;

 private:
  std::uint64_t binom(int a, int b) const { return b < 0 || b > a ? 0 : binom_[a][b]; }

  int n_;
  int k_;
  std::uint64_t count_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

struct SolveOptions {
  std::uint64_t max_states = 500'000'000;
  std::uint64_t max_bytes = std::uint64_t{8} << 30;
};

// Returns the number of states and the bytes a solve would allocate.
struct SolveEstimate {
  std::uint64_t states = 0;
  std::uint64_t bytes = 0;
};
SolveEstimate estimate_solve(int n, int k);

enum class TieBreak {
  kLexicographic,  // smallest move among equally valued moves
  kPursuit,        // prefer the move closest to (cops) or farthest from (robber) the opponent
};

// Labels for every state of the k-cop game on one graph. Immutable after
// solve() returns.
class GameTable {
 public:
  static constexpr std::uint16_t kInfinite = 0xFFFF;

  const Graph& graph() const { return graph_; }
  int num_cops() const { return ranker_.k(); }
  const MultisetRanker& ranker() const { return ranker_; }
  std::uint64_t num_states() const { return 2 * ranker_.count() * static_cast<std::uint64_t>(graph_.num_vertices()); }

  Label label(const GameState& s) const;
  // Plies until capture under optimal play, or nullopt on robber-win states.
  std::optional<int> capture_time(const GameState& s) const;

  // Raw lookup by cop-multiset rank.
  std::uint16_t raw_time(std::uint64_t cop_rank, Vertex robber, Side to_move) const {
    const std::uint64_t idx = cop_rank * graph_.num_vertices() + robber;
    return to_move == Side::kCops ? cop_turn_[idx] : robber_turn_[idx];
  }

  // Worst case over robber placements for a given sorted cop placement;
  // kInfinite when some robber placement wins.
  std::uint16_t placement_value(std::span<const Vertex> sorted_cops) const;

  // Placement minimizing placement_value, lexicographically smallest on ties.
  std::vector<Vertex> best_placement() const;

  bool cops_win() const;
  // Number of cop placements that win against every robber placement.
  std::uint64_t winning_placements() const;

 private:
  friend GameTable solve(const Graph& g, int k, const SolveOptions& options);
  GameTable(Graph g, int k);

  Graph graph_;
  MultisetRanker ranker_;
  std::vector<std::uint16_t> cop_turn_;
  std::vector<std::uint16_t> robber_turn_;
};

// Throws BudgetExceeded when the estimate exceeds the options, and
// std::invalid_argument when g is disconnected, empty, or k < 1.
GameTable solve(const Graph& g, int k, const SolveOptions& options = {});

struct CopNumberResult {
  std::optional<int> value;  // nullopt: exceeds k_max
  int k_max = 0;
};

CopNumberResult cop_number(const Graph& g, int k_max, const SolveOptions& options = {});

// Policies reading a solved table. The table must outlive the policy.
std::unique_ptr<CopPolicy> optimal_cop_policy(const GameTable& table, TieBreak tie = TieBreak::kLexicographic);
std::unique_ptr<RobberPolicy> optimal_robber_policy(const GameTable& table, TieBreak tie = TieBreak::kLexicographic);

// As above with a caller-chosen initial placement.
std::unique_ptr<CopPolicy> optimal_cop_policy(const GameTable& table, std::vector<Vertex> placement,
                                              TieBreak tie = TieBreak::kLexicographic);

// Robber facing more cops than the table was solved for: a candidate vertex
// is worth the smallest capture time over every k-subset of the cops, and the
// robber takes the best, then the one farthest from the nearest cop, then the
// lowest id.
std::unique_ptr<RobberPolicy> table_subset_robber_policy(const GameTable& table);

}  // namespace pursuit

#endif  // PURSUIT_SOLVER_HPP_
