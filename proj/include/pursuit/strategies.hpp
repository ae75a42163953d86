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

// Executable strategies for 1-planar pursuit: guarding an isometric path with
// one cop, guarding two paths with two, the robber's escape rule on the
// quadrangulation family, robber territories, and the recursive three-cop
// strategy for kite-complete graphs.

#ifndef PURSUIT_STRATEGIES_HPP_
#define PURSUIT_STRATEGIES_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pursuit/constructions.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/policy.hpp"

namespace pursuit {

// Graph on the same vertex ids restricted to the vertices in `keep`, without
// the edges in `drop`. Dropped vertices become isolated.
Graph restrict_graph(const Graph& g, const std::vector<bool>& keep, std::span<const Edge> drop = {});

// Edges of g that cross some edge of one of the paths.
std::vector<Edge> edges_crossing_paths(const KiteMap& kites, std::span<const Path> paths);

// One cop guarding an isometric path p_0..p_L of a playing field. The field is
// a graph on the same ids as the game graph; vertices outside it are isolated.
// The robber's shadow on the path is min(d_field(p_0, r), L). Once the cop
// stands on the shadow it follows it step for step, so the robber is caught
// one move after stepping onto the path or across a path edge through its
// kite.
struct GuardState {
  Path path;
  // Field distance from path[0]; kUnreachable outside the field.
  std::vector<int> anchor;
  // Game-graph distance to the nearest path vertex.
  std::vector<int> to_path;
  std::vector<int> index_of;  // position on the path, -1 elsewhere
  bool stabilized = false;
  int moves = 0;
  // Move count at which the cop first stood on the shadow, or -1.
  int first_stable_move = -1;
  const KiteMap* kites = nullptr;

  // Shadow index of v, or -1 when v is outside the field.
  int shadow(Vertex v) const;
};

class PathGuard {
 public:
  // Throws std::invalid_argument when the path is not a shortest path of the
  // field or two of its edges cross.
  PathGuard(const Graph& g, const KiteMap* kites, Path path, Graph field);

  const GuardState& state() const { return state_; }
  const Graph& field() const { return field_; }
  bool stabilized() const { return state_.stabilized; }

  // Next vertex for a cop at `cop` when the robber is at `robber`.
  Vertex move(const Graph& g, Vertex cop, Vertex robber);

 private:
  GuardState state_;
  Graph field_;
};

// For every path vertex p_j: |i - j| <= d_field(robber, p_j) where the cop is
// on p_i. False when the cop is off the path.
bool guarding_inequality_holds(const PathGuard& guard, Vertex cop, Vertex robber);

// Single guard over the whole graph. `start` defaults to path[0].
std::unique_ptr<CopPolicy> guard_path_policy(const Graph& g, const KiteMap& kites, const Path& path,
                                             std::optional<Vertex> start = std::nullopt);

// Two guards: p1 over g, p2 over g minus the interior of p1 and the edges
// crossing p1. When both are the same single edge the cops simply hold its
// endpoints.
std::unique_ptr<CopPolicy> two_path_guard(const Graph& g, const KiteMap& kites, const Path& p1, const Path& p2);

// The robber's escape rule against two cops on Q or Q'. Needs the vertex
// tags of Q; ids of Q' coincide with Q.
std::unique_ptr<RobberPolicy> robber_escape_policy(const Graph& g, const std::vector<VertexTag>& tags);

// D-neighbors of a D-vertex r with the midpoints d'_j of the edges r d_j.
struct EscapeOption {
  Vertex d = -1;
  Vertex midpoint = -1;
};
std::vector<EscapeOption> escape_options(const Graph& g, const std::vector<VertexTag>& tags, Vertex r);

// N[d'] united with N^2[d].
std::vector<Vertex> escape_set(const Graph& g, const EscapeOption& option);

struct EscapeAudit {
  int d_vertices = 0;
  int pairs_checked = 0;
  int violations = 0;  // pairs whose sets share more than r
  std::string first_violation;
};
EscapeAudit audit_escape_sets(const Graph& g, const std::vector<VertexTag>& tags);

enum class TerritorySide { kInternal, kExternal };

struct Territory {
  std::vector<Vertex> cycle;     // vertices of X = p1 united with p2
  TerritorySide side = TerritorySide::kExternal;
  std::vector<Vertex> vertices;  // H, ascending
  int components = 0;            // of the graph with X and blocked edges removed
};

// Robber's component after deleting the path vertices and every edge crossing
// a path edge. Empty if the robber is on a path.
std::vector<Vertex> robber_territory(const Graph& g, const KiteMap& kites, std::span<const Path> paths,
                                     Vertex robber);

// p1 and p2 must share exactly their endpoints. H is kExternal when it is the
// largest component (ties to the lowest vertex id), kInternal otherwise.
// Throws std::invalid_argument when the robber is on X.
Territory territory_split(const Graph& g, const KiteMap& kites, const Path& p1, const Path& p2, Vertex robber);

// Progress record of the three-cop strategy.
struct ThreeCopEvent {
  int round = 0;
  std::string what;
  int territory_size = 0;
};

class ThreeCopPolicy;

// Three cops on a 2-connected kite-complete graph. Raises ClaimViolation when
// a step the strategy relies on is unavailable.
std::unique_ptr<ThreeCopPolicy> three_cop_policy(const Graph& g, const KiteMap& kites);

class ThreeCopPolicy final : public CopPolicy {
 public:
  ThreeCopPolicy(const Graph& g, const KiteMap& kites);

  std::string name() const override { return "three-cop"; }
  int num_cops() const override { return 3; }
  std::vector<Vertex> place(const Graph& g) override;
  std::vector<Vertex> move(const Graph& g, std::span<const Position> history, const Position& current) override;

  const std::vector<ThreeCopEvent>& events() const { return events_; }
  Vertex v() const { return v_; }
  Vertex w() const { return w_; }

 private:
  struct Assignment {
    std::unique_ptr<PathGuard> guard;
  };

  void reassign(const Graph& g, Vertex robber, int round);
  std::optional<Path> next_path(const Graph& g, const std::vector<Vertex>& territory, Graph* field) const;
  std::vector<Path> guarded_paths(int skip = -1) const;

  const KiteMap& kites_;
  Vertex v_ = 0;
  Vertex w_ = 0;
  Path p1_;
  std::optional<Path> p2_;
  std::vector<Assignment> cops_;
  std::vector<std::vector<int>> dist_;
  int last_territory_ = -1;
  std::vector<ThreeCopEvent> events_;
};

}  // namespace pursuit

#endif  // PURSUIT_STRATEGIES_HPP_
