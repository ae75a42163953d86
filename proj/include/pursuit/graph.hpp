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

#ifndef PURSUIT_GRAPH_HPP_
#define PURSUIT_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace pursuit {

using Vertex = std::int32_t;
using Path = std::vector<Vertex>;

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Undirected edge in canonical (min, max) form.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph in compressed adjacency form. Neighbor lists are
// ascending. Immutable once built; copies are cheap enough for the sizes we
// deal with (a few hundred vertices).
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list. Throws std::invalid_argument on self-loops,
  // out-of-range ids or duplicate edges.
  static Graph FromEdges(int num_vertices, std::span<const Edge> edges);

  // Same, but silently merges duplicates.
  static Graph FromEdgesDedup(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return static_cast<int>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(targets_.size() / 2); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  // Canonical sorted edge list.
  std::vector<Edge> edges() const;

  // Subgraph induced on `keep` (a vertex mask). Returned ids are compacted in
  // ascending order; `old_to_new` receives -1 for dropped vertices.
  Graph induced(const std::vector<bool>& keep, std::vector<Vertex>* old_to_new = nullptr,
                std::vector<Vertex>* new_to_old = nullptr) const;

  Graph without_edges(std::span<const Edge> removed) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::int32_t> offsets_;
  std::vector<Vertex> targets_;
};

// Elimination sequence together with the dominating vertex used at each step.
struct DismantlingOrder {
  std::vector<Vertex> order;
  // witness[i] dominates order[i] at the time it is removed; the final vertex
  // has itself as witness.
  std::vector<Vertex> witness;
};

struct EliminationOrder {
  std::vector<Vertex> order;
};

struct ChordalityResult {
  bool chordal = false;
  std::optional<EliminationOrder> elimination;
};

std::vector<int> bfs_distances(const Graph& g, Vertex src);

// BFS restricted to vertices with allowed[v] set. Vertices outside the mask
// are unreachable.
std::vector<int> bfs_distances_within(const Graph& g, Vertex src, const std::vector<bool>& allowed);

std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

// Vertices within distance `radius` of v, ascending.
std::vector<Vertex> closed_ball(const Graph& g, Vertex v, int radius);

// Shortest u-v path in the subgraph induced on V \ forbidden, ties resolved
// toward lower ids. Returns nullopt when u and v are disconnected there.
std::optional<Path> shortest_path_avoiding(const Graph& g, Vertex u, Vertex v,
                                           std::span<const Vertex> forbidden);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

ChordalityResult is_chordal(const Graph& g);

// Greedy elimination of dominated vertices (lowest id first, lowest-id
// witness). Present iff the graph is dismantlable, i.e. cop-win.
std::optional<DismantlingOrder> dismantling_order(const Graph& g);

// Checks a claimed dismantling order by replaying it.
bool verify_dismantling(const Graph& g, const DismantlingOrder& order);

// True iff removing fewer than c vertices never disconnects g. c in {1,2,3}.
bool connectivity_at_least(const Graph& g, int c);

// Path validity helpers.
bool is_walk(const Graph& g, std::span<const Vertex> path);
bool is_shortest_path(const Graph& g, std::span<const Vertex> path);

}  // namespace pursuit

#endif  // PURSUIT_GRAPH_HPP_
