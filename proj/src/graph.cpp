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

#include "pursuit/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace pursuit {

namespace {

void build_csr(int n, const std::vector<Edge>& sorted_unique, std::vector<std::int32_t>& offsets,
               std::vector<Vertex>& targets) {
  std::vector<std::int32_t> deg(n, 0);
  for (const Edge& e : sorted_unique) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + deg[v];
  targets.assign(offsets[n], 0);
  std::vector<std::int32_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : sorted_unique) {
    targets[fill[e.u]++] = e.v;
    targets[fill[e.v]++] = e.u;
  }
  for (int v = 0; v < n; ++v) std::sort(targets.begin() + offsets[v], targets.begin() + offsets[v + 1]);
}

void check_edge(int n, const Edge& e) {
  if (e.u < 0 || e.v >= n) {
    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                                std::to_string(e.v));
  }
  if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
}

}  // namespace

Graph Graph::FromEdges(int num_vertices, std::span<const Edge> edges) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (Edge& e : sorted) {
    e = Edge(e.u, e.v);
    check_edge(num_vertices, e);
  }
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(it->u) + "-" + std::to_string(it->v));
  }
  Graph g;
  build_csr(num_vertices, sorted, g.offsets_, g.targets_);
  return g;
}

Graph Graph::FromEdgesDedup(int num_vertices, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    e = Edge(e.u, e.v);
    check_edge(num_vertices, e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return FromEdges(num_vertices, edges);
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(targets_.size() / 2);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(const std::vector<bool>& keep, std::vector<Vertex>* old_to_new,
                     std::vector<Vertex>* new_to_old) const {
  const int n = num_vertices();
  std::vector<Vertex> map(n, -1);
  std::vector<Vertex> back;
  for (Vertex v = 0; v < n; ++v) {
    if (keep[v]) {
      map[v] = static_cast<Vertex>(back.size());
      back.push_back(v);
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges()) {
    if (keep[e.u] && keep[e.v]) kept.emplace_back(map[e.u], map[e.v]);
  }
  if (old_to_new) *old_to_new = map;
  if (new_to_old) *new_to_old = back;
  return FromEdges(static_cast<int>(back.size()), kept);
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (Edge& e : drop) e = Edge(e.u, e.v);
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  for (const Edge& e : edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return FromEdges(num_vertices(), kept);
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  dist[src] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances_within(const Graph& g, Vertex src, const std::vector<bool>& allowed) {
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  if (!allowed[src]) return dist;
  std::vector<Vertex> queue;
  dist[src] = 0;
  queue.push_back(src);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (allowed[w] && dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) out.push_back(bfs_distances(g, v));
  return out;
}

std::vector<Vertex> closed_ball(const Graph& g, Vertex v, int radius) {
  std::vector<int> dist = bfs_distances(g, v);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (dist[u] <= radius) out.push_back(u);
  }
  return out;
}

std::optional<Path> shortest_path_avoiding(const Graph& g, Vertex u, Vertex v,
                                           std::span<const Vertex> forbidden) {
  std::vector<bool> allowed(g.num_vertices(), true);
  for (Vertex f : forbidden) allowed[f] = false;
  if (!allowed[u] || !allowed[v]) {
    throw std::invalid_argument("path endpoint is forbidden");
  }
  // Distances from the target so that walking forward from u picks the lowest
  // id neighbor that stays on a shortest path.
  std::vector<int> to_v = bfs_distances_within(g, v, allowed);
  if (to_v[u] == kUnreachable) return std::nullopt;
  Path path{u};
  Vertex cur = u;
  while (cur != v) {
    for (Vertex w : g.neighbors(cur)) {
      if (allowed[w] && to_v[w] == to_v[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<int> d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.num_vertices(), -1);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

ChordalityResult is_chordal(const Graph& g) {
  const int n = g.num_vertices();
  // Maximum cardinality search; the reverse visiting order is a perfect
  // elimination order iff the graph is chordal.
  std::vector<int> weight(n, 0);
  std::vector<bool> numbered(n, false);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!numbered[v] && (best == -1 || weight[v] > weight[best])) best = v;
    }
    numbered[best] = true;
    visit.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!numbered[w]) ++weight[w];
    }
  }
  std::vector<Vertex> peo(visit.rbegin(), visit.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;

  for (Vertex v : peo) {
    std::vector<Vertex> later;
    for (Vertex w : g.neighbors(v)) {
      if (pos[w] > pos[v]) later.push_back(w);
    }
    for (std::size_t i = 0; i < later.size(); ++i) {
      for (std::size_t j = i + 1; j < later.size(); ++j) {
        if (!g.has_edge(later[i], later[j])) return {false, std::nullopt};
      }
    }
  }
  return {true, EliminationOrder{std::move(peo)}};
}

namespace {

// N[v] ∩ alive ⊆ N[u] for u adjacent to v (both alive).
bool dominated_by(const Graph& g, const std::vector<bool>& alive, Vertex v, Vertex u) {
  for (Vertex x : g.neighbors(v)) {
    if (!alive[x] || x == u) continue;
    if (!g.has_edge(u, x)) return false;
  }
  return true;
}

}  // namespace

std::optional<DismantlingOrder> dismantling_order(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("dismantling_order: empty graph");
  std::vector<bool> alive(n, true);
  DismantlingOrder out;
  for (int remaining = n; remaining > 1; --remaining) {
    bool removed = false;
    for (Vertex v = 0; v < n && !removed; ++v) {
      if (!alive[v]) continue;
      for (Vertex u : g.neighbors(v)) {
        if (alive[u] && dominated_by(g, alive, v, u)) {
          out.order.push_back(v);
          out.witness.push_back(u);
          alive[v] = false;
          removed = true;
          break;
        }
      }
    }
    if (!removed) return std::nullopt;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (alive[v]) {
      out.order.push_back(v);
      out.witness.push_back(v);
    }
  }
  return out;
}

bool verify_dismantling(const Graph& g, const DismantlingOrder& order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.order.size()) != n || order.witness.size() != order.order.size()) return false;
  std::vector<bool> alive(n, true);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    Vertex v = order.order[i];
    Vertex u = order.witness[i];
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
    if (i + 1 < n) {
      if (u < 0 || u >= n || !alive[u] || u == v || !g.has_edge(u, v)) return false;
      if (!dominated_by(g, alive, v, u)) return false;
    }
    alive[v] = false;
  }
  return true;
}

namespace {

bool connected_without(const Graph& g, const std::vector<bool>& removed) {
  const int n = g.num_vertices();
  Vertex start = -1;
  int alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++alive;
      if (start == -1) start = v;
    }
  }
  if (alive == 0) return true;
  std::vector<bool> allowed(n);
  for (Vertex v = 0; v < n; ++v) allowed[v] = !removed[v];
  std::vector<int> d = bfs_distances_within(g, start, allowed);
  int reached = 0;
  for (Vertex v = 0; v < n; ++v) reached += (allowed[v] && d[v] != kUnreachable);
  return reached == alive;
}

}  // namespace

bool connectivity_at_least(const Graph& g, int c) {
  const int n = g.num_vertices();
  if (c < 1 || c > 3) throw std::invalid_argument("connectivity_at_least: c must be 1, 2 or 3");
  if (n <= c) throw std::invalid_argument("connectivity_at_least: need more than c vertices");
  std::vector<bool> removed(n, false);
  if (!connected_without(g, removed)) return false;
  if (c >= 2) {
    for (Vertex a = 0; a < n; ++a) {
      removed[a] = true;
      bool ok = connected_without(g, removed);
      if (ok && c >= 3) {
        for (Vertex b = a + 1; b < n && ok; ++b) {
          removed[b] = true;
          ok = connected_without(g, removed);
          removed[b] = false;
        }
      }
      removed[a] = false;
      if (!ok) return false;
    }
  }
  return true;
}

bool is_walk(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  for (Vertex v : path) {
    if (v < 0 || v >= g.num_vertices()) return false;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) return false;
  }
  return true;
}

bool is_shortest_path(const Graph& g, std::span<const Vertex> path) {
  if (!is_walk(g, path)) return false;
  std::vector<int> d = bfs_distances(g, path.front());
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (d[path[i]] != static_cast<int>(i)) return false;
  }
  return true;
}

}  // namespace pursuit
