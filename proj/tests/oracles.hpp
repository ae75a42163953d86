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

// Slow, independent reference implementations used to cross-check the
// library. Nothing here shares code with src/ beyond the Graph container.

#ifndef PURSUIT_TESTS_ORACLES_HPP_
#define PURSUIT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "pursuit/graph.hpp"

namespace oracle {

using pursuit::Edge;
using pursuit::Graph;
using pursuit::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = true;
  return a;
}

// Plain BFS on an adjacency matrix.
inline std::vector<int> distances(const Graph& g, Vertex s) {
  const auto a = adjacency(g);
  const int n = g.num_vertices();
  std::vector<int> d(n, -1);
  std::queue<Vertex> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex w = 0; w < n; ++w) {
      if (a[v][w] && d[w] < 0) {
        d[w] = d[v] + 1;
        q.push(w);
      }
    }
  }
  return d;
}

// Ordered cop tuples, fixpoint iteration until nothing changes.
// Returns true when some placement beats every robber placement.
inline bool cops_win(const Graph& g, int k) {
  const int n = g.num_vertices();
  std::int64_t tuples = 1;
  for (int i = 0; i < k; ++i) tuples *= n;
  std::vector<std::vector<Vertex>> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v].push_back(v);
    for (Vertex w : g.neighbors(v)) closed[v].push_back(w);
  }
  auto decode = [&](std::int64_t c) {
    std::vector<Vertex> t(k);
    for (int i = 0; i < k; ++i) {
      t[i] = static_cast<Vertex>(c % n);
      c /= n;
    }
    return t;
  };
  std::vector<char> win_cops(tuples * n, 0);    // cops to move
  std::vector<char> win_robber(tuples * n, 0);  // robber to move
  for (std::int64_t c = 0; c < tuples; ++c) {
    for (Vertex x : decode(c)) win_cops[c * n + x] = win_robber[c * n + x] = 1;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::int64_t c = 0; c < tuples; ++c) {
      const std::vector<Vertex> t = decode(c);
      for (Vertex r = 0; r < n; ++r) {
        const std::int64_t i = c * n + r;
        if (!win_robber[i]) {
          bool all = true;
          for (Vertex w : closed[r]) all = all && win_cops[c * n + w];
          if (all) win_robber[i] = changed = true;
        }
        if (!win_cops[i]) {
          std::vector<std::size_t> digit(k, 0);
          for (;;) {
            std::int64_t next = 0;
            std::int64_t mul = 1;
            for (int j = 0; j < k; ++j) {
              next += closed[t[j]][digit[j]] * mul;
              mul *= n;
            }
            if (win_robber[next * n + r]) {
              win_cops[i] = changed = true;
              break;
            }
            int j = 0;
            while (j < k && ++digit[j] == closed[t[j]].size()) digit[j++] = 0;
            if (j == k) break;
          }
        }
      }
    }
  }
  for (std::int64_t c = 0; c < tuples; ++c) {
    bool all = true;
    for (Vertex r = 0; r < n && all; ++r) all = win_cops[c * n + r];
    if (all) return true;
  }
  return false;
}

// Repeatedly deletes any dominated vertex; dismantlable iff one vertex remains.
inline bool dismantlable(const Graph& g) {
  const auto a = adjacency(g);
  const int n = g.num_vertices();
  std::vector<bool> alive(n, true);
  for (int left = n; left > 1; --left) {
    bool removed = false;
    for (Vertex v = 0; v < n && !removed; ++v) {
      if (!alive[v]) continue;
      for (Vertex u = 0; u < n && !removed; ++u) {
        if (u == v || !alive[u] || !a[u][v]) continue;
        bool dominated = true;
        for (Vertex x = 0; x < n && dominated; ++x) {
          if (alive[x] && x != v && x != u && a[v][x] && !a[u][x]) dominated = false;
        }
        if (dominated) {
          alive[v] = false;
          removed = true;
        }
      }
    }
    if (!removed) return false;
  }
  return true;
}

// Chordal iff no vertex subset of size >= 4 induces a cycle. Exponential.
inline bool chordal(const Graph& g) {
  const auto a = adjacency(g);
  const int n = g.num_vertices();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 4) continue;
    bool two_regular = true;
    Vertex first = -1;
    for (Vertex v = 0; v < n && two_regular; ++v) {
      if (!(mask >> v & 1)) continue;
      if (first < 0) first = v;
      int deg = 0;
      for (Vertex w = 0; w < n; ++w) deg += (mask >> w & 1) && a[v][w];
      two_regular = deg == 2;
    }
    if (!two_regular) continue;
    // A 2-regular induced subgraph is a cycle iff connected.
    std::uint32_t seen = 1u << first;
    std::vector<Vertex> stack{first};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w = 0; w < n; ++w) {
        if ((mask >> w & 1) && a[v][w] && !(seen >> w & 1)) {
          seen |= 1u << w;
          stack.push_back(w);
        }
      }
    }
    if (seen == mask) return false;
  }
  return true;
}

// Chords of a convex drawing cross iff exactly one endpoint of one lies
// strictly inside the arc of the other.
inline bool interleave(Edge a, Edge b) {
  auto inside = [](Vertex x, Edge e) { return e.u < x && x < e.v; };
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
  return inside(b.u, a) != inside(b.v, a);
}

// Connected graph: random spanning tree by attaching each vertex to an
// earlier one, then independent extra edges.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>(rng() % v));
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdgesDedup(n, edges);
}

}  // namespace oracle

#endif  // PURSUIT_TESTS_ORACLES_HPP_
