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

#include "pursuit/outer.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>

#include "pursuit/errors.hpp"

namespace pursuit {

bool chords_cross(Edge a, Edge b) {
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
  const bool c_inside = a.u < b.u && b.u < a.v;
  const bool d_inside = a.u < b.v && b.v < a.v;
  return c_inside != d_inside;
}

std::vector<std::pair<Edge, Edge>> crossing_pairs(const OuterDrawing& d) {
  const auto edges = d.graph.edges();
  std::vector<std::pair<Edge, Edge>> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (chords_cross(edges[i], edges[j])) out.emplace_back(edges[i], edges[j]);
    }
  }
  return out;
}

OuterValidation validate_outer_k(const OuterDrawing& d, int k) {
  OuterValidation v;
  for (const Edge& e : d.graph.edges()) v.counts[e] = 0;
  for (const auto& [a, b] : crossing_pairs(d)) {
    ++v.counts[a];
    ++v.counts[b];
  }
  for (const auto& [e, c] : v.counts) v.max_crossings = std::max(v.max_crossings, c);
  v.valid = v.max_crossings <= k;
  return v;
}

CycleWitness make_witness(std::vector<Vertex> cycle) {
  CycleWitness w;
  if (!cycle.empty()) {
    auto lowest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), lowest, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  }
  w.cycle = cycle;
  w.cyclic_order = cycle;
  std::sort(w.cyclic_order.begin(), w.cyclic_order.end());
  return w;
}

void CycleWitness::validate(const Graph& g) const {
  const std::size_t k = cycle.size();
  if (k < 4) throw std::invalid_argument("cycle witness shorter than four");
  std::set<Vertex> seen(cycle.begin(), cycle.end());
  if (seen.size() != k) throw std::invalid_argument("cycle witness repeats a vertex");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) {
        throw std::invalid_argument("cycle witness is not an induced cycle");
      }
    }
  }
}

std::optional<CycleWitness> find_chordless_cycle(const Graph& g) {
  const int n = g.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex a = nb[i];
        const Vertex b = nb[j];
        if (g.has_edge(a, b)) continue;
        std::vector<Vertex> forbidden{v};
        for (Vertex x : nb) {
          if (x != a && x != b) forbidden.push_back(x);
        }
        if (auto p = shortest_path_avoiding(g, a, b, forbidden)) {
          std::vector<Vertex> cycle{v};
          cycle.insert(cycle.end(), p->begin(), p->end());
          return make_witness(std::move(cycle));
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<CycleWitness> chordless_cycles(const Graph& g, std::size_t limit) {
  std::vector<CycleWitness> out;
  const int n = g.num_vertices();
  std::vector<Vertex> path;
  std::vector<bool> on(n, false);
  // Extends a chordless path starting at path[0], the cycle's lowest vertex.
  auto extend = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    const Vertex s = path.front();
    const Vertex last = path.back();
    for (Vertex x : g.neighbors(last)) {
      if (x <= s || on[x]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = g.has_edge(x, path[i]);
      if (chord) continue;
      if (path.size() > 1 && g.has_edge(x, s)) {
        if (path.size() >= 3 && path[1] < x) {
          std::vector<Vertex> cycle = path;
          cycle.push_back(x);
          out.push_back(make_witness(std::move(cycle)));
          if (out.size() >= limit) return;
        }
        continue;
      }
      path.push_back(x);
      on[x] = true;
      self(self);
      on[x] = false;
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n && out.size() < limit; ++s) {
    path = {s};
    on[s] = true;
    extend(extend);
    on[s] = false;
  }
  return out;
}

std::vector<Vertex> open_arc(int n, Vertex u, Vertex w) {
  std::vector<Vertex> out;
  for (Vertex x = (u + 1) % n; x != w; x = (x + 1) % n) out.push_back(x);
  return out;
}

namespace {

bool is_consecutive(int n, Vertex u, Vertex w, const std::vector<bool>& in_u) {
  for (Vertex x : open_arc(n, u, w)) {
    if (in_u[x]) return false;
  }
  return true;
}

std::vector<bool> membership(int n, const CycleWitness& U) {
  std::vector<bool> in(n, false);
  for (Vertex x : U.cycle) in[x] = true;
  return in;
}

}  // namespace

StructureReport check_structure(const OuterDrawing& d, Vertex u, Vertex w, const CycleWitness& U) {
  const Graph& g = d.graph;
  const int n = g.num_vertices();
  U.validate(g);
  const auto in_u = membership(n, U);
  if (u < 0 || u >= n || w < 0 || w >= n || u == w || !in_u[u] || !in_u[w]) {
    throw std::invalid_argument("check_structure: u and w must be distinct members of U");
  }
  if (!is_consecutive(n, u, w, in_u)) throw std::invalid_argument("check_structure: another member of U lies between u and w");
  if (!validate_outer_k(d, 1).valid) throw std::invalid_argument("check_structure: drawing is not outer 1-planar");

  StructureReport r;
  r.u = u;
  r.w = w;
  r.adjacent = g.has_edge(u, w);
  auto cycle_edges_at = [&](Vertex x) {
    std::vector<Edge> out;
    for (Vertex y : g.neighbors(x)) {
      if (in_u[y]) out.emplace_back(x, y);
    }
    return out;
  };
  for (const Edge& eu : cycle_edges_at(u)) {
    for (const Edge& ew : cycle_edges_at(w)) {
      if (!r.crossing && chords_cross(eu, ew)) r.crossing = std::make_pair(eu, ew);
    }
  }
  r.prop1 = r.adjacent || r.crossing.has_value();

  const auto arc = open_arc(n, u, w);
  std::vector<bool> in_arc(n, false);
  for (Vertex x : arc) in_arc[x] = true;
  std::set<Vertex> attached;
  for (Vertex x : arc) {
    for (Vertex y : g.neighbors(x)) {
      if (!in_arc[y]) attached.insert(y);
    }
  }
  r.attached.assign(attached.begin(), attached.end());
  r.cor1 = r.attached.size() <= 3;
  return r;
}

std::vector<StructureReport> check_all_pairs(const OuterDrawing& d, const CycleWitness& U) {
  std::vector<StructureReport> out;
  const auto& order = U.cyclic_order;
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.push_back(check_structure(d, order[i], order[(i + 1) % order.size()], U));
  }
  return out;
}

namespace {

class OuterRobber final : public RobberPolicy {
 public:
  OuterRobber(const OuterDrawing& d, CycleWitness U) : g_(d.graph), u_(std::move(U)) {
    u_.validate(g_);
    const int n = g_.num_vertices();
    in_u_ = membership(n, u_);
    gap_of_.assign(n, -1);
    const auto& order = u_.cyclic_order;
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::vector<bool> touches(n, false);
      for (Vertex x : open_arc(n, order[i], order[(i + 1) % order.size()])) {
        gap_of_[x] = static_cast<int>(i);
        for (Vertex y : g_.neighbors(x)) touches[y] = true;
      }
      touches_gap_.push_back(std::move(touches));
    }
  }

  std::string name() const override { return "outer"; }

  Vertex place(const Graph&, std::span<const Vertex> cops) override {
    if (cops.size() != 1) throw std::invalid_argument("the outer robber plays against one cop");
    for (Vertex x : u_.cyclic_order) {
      if (safe(cops[0], x)) return x;
    }
    throw ClaimViolation("outer robber: no safe starting vertex on U");
  }

  Vertex move(const Graph&, std::span<const Position>, const Position& current) override {
    const Vertex c = current.cops[0];
    const Vertex r = current.robber;
    if (safe(c, r)) return r;
    for (Vertex x : g_.neighbors(r)) {
      if (in_u_[x] && safe(c, x)) return x;
    }
    throw ClaimViolation("outer robber: no invariant-restoring move from " + std::to_string(r) + " with the cop on " +
                         std::to_string(c));
  }

 private:
  // Both invariants for robber on x and cop on c.
  bool safe(Vertex c, Vertex x) const {
    if (!in_u_[x] || x == c) return false;
    if (in_u_[c]) return !g_.has_edge(c, x);
    return !touches_gap_[gap_of_[c]][x];
  }

  Graph g_;
  CycleWitness u_;
  std::vector<bool> in_u_;
  std::vector<int> gap_of_;
  std::vector<std::vector<bool>> touches_gap_;
};

}  // namespace

std::unique_ptr<RobberPolicy> robber_policy_outer(const OuterDrawing& d, const CycleWitness& U) {
  return std::make_unique<OuterRobber>(d, U);
}

std::unique_ptr<RobberPolicy> robber_policy_outer(const OuterDrawing& d) {
  auto U = find_chordless_cycle(d.graph);
  if (!U) throw std::invalid_argument("robber_policy_outer: the graph is chordal");
  return std::make_unique<OuterRobber>(d, *U);
}

OuterDrawing random_outer_one_planar(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_outer_one_planar needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<bool> in_u(n, false);
  std::set<Edge> edges;
  std::map<Edge, int> crossed;
  auto add = [&](Edge e) {
    for (const Edge& f : edges) {
      if (chords_cross(e, f)) {
        ++crossed[f];
        ++crossed[e];
      }
    }
    edges.insert(e);
  };

  if (n >= 4 && std::bernoulli_distribution(0.5)(rng)) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    const int s = std::uniform_int_distribution<int>(4, n)(rng);
    std::vector<Vertex> cyc(all.begin(), all.begin() + s);
    std::sort(cyc.begin(), cyc.end());
    for (Vertex x : cyc) in_u[x] = true;
    for (int i = 0; i < s; ++i) add(Edge(cyc[i], cyc[(i + 1) % s]));
  }

  std::uniform_int_distribution<int> pick(0, n - 1);
  const int attempts = std::uniform_int_distribution<int>(n / 2, 3 * n)(rng);
  for (int t = 0; t < attempts; ++t) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a == b) continue;
    const Edge e(a, b);
    if (edges.contains(e) || (in_u[a] && in_u[b])) continue;
    std::vector<Edge> hits;
    for (const Edge& f : edges) {
      if (chords_cross(e, f)) hits.push_back(f);
    }
    if (hits.size() > 1 || (hits.size() == 1 && crossed[hits[0]] > 0)) continue;
    add(e);
  }

  // Boundary edges cross nothing, so they can always join components.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) parent[find(e.u)] = find(e.v);
  for (Vertex i = 0; i < n; ++i) {
    const Vertex j = (i + 1) % n;
    if (find(i) != find(j)) {
      add(Edge(i, j));
      parent[find(i)] = find(j);
    }
  }
  OuterDrawing d;
  d.graph = Graph::FromEdges(n, std::vector<Edge>(edges.begin(), edges.end()));
  d.k = 1;
  return d;
}

}  // namespace pursuit
