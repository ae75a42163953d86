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

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

#include "pursuit/strategies.hpp"

namespace pursuit {

Graph restrict_graph(const Graph& g, const std::vector<bool>& keep, std::span<const Edge> drop) {
  const std::set<Edge> dropped(drop.begin(), drop.end());
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep[e.u] && keep[e.v] && !dropped.contains(e)) edges.push_back(e);
  }
  return Graph::FromEdges(g.num_vertices(), edges);
}

std::vector<Edge> edges_crossing_paths(const KiteMap& kites, std::span<const Path> paths) {
  std::set<Edge> out;
  for (const Path& p : paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (auto other = kites.partner(Edge(p[i], p[i + 1]))) out.insert(*other);
    }
  }
  return {out.begin(), out.end()};
}

int GuardState::shadow(Vertex v) const {
  if (anchor[v] == kUnreachable) return -1;
  return std::min(anchor[v], static_cast<int>(path.size()) - 1);
}

PathGuard::PathGuard(const Graph& g, const KiteMap* kites, Path path, Graph field) : field_(std::move(field)) {
  if (path.empty()) throw std::invalid_argument("guarded path is empty");
  if (field_.num_vertices() != g.num_vertices()) throw std::invalid_argument("field has the wrong vertex count");
  if (!is_shortest_path(field_, path)) throw std::invalid_argument("guarded path is not isometric in its field");
  if (kites) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      for (std::size_t j = i + 1; j + 1 < path.size(); ++j) {
        if (kites->crosses(Edge(path[i], path[i + 1]), Edge(path[j], path[j + 1]))) {
          throw std::invalid_argument("guarded path crosses itself");
        }
      }
    }
  }
  state_.kites = kites;
  state_.anchor = bfs_distances(field_, path.front());
  state_.index_of.assign(g.num_vertices(), -1);
  for (std::size_t i = 0; i < path.size(); ++i) state_.index_of[path[i]] = static_cast<int>(i);

  // Multi-source distances to the path in the game graph.
  state_.to_path.assign(g.num_vertices(), kUnreachable);
  std::queue<Vertex> q;
  for (Vertex p : path) {
    state_.to_path[p] = 0;
    q.push(p);
  }
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop();
    for (Vertex y : g.neighbors(x)) {
      if (state_.to_path[y] == kUnreachable) {
        state_.to_path[y] = state_.to_path[x] + 1;
        q.push(y);
      }
    }
  }
  state_.path = std::move(path);
}

Vertex PathGuard::move(const Graph& g, Vertex cop, Vertex robber) {
  if (cop == robber || g.has_edge(cop, robber)) return robber;
  const int target = state_.shadow(robber);
  const int i = state_.index_of[cop];
  Vertex next = cop;
  if (i >= 0) {
    if (target >= 0 && target != i) next = state_.path[target > i ? i + 1 : i - 1];
  } else {
    for (Vertex w : g.neighbors(cop)) {
      if (state_.to_path[w] < state_.to_path[next]) next = w;
    }
  }
  ++state_.moves;
  state_.stabilized = target >= 0 && state_.index_of[next] == target;
  if (state_.stabilized && state_.first_stable_move < 0) state_.first_stable_move = state_.moves;
  return next;
}

bool guarding_inequality_holds(const PathGuard& guard, Vertex cop, Vertex robber) {
  const auto& s = guard.state();
  const int i = s.index_of[cop];
  if (i < 0) return false;
  const auto d = bfs_distances(guard.field(), robber);
  for (std::size_t j = 0; j < s.path.size(); ++j) {
    const int gap = std::abs(i - static_cast<int>(j));
    if (gap > d[s.path[j]]) return false;
  }
  return true;
}

namespace {

class SingleGuard final : public CopPolicy {
 public:
  SingleGuard(const Graph& g, const KiteMap& kites, const Path& path, Vertex start)
      : guard_(g, &kites, path, g), start_(start) {}

  std::string name() const override { return "guard"; }
  int num_cops() const override { return 1; }
  std::vector<Vertex> place(const Graph&) override { return {start_}; }
  std::vector<Vertex> move(const Graph& g, std::span<const Position>, const Position& current) override {
    return {guard_.move(g, current.cops[0], current.robber)};
  }

 private:
  PathGuard guard_;
  Vertex start_;
};

class TwoGuards final : public CopPolicy {
 public:
  TwoGuards(const Graph& g, const KiteMap& kites, const Path& p1, const Path& p2)
      : first_(g, &kites, p1, g),
        second_(g, &kites, p2, second_field(g, kites, p1)),
        start_{p1.front(), p2.back()},
        parked_(p1.size() == 2 && p2.size() == 2 && Edge(p1[0], p1[1]) == Edge(p2[0], p2[1])) {
    for (std::size_t i = 0; i + 1 < p1.size(); ++i) {
      for (std::size_t j = 0; j + 1 < p2.size(); ++j) {
        if (kites.crosses(Edge(p1[i], p1[i + 1]), Edge(p2[j], p2[j + 1]))) {
          throw std::invalid_argument("an edge of the first path crosses an edge of the second");
        }
      }
    }
  }

  std::string name() const override { return "two-guards"; }
  int num_cops() const override { return 2; }
  std::vector<Vertex> place(const Graph&) override { return start_; }
  std::vector<Vertex> move(const Graph& g, std::span<const Position>, const Position& current) override {
    if (parked_) {
      // Both ends of a single edge are occupied: stay unless the robber is in reach.
      std::vector<Vertex> next = current.cops;
      for (Vertex& c : next) {
        if (g.has_edge(c, current.robber)) c = current.robber;
      }
      return next;
    }
    return {first_.move(g, current.cops[0], current.robber), second_.move(g, current.cops[1], current.robber)};
  }

 private:
  static Graph second_field(const Graph& g, const KiteMap& kites, const Path& p1) {
    std::vector<bool> keep(g.num_vertices(), true);
    for (std::size_t i = 1; i + 1 < p1.size(); ++i) keep[p1[i]] = false;
    const std::vector<Path> first{p1};
    return restrict_graph(g, keep, edges_crossing_paths(kites, first));
  }

  PathGuard first_;
  PathGuard second_;
  std::vector<Vertex> start_;
  bool parked_;
};

}  // namespace

std::unique_ptr<CopPolicy> guard_path_policy(const Graph& g, const KiteMap& kites, const Path& path,
                                             std::optional<Vertex> start) {
  if (path.empty()) throw std::invalid_argument("guarded path is empty");
  return std::make_unique<SingleGuard>(g, kites, path, start.value_or(path.front()));
}

std::unique_ptr<CopPolicy> two_path_guard(const Graph& g, const KiteMap& kites, const Path& p1, const Path& p2) {
  if (p1.empty() || p2.empty()) throw std::invalid_argument("guarded path is empty");
  return std::make_unique<TwoGuards>(g, kites, p1, p2);
}

}  // namespace pursuit
