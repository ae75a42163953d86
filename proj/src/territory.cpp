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

namespace {

// Component labels of g minus `removed` vertices and `blocked` edges; -1 on
// removed vertices.
std::vector<int> components(const Graph& g, const std::vector<bool>& removed, const std::set<Edge>& blocked,
                            int* count) {
  std::vector<int> label(g.num_vertices(), -1);
  int c = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (removed[s] || label[s] >= 0) continue;
    label[s] = c;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (removed[y] || label[y] >= 0 || blocked.contains(Edge(x, y))) continue;
        label[y] = c;
        q.push(y);
      }
    }
    ++c;
  }
  if (count) *count = c;
  return label;
}

}  // namespace

std::vector<Vertex> robber_territory(const Graph& g, const KiteMap& kites, std::span<const Path> paths,
                                     Vertex robber) {
  std::vector<bool> removed(g.num_vertices(), false);
  for (const Path& p : paths) {
    for (Vertex v : p) removed[v] = true;
  }
  if (removed[robber]) return {};
  const auto crossing = edges_crossing_paths(kites, paths);
  const std::set<Edge> blocked(crossing.begin(), crossing.end());
  const auto label = components(g, removed, blocked, nullptr);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (label[v] == label[robber]) out.push_back(v);
  }
  return out;
}

Territory territory_split(const Graph& g, const KiteMap& kites, const Path& p1, const Path& p2, Vertex robber) {
  if (p1.empty() || p2.empty()) throw std::invalid_argument("territory_split: empty path");
  const bool same = p1.front() == p2.front() && p1.back() == p2.back();
  const bool reversed = p1.front() == p2.back() && p1.back() == p2.front();
  if (!same && !reversed) throw std::invalid_argument("territory_split: paths do not share their endpoints");
  std::set<Vertex> inner(p1.begin() + 1, p1.end() - (p1.size() > 1 ? 1 : 0));
  for (std::size_t i = 1; i + 1 < p2.size(); ++i) {
    if (inner.contains(p2[i])) throw std::invalid_argument("territory_split: paths meet in an interior vertex");
  }
  Territory t;
  std::set<Vertex> x(p1.begin(), p1.end());
  x.insert(p2.begin(), p2.end());
  t.cycle.assign(x.begin(), x.end());
  if (x.contains(robber)) throw std::invalid_argument("territory_split: robber stands on the cycle");

  std::vector<bool> removed(g.num_vertices(), false);
  for (Vertex v : x) removed[v] = true;
  const Path both[] = {p1, p2};
  const auto crossing = edges_crossing_paths(kites, both);
  const std::set<Edge> blocked(crossing.begin(), crossing.end());
  const auto label = components(g, removed, blocked, &t.components);
  std::vector<int> size(t.components, 0);
  for (int l : label) {
    if (l >= 0) ++size[l];
  }
  // Labels are assigned in order of the lowest vertex, so max_element picks
  // the lowest id on ties.
  const int largest = static_cast<int>(std::max_element(size.begin(), size.end()) - size.begin());
  t.side = label[robber] == largest ? TerritorySide::kExternal : TerritorySide::kInternal;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (label[v] == label[robber]) t.vertices.push_back(v);
  }
  return t;
}

}  // namespace pursuit
