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
#include <set>
#include <stdexcept>

#include "pursuit/errors.hpp"
#include "pursuit/strategies.hpp"

namespace pursuit {

namespace {

std::vector<bool> mask_of(int n, std::span<const Vertex> vs) {
  std::vector<bool> m(n, false);
  for (Vertex v : vs) m[v] = true;
  return m;
}

// Farthest vertex from src in h, lowest id on ties.
Vertex farthest(const Graph& h, Vertex src, const std::vector<bool>& among) {
  const auto d = bfs_distances(h, src);
  Vertex best = src;
  for (Vertex v = 0; v < h.num_vertices(); ++v) {
    if (among[v] && d[v] != kUnreachable && d[v] > d[best]) best = v;
  }
  return best;
}

}  // namespace

ThreeCopPolicy::ThreeCopPolicy(const Graph& g, const KiteMap& kites) : kites_(kites) {
  if (g.num_vertices() < 3 || !connectivity_at_least(g, 2)) {
    throw std::invalid_argument("three_cop_policy needs a 2-connected graph");
  }
  kites.validate(g);
  dist_ = all_pairs_distances(g);
  int best = -1;
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    for (Vertex b = a + 1; b < g.num_vertices(); ++b) {
      if (dist_[a][b] > best) {
        best = dist_[a][b];
        v_ = a;
        w_ = b;
      }
    }
  }
  p1_ = *shortest_path_avoiding(g, v_, w_, {});
  std::vector<bool> keep(g.num_vertices(), true);
  for (std::size_t i = 1; i + 1 < p1_.size(); ++i) keep[p1_[i]] = false;
  const Path only_p1[] = {p1_};
  const Graph rest = restrict_graph(g, keep, edges_crossing_paths(kites, only_p1));
  if (auto p2 = shortest_path_avoiding(rest, v_, w_, {}); p2 && *p2 != p1_) p2_ = std::move(*p2);
}

std::unique_ptr<ThreeCopPolicy> three_cop_policy(const Graph& g, const KiteMap& kites) {
  return std::make_unique<ThreeCopPolicy>(g, kites);
}

std::vector<Path> ThreeCopPolicy::guarded_paths(int skip) const {
  std::vector<Path> out;
  for (int i = 0; i < static_cast<int>(cops_.size()); ++i) {
    if (i != skip && cops_[i].guard) out.push_back(cops_[i].guard->state().path);
  }
  return out;
}

std::vector<Vertex> ThreeCopPolicy::place(const Graph& g) {
  cops_.clear();
  cops_.resize(3);
  last_territory_ = -1;
  events_.clear();
  cops_[0].guard = std::make_unique<PathGuard>(g, &kites_, p1_, g);
  events_.push_back({0, "guard cop 0 on a shortest v-w path of length " + std::to_string(p1_.size() - 1), 0});
  if (p2_) {
    std::vector<bool> keep(g.num_vertices(), true);
    for (std::size_t i = 1; i + 1 < p1_.size(); ++i) keep[p1_[i]] = false;
    const Path only_p1[] = {p1_};
    cops_[1].guard = std::make_unique<PathGuard>(g, &kites_, *p2_, restrict_graph(g, keep, edges_crossing_paths(kites_, only_p1)));
    events_.push_back({0, "guard cop 1 on a second v-w path of length " + std::to_string(p2_->size() - 1), 0});
  }
  return {v_, w_, v_};
}

std::optional<Path> ThreeCopPolicy::next_path(const Graph& g, const std::vector<Vertex>& territory,
                                              Graph* field) const {
  const int n = g.num_vertices();
  const auto in_h = mask_of(n, territory);
  const auto paths = guarded_paths();
  const auto crossing = edges_crossing_paths(kites_, paths);
  const std::set<Edge> blocked(crossing.begin(), crossing.end());

  auto attachments = [&](const Path& p) {
    std::vector<Vertex> out;
    for (Vertex x : p) {
      for (Vertex h : g.neighbors(x)) {
        if (in_h[h] && !blocked.contains(Edge(x, h))) {
          out.push_back(x);
          break;
        }
      }
    }
    return out;
  };
  // Field: the territory plus the given endpoints, without blocked edges and
  // without a direct edge between the endpoints.
  auto make_field = [&](std::vector<Vertex> ends) {
    auto keep = in_h;
    for (Vertex e : ends) keep[e] = true;
    std::vector<Edge> drop(crossing.begin(), crossing.end());
    if (ends.size() == 2 && g.has_edge(ends[0], ends[1])) drop.emplace_back(ends[0], ends[1]);
    return restrict_graph(g, keep, drop);
  };

  // Two attachments on one guarded path: join the extreme ones through H.
  std::set<Vertex> all;
  for (const Path& p : paths) {
    const auto att = attachments(p);
    all.insert(att.begin(), att.end());
    if (att.size() < 2) continue;
    *field = make_field({att.front(), att.back()});
    if (auto path = shortest_path_avoiding(*field, att.front(), att.back(), {})) return path;
  }
  if (all.size() >= 2) {
    const Vertex a = *all.begin();
    auto keep = in_h;
    for (Vertex x : all) keep[x] = true;
    const Graph reach = restrict_graph(g, keep, crossing);
    const Vertex b = farthest(reach, a, mask_of(n, std::vector<Vertex>(all.begin(), all.end())));
    if (b != a) {
      *field = make_field({a, b});
      if (auto path = shortest_path_avoiding(*field, a, b, {})) return path;
    }
  }
  if (all.size() == 1) {
    const Vertex a = *all.begin();
    *field = make_field({a});
    const Vertex h = farthest(*field, a, in_h);
    if (h != a) return shortest_path_avoiding(*field, a, h, {});
  }
  // No usable attachment: a diametral path of the territory itself.
  *field = make_field({});
  Vertex a = territory.front();
  a = farthest(*field, a, in_h);
  const Vertex b = farthest(*field, a, in_h);
  return shortest_path_avoiding(*field, a, b, {});
}

void ThreeCopPolicy::reassign(const Graph& g, Vertex robber, int round) {
  const auto paths = guarded_paths();
  const auto territory = robber_territory(g, kites_, paths, robber);
  if (territory.empty()) return;
  const int size = static_cast<int>(territory.size());
  if (last_territory_ >= 0 && size >= last_territory_) {
    throw ClaimViolation("three-cop: territory did not shrink (" + std::to_string(size) + " vertices)");
  }
  last_territory_ = size;
  events_.push_back({round, "territory", size});

  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < static_cast<int>(cops_.size()); ++i) {
      if (!cops_[i].guard) continue;
      if (robber_territory(g, kites_, guarded_paths(i), robber) == territory) {
        cops_[i].guard.reset();
        events_.push_back({round, "release cop " + std::to_string(i), size});
        changed = true;
        break;
      }
    }
  }
  int free_cop = -1;
  for (int i = 0; i < static_cast<int>(cops_.size()) && free_cop < 0; ++i) {
    if (!cops_[i].guard) free_cop = i;
  }
  if (free_cop < 0) throw ClaimViolation("three-cop: all three guarded paths are still needed");
  Graph field;
  auto path = next_path(g, territory, &field);
  if (!path || path->empty()) throw ClaimViolation("three-cop: no path through a territory of size " + std::to_string(size));
  try {
    cops_[free_cop].guard = std::make_unique<PathGuard>(g, &kites_, *path, std::move(field));
  } catch (const std::invalid_argument& e) {
    throw ClaimViolation(std::string("three-cop: new path is not guardable: ") + e.what());
  }
  events_.push_back({round, "guard cop " + std::to_string(free_cop) + " on a path of length " +
                                std::to_string(path->size() - 1), size});
}

std::vector<Vertex> ThreeCopPolicy::move(const Graph& g, std::span<const Position> history, const Position& current) {
  if (cops_.size() != 3) throw std::logic_error("three-cop policy moved before placement");
  const Vertex r = current.robber;
  const int round = static_cast<int>(history.size() + 1) / 2;
  bool threatened = false;
  for (Vertex c : current.cops) threatened |= c == r || g.has_edge(c, r);
  if (!threatened) {
    bool all_stable = true;
    for (const auto& a : cops_) all_stable &= !a.guard || a.guard->stabilized();
    if (all_stable) reassign(g, r, round);
  }
  std::vector<Vertex> out(3);
  for (int i = 0; i < 3; ++i) {
    const Vertex c = current.cops[i];
    if (cops_[i].guard) {
      out[i] = cops_[i].guard->move(g, c, r);
      continue;
    }
    Vertex next = c;
    for (Vertex w : g.neighbors(c)) {
      if (dist_[w][r] < dist_[next][r]) next = w;
    }
    out[i] = next;
  }
  return out;
}

}  // namespace pursuit
