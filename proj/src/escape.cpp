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
#include <stdexcept>

#include "pursuit/errors.hpp"
#include "pursuit/strategies.hpp"

namespace pursuit {

std::vector<EscapeOption> escape_options(const Graph& g, const std::vector<VertexTag>& tags, Vertex r) {
  std::vector<EscapeOption> out;
  for (Vertex m : g.neighbors(r)) {
    if (tags[m] != VertexTag::kEdgeMidpoint) continue;
    for (Vertex d : g.neighbors(m)) {
      if (d != r && tags[d] == VertexTag::kDodecahedron) out.push_back({d, m});
    }
  }
  std::sort(out.begin(), out.end(), [](const EscapeOption& a, const EscapeOption& b) { return a.d < b.d; });
  return out;
}

std::vector<Vertex> escape_set(const Graph& g, const EscapeOption& option) {
  std::vector<Vertex> out = closed_ball(g, option.midpoint, 1);
  const auto far = closed_ball(g, option.d, 2);
  out.insert(out.end(), far.begin(), far.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EscapeAudit audit_escape_sets(const Graph& g, const std::vector<VertexTag>& tags) {
  EscapeAudit audit;
  for (Vertex r = 0; r < g.num_vertices(); ++r) {
    if (tags[r] != VertexTag::kDodecahedron) continue;
    ++audit.d_vertices;
    const auto options = escape_options(g, tags, r);
    std::vector<std::vector<Vertex>> sets;
    for (const auto& o : options) sets.push_back(escape_set(g, o));
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        ++audit.pairs_checked;
        std::vector<Vertex> common;
        std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                              std::back_inserter(common));
        if (common != std::vector<Vertex>{r}) {
          if (audit.violations++ == 0) {
            audit.first_violation = "r=" + std::to_string(r) + " d=" + std::to_string(options[i].d) + "," +
                                    std::to_string(options[j].d) + " share " + std::to_string(common.size()) +
                                    " vertices";
          }
        }
      }
    }
  }
  return audit;
}

namespace {

class EscapeRobber final : public RobberPolicy {
 public:
  EscapeRobber(const Graph& g, const std::vector<VertexTag>& tags) : tags_(tags) {
    if (static_cast<int>(tags.size()) != g.num_vertices()) throw std::invalid_argument("tag vector size mismatch");
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (tags[v] == VertexTag::kDodecahedron && escape_options(g, tags, v).size() != 3) {
        throw std::invalid_argument("D-vertex " + std::to_string(v) + " does not have three D-neighbors");
      }
    }
  }

  std::string name() const override { return "escape"; }

  Vertex place(const Graph& g, std::span<const Vertex> cops) override {
    if (cops.size() != 2) throw std::invalid_argument("the escape rule plays against exactly two cops");
    std::vector<std::vector<int>> dist;
    for (Vertex c : cops) dist.push_back(bfs_distances(g, c));
    Vertex best = -1;
    int best_d = -1;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (tags_[v] != VertexTag::kDodecahedron) continue;
      const int d = std::min(dist[0][v], dist[1][v]);
      if (d > best_d) {
        best = v;
        best_d = d;
      }
    }
    if (best_d < 2) throw ClaimViolation("escape: every D-vertex has a cop in its closed neighborhood");
    transit_.reset();
    return best;
  }

  Vertex move(const Graph& g, std::span<const Position>, const Position& current) override {
    const Vertex r = current.robber;
    if (transit_) {
      const Vertex d = *transit_;
      transit_.reset();
      if (std::find(current.cops.begin(), current.cops.end(), d) != current.cops.end()) {
        throw ClaimViolation("escape: a cop reached the committed target " + std::to_string(d));
      }
      return d;
    }
    if (tags_[r] != VertexTag::kDodecahedron) {
      throw ClaimViolation("escape: robber is resting off the dodecahedron at " + std::to_string(r));
    }
    bool threatened = false;
    for (Vertex c : current.cops) threatened |= g.has_edge(c, r);
    if (!threatened) return r;
    for (const auto& o : escape_options(g, tags_, r)) {
      const auto set = escape_set(g, o);
      bool free = true;
      for (Vertex c : current.cops) free &= !std::binary_search(set.begin(), set.end(), c);
      if (free) {
        transit_ = o.d;
        return o.midpoint;
      }
    }
    std::string where = "escape: no cop-free option at r=" + std::to_string(r) + " cops=";
    for (Vertex c : current.cops) where += std::to_string(c) + " ";
    throw ClaimViolation(where);
  }

 private:
  std::vector<VertexTag> tags_;
  std::optional<Vertex> transit_;
};

}  // namespace

std::unique_ptr<RobberPolicy> robber_escape_policy(const Graph& g, const std::vector<VertexTag>& tags) {
  return std::make_unique<EscapeRobber>(g, tags);
}

}  // namespace pursuit
