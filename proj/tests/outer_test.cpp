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
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/outer.hpp"
#include "pursuit/simulate.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {
namespace {

OuterDrawing drawing(int n, std::vector<Edge> edges) { return {Graph::FromEdges(n, edges), 1}; }

// U = 0-1-4-3 on six vertices: the cycle edges 1-4 and 0-3 cross, and the
// consecutive members 1 and 3 are not adjacent.
OuterDrawing crossing_cycle() {
  return drawing(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}, {0, 3}});
}

TEST(OuterTest, ChordsCross) {
  EXPECT_TRUE(chords_cross(Edge(0, 2), Edge(1, 3)));
  EXPECT_FALSE(chords_cross(Edge(0, 1), Edge(2, 3)));
  EXPECT_FALSE(chords_cross(Edge(0, 2), Edge(2, 3)));
  EXPECT_EQ(crossing_pairs(drawing(4, {{0, 2}, {1, 3}})).size(), 1u);
  EXPECT_TRUE(crossing_pairs(drawing(4, {{0, 1}, {2, 3}})).empty());
}

TEST(OuterTest, CompleteGraphsInConvexPosition) {
  const OuterDrawing k5{complete_graph(5), 2};
  const OuterValidation v = validate_outer_k(k5, 2);
  EXPECT_TRUE(v.valid);
  EXPECT_EQ(v.max_crossings, 2);
  int diagonals = 0;
  for (const auto& [e, count] : v.counts) {
    const bool side = (e.v - e.u) == 1 || (e.v - e.u) == 4;
    EXPECT_EQ(count, side ? 0 : 2);
    diagonals += !side;
  }
  EXPECT_EQ(diagonals, 5);
  EXPECT_FALSE(validate_outer_k(k5, 1).valid);
  EXPECT_TRUE(validate_outer_k({complete_graph(4), 1}, 1).valid);
  EXPECT_TRUE(validate_outer_k({cycle_graph(7), 0}, 0).valid);
}

TEST(OuterPropertyTest, CrossingPairsMatchBruteForce) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + static_cast<int>(rng() % 8);
    const OuterDrawing d{oracle::random_graph(n, 0.3, rng), 3};
    const auto pairs = crossing_pairs(d);
    std::set<std::pair<Edge, Edge>> got;
    for (const auto& [a, b] : pairs) {
      got.insert({std::min(a, b), std::max(a, b)});
      EXPECT_TRUE(chords_cross(a, b) && chords_cross(b, a));
    }
    EXPECT_EQ(got.size(), pairs.size());
    std::size_t expected = 0;
    const auto edges = d.graph.edges();
    for (std::size_t x = 0; x < edges.size(); ++x) {
      for (std::size_t y = x + 1; y < edges.size(); ++y) expected += oracle::interleave(edges[x], edges[y]);
    }
    EXPECT_EQ(pairs.size(), expected);
    const OuterValidation v = validate_outer_k(d, 3);
    for (const auto& [e, count] : v.counts) {
      int brute = 0;
      for (const Edge& f : edges) brute += oracle::interleave(e, f);
      EXPECT_EQ(count, brute);
    }
  }
}

TEST(OuterTest, ChordlessCycles) {
  const auto c4 = find_chordless_cycle(cycle_graph(4));
  ASSERT_TRUE(c4.has_value());
  EXPECT_EQ(c4->cycle.size(), 4u);
  EXPECT_FALSE(find_chordless_cycle(complete_graph(4)).has_value());
  EXPECT_FALSE(find_chordless_cycle(random_tree(12, 3)).has_value());
  std::vector<Edge> edges{{0, 3}};
  for (Vertex i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
  const Graph c6_chord = Graph::FromEdges(6, edges);
  const auto u = find_chordless_cycle(c6_chord);
  ASSERT_TRUE(u.has_value());
  EXPECT_EQ(u->cycle.size(), 4u);
  EXPECT_NO_THROW(u->validate(c6_chord));
  EXPECT_EQ(chordless_cycles(c6_chord, 10).size(), 2u);
  EXPECT_THROW(make_witness({0, 1, 2, 3}).validate(complete_graph(4)), std::invalid_argument);
  EXPECT_THROW(make_witness({0, 1, 2}).validate(cycle_graph(3)), std::invalid_argument);
}

TEST(OuterPropertyTest, ChordlessIffNotChordal) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(3 + static_cast<int>(rng() % 7), 0.3, rng);
    const auto u = find_chordless_cycle(g);
    EXPECT_EQ(u.has_value(), !oracle::chordal(g));
    if (u) {
      EXPECT_NO_THROW(u->validate(g));
    }
  }
}

TEST(OuterTest, OpenArcWrapsAround) {
  EXPECT_EQ(open_arc(6, 4, 1), (std::vector<Vertex>{5, 0}));
  EXPECT_EQ(open_arc(6, 1, 4), (std::vector<Vertex>{2, 3}));
  EXPECT_TRUE(open_arc(6, 2, 3).empty());
}

TEST(StructureTest, AdjacentConsecutiveMembers) {
  const OuterDrawing c4{cycle_graph(4), 1};
  const StructureReport r = check_structure(c4, 0, 1, make_witness({0, 1, 2, 3}));
  EXPECT_TRUE(r.adjacent);
  EXPECT_TRUE(r.prop1);
  EXPECT_TRUE(r.cor1);
  EXPECT_THROW(check_structure(c4, 0, 2, make_witness({0, 1, 2, 3})), std::invalid_argument);
}

TEST(StructureTest, NonAdjacentMembersHaveCrossingEdges) {
  const OuterDrawing d = crossing_cycle();
  const CycleWitness u = make_witness({0, 1, 4, 3});
  ASSERT_NO_THROW(u.validate(d.graph));
  const StructureReport r = check_structure(d, 1, 3, u);
  EXPECT_FALSE(r.adjacent);
  ASSERT_TRUE(r.crossing.has_value());
  EXPECT_TRUE(chords_cross(r.crossing->first, r.crossing->second));
  EXPECT_EQ(r.crossing->first, Edge(1, 4));
  EXPECT_EQ(r.crossing->second, Edge(0, 3));
  EXPECT_TRUE(r.prop1);
  EXPECT_EQ(r.attached, (std::vector<Vertex>{1, 3}));
  for (const StructureReport& all : check_all_pairs(d, u)) EXPECT_TRUE(all.prop1 && all.cor1);
}

TEST(StructurePropertyTest, HoldsOnGeneratedDrawings) {
  int triples = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const OuterDrawing d = random_outer_one_planar(4 + seed % 11, seed);
    for (const CycleWitness& u : chordless_cycles(d.graph, 20)) {
      for (const StructureReport& r : check_all_pairs(d, u)) {
        EXPECT_TRUE(r.prop1) << "seed " << seed;
        EXPECT_TRUE(r.cor1) << "seed " << seed;
        // Independent recount of the attachment set.
        const auto arc = open_arc(d.graph.num_vertices(), r.u, r.w);
        const std::set<Vertex> inside(arc.begin(), arc.end());
        std::set<Vertex> attached;
        for (Vertex x : arc) {
          for (Vertex y : d.graph.neighbors(x)) {
            if (!inside.contains(y)) attached.insert(y);
          }
        }
        EXPECT_EQ(std::vector<Vertex>(attached.begin(), attached.end()), r.attached);
        ++triples;
      }
    }
  }
  EXPECT_GT(triples, 100);
}

TEST(OuterRobberTest, SurvivesOnCycle) {
  const OuterDrawing c4{cycle_graph(4), 1};
  const GameTable one = solve(c4.graph, 1);
  for (Vertex start = 0; start < 4; ++start) {
    auto cop = optimal_cop_policy(one, {start}, TieBreak::kPursuit);
    auto robber = robber_policy_outer(c4, make_witness({0, 1, 2, 3}));
    EXPECT_FALSE(simulate(c4.graph, *cop, *robber, 1000).captured());
    GreedyCops greedy({start});
    auto again = robber_policy_outer(c4);
    EXPECT_FALSE(simulate(c4.graph, greedy, *again, 1000).captured());
  }
}

TEST(OuterRobberTest, RefusesChordalGraphs) {
  EXPECT_THROW(robber_policy_outer({complete_graph(4), 1}), std::invalid_argument);
  EXPECT_THROW(robber_policy_outer({complete_graph(4), 1}, make_witness({0, 1, 2, 3})), std::invalid_argument);
}

TEST(OuterRobberTest, SurvivesOptimalCopOnCrossingCycle) {
  const OuterDrawing d = crossing_cycle();
  const GameTable one = solve(d.graph, 1);
  ASSERT_FALSE(one.cops_win());
  for (Vertex start = 0; start < 6; ++start) {
    for (TieBreak tie : {TieBreak::kLexicographic, TieBreak::kPursuit}) {
      auto cop = optimal_cop_policy(one, {start}, tie);
      auto robber = robber_policy_outer(d, make_witness({0, 1, 4, 3}));
      const Transcript t = simulate(d.graph, *cop, *robber, 1000);
      EXPECT_FALSE(t.captured());
      EXPECT_EQ(check_transcript(d.graph, t), std::nullopt);
    }
  }
}

TEST(GeneratorTest, OuterDrawings) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const OuterDrawing t = random_outer_one_planar(3, seed);
    EXPECT_TRUE(crossing_pairs(t).empty());
    EXPECT_TRUE(is_connected(t.graph));
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const OuterDrawing d = random_outer_one_planar(3 + seed % 12, seed);
    EXPECT_TRUE(validate_outer_k(d, 1).valid);
    EXPECT_TRUE(is_connected(d.graph));
    EXPECT_EQ(d.graph, random_outer_one_planar(3 + seed % 12, seed).graph);
  }
}

TEST(OuterPropertyTest, ChordalIffCopWinAndTwoCopsSuffice) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const OuterDrawing d = random_outer_one_planar(3 + seed % 12, seed + 10000);
    const bool one = solve(d.graph, 1).cops_win();
    EXPECT_EQ(is_chordal(d.graph).chordal, one);
    if (!one) {
      EXPECT_TRUE(solve(d.graph, 2).cops_win());
    }
  }
}

}  // namespace
}  // namespace pursuit
