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

#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/simulate.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {
namespace {

// Jumps straight onto the robber wherever it is.
class TeleportingCop final : public CopPolicy {
 public:
  std::string name() const override { return "teleport"; }
  int num_cops() const override { return 1; }
  std::vector<Vertex> place(const Graph&) override { return {0}; }
  std::vector<Vertex> move(const Graph&, std::span<const Position>, const Position& current) override {
    return {current.robber};
  }
};

TEST(SimulateTest, GreedyCopCatchesStationaryRobberOnEdge) {
  const Graph p2 = path_graph(2);
  GreedyCops cop({0});
  StationaryRobber robber(1);
  const Transcript t = simulate(p2, cop, robber, 10);
  EXPECT_TRUE(t.captured());
  EXPECT_EQ(t.rounds, 1);
  ASSERT_EQ(t.entries.size(), 2u);
  EXPECT_EQ(t.entries[1].position, (Position{{1}, 1}));
}

TEST(SimulateTest, OptimalPlayOnFourCycleLastsTheHorizon) {
  const GameTable t = solve(cycle_graph(4), 1);
  auto cop = optimal_cop_policy(t);
  auto robber = optimal_robber_policy(t);
  const Transcript tr = simulate(t.graph(), *cop, *robber, 300);
  EXPECT_FALSE(tr.captured());
  EXPECT_EQ(tr.rounds, 300);
  EXPECT_EQ(tr.entries.size(), 601u);
}

TEST(SimulateTest, IllegalMovesAreReported) {
  const Graph p = path_graph(5);
  TeleportingCop cop;
  StationaryRobber robber(4);
  try {
    simulate(p, cop, robber, 5);
    FAIL() << "expected IllegalMove";
  } catch (const IllegalMove& e) {
    EXPECT_NE(std::string(e.what()).find("teleport"), std::string::npos);
  }
}

TEST(SimulateTest, PlacementCaptureEndsAtRoundZero) {
  const Graph p = path_graph(3);
  StationaryCops cops({1});
  StationaryRobber robber(1);
  const Transcript t = simulate(p, cops, robber, 5);
  EXPECT_TRUE(t.captured());
  EXPECT_EQ(t.rounds, 0);
  EXPECT_EQ(t.entries.size(), 1u);
}

TEST(TranscriptTest, CheckerCatchesEveryKindOfCheat) {
  const Graph p = path_graph(5);
  GreedyCops cops({0});
  StationaryRobber robber(4);
  const Transcript good = simulate(p, cops, robber, 10);
  ASSERT_EQ(check_transcript(p, good), std::nullopt);

  Transcript jump = good;
  jump.entries[1].position.cops[0] = 3;
  EXPECT_NE(check_transcript(p, jump), std::nullopt);

  Transcript robber_on_cop_turn = good;
  robber_on_cop_turn.entries[1].position.robber = 3;
  EXPECT_NE(check_transcript(p, robber_on_cop_turn), std::nullopt);

  Transcript wrong_outcome = good;
  wrong_outcome.outcome = Outcome::kSurvived;
  EXPECT_NE(check_transcript(p, wrong_outcome), std::nullopt);

  Transcript renumbered = good;
  renumbered.entries[2].round = 7;
  EXPECT_NE(check_transcript(p, renumbered), std::nullopt);

  Transcript out_of_range = good;
  out_of_range.entries[0].position.robber = 9;
  EXPECT_NE(check_transcript(p, out_of_range), std::nullopt);

  EXPECT_NE(check_transcript(p, Transcript{}), std::nullopt);
}

TEST(TranscriptTest, TextRoundTrip) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(4 + static_cast<int>(rng() % 6), 0.3, rng);
    const GameTable t = solve(g, 2);
    auto cops = optimal_cop_policy(t, TieBreak::kPursuit);
    EvasiveRobber robber;
    const Transcript tr = simulate(g, *cops, robber, 30);
    const std::string text = serialize_transcript(tr);
    const Transcript back = parse_transcript(text);
    EXPECT_EQ(back, tr);
    EXPECT_EQ(serialize_transcript(back), text);
    EXPECT_EQ(check_transcript(g, back), std::nullopt);
  }
}

TEST(TranscriptTest, TextFormat) {
  const Graph p2 = path_graph(2);
  GreedyCops cop({0});
  StationaryRobber robber(1);
  EXPECT_EQ(serialize_transcript(simulate(p2, cop, robber, 10)), "0;0;1\n1;1;1\n# outcome CAPTURED 1\n");
  EXPECT_THROW(parse_transcript("0;0\n"), std::invalid_argument);
  EXPECT_THROW(parse_transcript("0;x;1\n"), std::invalid_argument);
}

TEST(EvasiveRobberTest, KeepsItsDistance) {
  const Graph c8 = cycle_graph(8);
  EvasiveRobber robber;
  EXPECT_EQ(robber.place(c8, std::vector<Vertex>{0}), 4);
  StationaryCops cop({0});
  const Transcript t = simulate(c8, cop, robber, 20);
  for (const auto& e : t.entries) EXPECT_EQ(e.position.robber, 4);
}

}  // namespace
}  // namespace pursuit
