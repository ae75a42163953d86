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

// Round-based play between a cop policy and a robber policy, and the
// line-oriented transcript format `round;copA,copB,...;robber`.
//
// Round 0 holds the initial placement. Every later round contributes two
// lines: the position after the cops moved, then after the robber moved.

#ifndef PURSUIT_SIMULATE_HPP_
#define PURSUIT_SIMULATE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"
#include "pursuit/policy.hpp"

namespace pursuit {

enum class Outcome { kCaptured, kSurvived };

struct TranscriptEntry {
  int round = 0;
  Position position;

  bool operator==(const TranscriptEntry&) const = default;
};

struct Transcript {
  std::vector<TranscriptEntry> entries;
  Outcome outcome = Outcome::kSurvived;
  // Round of capture, or the horizon when the robber survived.
  int rounds = 0;

  bool captured() const { return outcome == Outcome::kCaptured; }
  std::vector<Position> positions() const;
  bool operator==(const Transcript&) const = default;
};

// Plays until capture or until `max_rounds` full rounds have passed. Throws
// IllegalMove naming the offending policy.
Transcript simulate(const Graph& g, CopPolicy& cops, RobberPolicy& robber, int max_rounds);

// Independent legality check. Returns a description of the first problem.
std::optional<std::string> check_transcript(const Graph& g, const Transcript& t);

std::string serialize_transcript(const Transcript& t);
// Throws std::invalid_argument on malformed input.
Transcript parse_transcript(const std::string& text);

}  // namespace pursuit

#endif  // PURSUIT_SIMULATE_HPP_
