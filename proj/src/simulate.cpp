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

#include "pursuit/simulate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

bool in_range(const Graph& g, Vertex v) { return v >= 0 && v < g.num_vertices(); }

bool step_ok(const Graph& g, Vertex from, Vertex to) { return from == to || g.has_edge(from, to); }

std::string join(const std::vector<Vertex>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<Vertex> split_vertices(const std::string& s) {
  std::vector<Vertex> out;
  if (s.empty()) return out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

void check_cops(const Graph& g, const CopPolicy& p, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
  if (to.size() != from.size()) {
    throw IllegalMove("cop policy '" + p.name() + "' returned " + std::to_string(to.size()) + " cops, expected " +
                      std::to_string(from.size()));
  }
  for (std::size_t i = 0; i < to.size(); ++i) {
    if (!in_range(g, to[i]) || !step_ok(g, from[i], to[i])) {
      throw IllegalMove("cop policy '" + p.name() + "' moved cop " + std::to_string(i) + " from " +
                        std::to_string(from[i]) + " to " + std::to_string(to[i]));
    }
  }
}

}  // namespace

bool Position::captured() const { return std::find(cops.begin(), cops.end(), robber) != cops.end(); }

std::vector<Vertex> GreedyCops::move(const Graph& g, std::span<const Position>, const Position& current) {
  const auto dist = bfs_distances(g, current.robber);
  std::vector<Vertex> out = current.cops;
  for (Vertex& c : out) {
    Vertex best = c;
    for (Vertex w : g.neighbors(c)) {
      if (dist[w] < dist[best]) best = w;
    }
    c = best;
  }
  return out;
}

namespace {

int nearest_cop(const std::vector<std::vector<int>>& dist_from_cops, Vertex v) {
  int d = kUnreachable;
  for (const auto& dc : dist_from_cops) d = std::min(d, dc[v]);
  return d;
}

std::vector<std::vector<int>> cop_distances(const Graph& g, std::span<const Vertex> cops) {
  std::vector<std::vector<int>> out;
  for (Vertex c : cops) out.push_back(bfs_distances(g, c));
  return out;
}

}  // namespace

Vertex EvasiveRobber::place(const Graph& g, std::span<const Vertex> cops) {
  const auto dist = cop_distances(g, cops);
  Vertex best = 0;
  for (Vertex v = 1; v < g.num_vertices(); ++v) {
    if (nearest_cop(dist, v) > nearest_cop(dist, best)) best = v;
  }
  return best;
}

Vertex EvasiveRobber::move(const Graph& g, std::span<const Position>, const Position& current) {
  const auto dist = cop_distances(g, current.cops);
  Vertex best = current.robber;
  int best_d = nearest_cop(dist, best);
  for (Vertex w : g.neighbors(current.robber)) {
    const int d = nearest_cop(dist, w);
    if (d > best_d || (d == best_d && w < best && best != current.robber)) {
      best = w;
      best_d = d;
    }
  }
  return best;
}

std::vector<Position> Transcript::positions() const {
  std::vector<Position> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.position);
  return out;
}

Transcript simulate(const Graph& g, CopPolicy& cops, RobberPolicy& robber, int max_rounds) {
  if (max_rounds < 0) throw std::invalid_argument("max_rounds must be non-negative");
  Transcript t;
  std::vector<Position> history;
  Position pos;
  pos.cops = cops.place(g);
  if (static_cast<int>(pos.cops.size()) != cops.num_cops()) {
    throw IllegalMove("cop policy '" + cops.name() + "' placed the wrong number of cops");
  }
  for (Vertex c : pos.cops) {
    if (!in_range(g, c)) throw IllegalMove("cop policy '" + cops.name() + "' placed a cop on " + std::to_string(c));
  }
  pos.robber = robber.place(g, pos.cops);
  if (!in_range(g, pos.robber)) {
    throw IllegalMove("robber policy '" + robber.name() + "' placed on " + std::to_string(pos.robber));
  }
  history.push_back(pos);
  t.entries.push_back({0, pos});
  if (pos.captured()) {
    t.outcome = Outcome::kCaptured;
    t.rounds = 0;
    return t;
  }
  for (int round = 1; round <= max_rounds; ++round) {
    std::vector<Vertex> next = cops.move(g, history, pos);
    check_cops(g, cops, pos.cops, next);
    pos.cops = std::move(next);
    history.push_back(pos);
    t.entries.push_back({round, pos});
    if (pos.captured()) {
      t.outcome = Outcome::kCaptured;
      t.rounds = round;
      return t;
    }
    const Vertex r = robber.move(g, history, pos);
    if (!in_range(g, r) || !step_ok(g, pos.robber, r)) {
      throw IllegalMove("robber policy '" + robber.name() + "' moved from " + std::to_string(pos.robber) + " to " +
                        std::to_string(r));
    }
    pos.robber = r;
    history.push_back(pos);
    t.entries.push_back({round, pos});
    if (pos.captured()) {
      t.outcome = Outcome::kCaptured;
      t.rounds = round;
      return t;
    }
  }
  t.outcome = Outcome::kSurvived;
  t.rounds = max_rounds;
  return t;
}

std::optional<std::string> check_transcript(const Graph& g, const Transcript& t) {
  if (t.entries.empty()) return "empty transcript";
  const auto& first = t.entries.front();
  if (first.round != 0) return "first entry is not round 0";
  auto valid = [&](const Position& p) {
    if (!in_range(g, p.robber)) return false;
    return std::all_of(p.cops.begin(), p.cops.end(), [&](Vertex c) { return in_range(g, c); });
  };
  if (!valid(first.position)) return "placement out of range";
  bool captured = first.position.captured();
  for (std::size_t i = 1; i < t.entries.size(); ++i) {
    const auto& prev = t.entries[i - 1].position;
    const auto& cur = t.entries[i].position;
    const std::string where = "entry " + std::to_string(i) + ": ";
    if (captured) return where + "play continues after capture";
    if (!valid(cur)) return where + "vertex out of range";
    if (cur.cops.size() != prev.cops.size()) return where + "cop count changed";
    const bool cops_turn = i % 2 == 1;
    const int expected_round = static_cast<int>((i + 1) / 2);
    if (t.entries[i].round != expected_round) return where + "round number " + std::to_string(t.entries[i].round);
    if (cops_turn) {
      if (cur.robber != prev.robber) return where + "robber moved on the cops' turn";
      for (std::size_t c = 0; c < cur.cops.size(); ++c) {
        if (!step_ok(g, prev.cops[c], cur.cops[c])) return where + "illegal move of cop " + std::to_string(c);
      }
    } else {
      if (cur.cops != prev.cops) return where + "cops moved on the robber's turn";
      if (!step_ok(g, prev.robber, cur.robber)) return where + "illegal robber move";
    }
    captured = cur.captured();
  }
  if (captured != t.captured()) return std::string("outcome does not match the final position");
  const int last_round = t.entries.back().round;
  if (t.captured() && t.rounds != last_round) return std::string("capture round mismatch");
  return std::nullopt;
}

std::string serialize_transcript(const Transcript& t) {
  std::ostringstream out;
  for (const auto& e : t.entries) {
    out << e.round << ';' << join(e.position.cops) << ';' << e.position.robber << '\n';
  }
  out << "# outcome " << (t.captured() ? "CAPTURED " : "SURVIVED ") << t.rounds << '\n';
  return out.str();
}

Transcript parse_transcript(const std::string& text) {
  Transcript t;
  std::istringstream in(text);
  std::string line;
  bool have_outcome = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream h(line.substr(1));
      std::string word, kind;
      int rounds = 0;
      if (h >> word >> kind >> rounds && word == "outcome" && (kind == "CAPTURED" || kind == "SURVIVED")) {
        t.outcome = kind == "CAPTURED" ? Outcome::kCaptured : Outcome::kSurvived;
        t.rounds = rounds;
        have_outcome = true;
      }
      continue;
    }
    const auto a = line.find(';');
    const auto b = a == std::string::npos ? std::string::npos : line.find(';', a + 1);
    if (b == std::string::npos) throw std::invalid_argument("transcript line " + std::to_string(line_no) + ": expected two ';'");
    try {
      TranscriptEntry e;
      e.round = std::stoi(line.substr(0, a));
      e.position.cops = split_vertices(line.substr(a + 1, b - a - 1));
      e.position.robber = std::stoi(line.substr(b + 1));
      t.entries.push_back(std::move(e));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("transcript line " + std::to_string(line_no) + ": bad number");
    }
  }
  if (!have_outcome) {
    // Infer from the final position.
    if (!t.entries.empty() && t.entries.back().position.captured()) {
      t.outcome = Outcome::kCaptured;
    }
    t.rounds = t.entries.empty() ? 0 : t.entries.back().round;
  }
  return t;
}

}  // namespace pursuit
