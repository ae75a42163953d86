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

#ifndef PURSUIT_POLICY_HPP_
#define PURSUIT_POLICY_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class Side : std::uint8_t { kCops = 0, kRobber = 1 };

// Positions of the players in a running game. Cop order is significant here:
// strategies assign roles to individual cops.
struct Position {
  std::vector<Vertex> cops;
  Vertex robber = -1;

  bool captured() const;
  bool operator==(const Position&) const = default;
};

// Decides cop moves. Implementations may keep internal state derived from the
// history they are shown, but must be deterministic given identical inputs.
class CopPolicy {
 public:
  virtual ~CopPolicy() = default;
  virtual std::string name() const = 0;
  virtual int num_cops() const = 0;
  virtual std::vector<Vertex> place(const Graph& g) = 0;
  // `history` holds every position after each half-move, oldest first; its
  // last element equals `current`.
  virtual std::vector<Vertex> move(const Graph& g, std::span<const Position> history,
                                   const Position& current) = 0;
};

class RobberPolicy {
 public:
  virtual ~RobberPolicy() = default;
  virtual std::string name() const = 0;
  virtual Vertex place(const Graph& g, std::span<const Vertex> cops) = 0;
  virtual Vertex move(const Graph& g, std::span<const Position> history, const Position& current) = 0;
};

// Cops that never move from a fixed placement.
class StationaryCops final : public CopPolicy {
 public:
  explicit StationaryCops(std::vector<Vertex> placement) : placement_(std::move(placement)) {}
  std::string name() const override { return "stationary"; }
  int num_cops() const override { return static_cast<int>(placement_.size()); }
  std::vector<Vertex> place(const Graph&) override { return placement_; }
  std::vector<Vertex> move(const Graph&, std::span<const Position>, const Position& current) override {
    return current.cops;
  }

 private:
  std::vector<Vertex> placement_;
};

// Each cop steps along a shortest path toward the robber (lowest id on ties).
class GreedyCops final : public CopPolicy {
 public:
  explicit GreedyCops(std::vector<Vertex> placement) : placement_(std::move(placement)) {}
  std::string name() const override { return "greedy"; }
  int num_cops() const override { return static_cast<int>(placement_.size()); }
  std::vector<Vertex> place(const Graph&) override { return placement_; }
  std::vector<Vertex> move(const Graph& g, std::span<const Position> history, const Position& current) override;

 private:
  std::vector<Vertex> placement_;
};

class StationaryRobber final : public RobberPolicy {
 public:
  explicit StationaryRobber(Vertex start) : start_(start) {}
  std::string name() const override { return "stationary"; }
  Vertex place(const Graph&, std::span<const Vertex>) override { return start_; }
  Vertex move(const Graph&, std::span<const Position>, const Position& current) override { return current.robber; }

 private:
  Vertex start_;
};

// Starts as far as possible from the cops and steps to the neighbor that
// maximizes the distance to the nearest cop, staying put on ties and
// otherwise taking the lowest id.
class EvasiveRobber final : public RobberPolicy {
 public:
  std::string name() const override { return "evasive"; }
  Vertex place(const Graph& g, std::span<const Vertex> cops) override;
  Vertex move(const Graph& g, std::span<const Position> history, const Position& current) override;
};

}  // namespace pursuit

#endif  // PURSUIT_POLICY_HPP_
