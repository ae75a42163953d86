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

// Outer k-planar drawings: vertices 0..n-1 sit on a circle in id order and
// every edge is a chord, so two edges cross exactly when their endpoints
// interleave. Arc V(u, w) is the set of vertices strictly after u and before
// w going up in cyclic order.

#ifndef PURSUIT_OUTER_HPP_
#define PURSUIT_OUTER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pursuit/graph.hpp"
#include "pursuit/policy.hpp"

namespace pursuit {

struct OuterDrawing {
  Graph graph;
  int k = 1;
};

bool chords_cross(Edge a, Edge b);

std::vector<std::pair<Edge, Edge>> crossing_pairs(const OuterDrawing& d);

struct OuterValidation {
  bool valid = false;
  int max_crossings = 0;
  std::map<Edge, int> counts;  // every edge, crossed or not
};
OuterValidation validate_outer_k(const OuterDrawing& d, int k);

struct CycleWitness {
  std::vector<Vertex> cycle;  // in cycle order, starting at its lowest vertex
  std::vector<Vertex> cyclic_order;  // the same vertices in drawing order

  // Throws std::invalid_argument unless G[U] is exactly a cycle of length
  // at least four.
  void validate(const Graph& g) const;
};

CycleWitness make_witness(std::vector<Vertex> cycle);

std::optional<CycleWitness> find_chordless_cycle(const Graph& g);

// Every induced cycle of length at least four, up to `limit` of them.
std::vector<CycleWitness> chordless_cycles(const Graph& g, std::size_t limit);

// Vertices strictly between u and w going up cyclically.
std::vector<Vertex> open_arc(int n, Vertex u, Vertex w);

struct StructureReport {
  Vertex u = -1;
  Vertex w = -1;
  bool adjacent = false;
  // Crossing cycle edges incident to u and w, if any.
  std::optional<std::pair<Edge, Edge>> crossing;
  // Vertices outside V(u, w) adjacent into it.
  std::vector<Vertex> attached;
  bool prop1 = false;
  bool cor1 = false;
};

// u, w must be members of U with no other member of U on the arc from u up to
// w. Throws std::invalid_argument otherwise or when d is not outer 1-planar.
StructureReport check_structure(const OuterDrawing& d, Vertex u, Vertex w, const CycleWitness& U);

// The report for every consecutive pair of U along the drawing.
std::vector<StructureReport> check_all_pairs(const OuterDrawing& d, const CycleWitness& U);

// Robber keeping the two invariants of the chordal characterization against
// one cop. Throws std::invalid_argument when U is not a chordless cycle of
// length at least four; raises ClaimViolation when no restoring move exists.
std::unique_ptr<RobberPolicy> robber_policy_outer(const OuterDrawing& d, const CycleWitness& U);

// Same with U found by find_chordless_cycle; refuses chordal graphs.
std::unique_ptr<RobberPolicy> robber_policy_outer(const OuterDrawing& d);

// Connected outer 1-planar drawing on n >= 3 vertices. Half of the seeds
// plant a chordless cycle of length at least four.
OuterDrawing random_outer_one_planar(int n, std::uint64_t seed);

}  // namespace pursuit

#endif  // PURSUIT_OUTER_HPP_
