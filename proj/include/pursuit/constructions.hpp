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

// Graph constructions that carry their embedding along: the dodecahedron D,
// its pentagon triangulation T, the quadrangulation Q, the optimal 1-planar
// graph Q' obtained by crossing diagonals, and the subdivision machinery used
// to turn a k-planar drawing into a 1-planar one.

#ifndef PURSUIT_CONSTRUCTIONS_HPP_
#define PURSUIT_CONSTRUCTIONS_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class VertexTag : std::uint8_t {
  kDodecahedron,  // original vertex of D
  kApex,          // vertex added inside a face of D to triangulate it
  kEdgeMidpoint,  // subdivides an edge of T
  kFaceVertex,    // added inside a triangle of T
};

std::string_view tag_name(VertexTag tag);
std::optional<VertexTag> parse_tag(std::string_view name);

using Face = std::vector<Vertex>;

// A graph with an explicit combinatorial embedding: every face is a directed
// vertex cycle and every dart (u, v) belongs to exactly one face.
struct EmbeddedGraph {
  Graph graph;
  std::vector<Face> faces;
  std::vector<VertexTag> tags;
  // Index into `faces` of a designated outer face, if the embedding is a disk
  // rather than a sphere.
  std::optional<std::size_t> outer_face;

  // Throws std::logic_error describing the first violated invariant: Euler's
  // relation, dart coverage, face edges present, tag vector size.
  void validate() const;
};

// One crossing of a 1-planar drawing: edges {a,b} and {c,d} cross inside the
// uncrossed quadrangle a-c-b-d.
struct Kite {
  Edge first;
  Edge second;
  std::array<Vertex, 4> quad;  // a, c, b, d
};

class KiteMap {
 public:
  KiteMap() = default;

  // Throws std::invalid_argument if an edge already crosses something.
  void add(const Kite& kite);

  const std::vector<Kite>& kites() const { return kites_; }
  std::size_t size() const { return kites_.size(); }

  // The edge crossing `e`, if any.
  std::optional<Edge> partner(Edge e) const;
  const Kite* kite_of(Edge e) const;
  bool crosses(Edge e, Edge f) const;
  bool is_crossed(Edge e) const { return index_.contains(Edge(e.u, e.v)); }

  // Checks the side edges exist in g and are themselves uncrossed.
  void validate(const Graph& g) const;

 private:
  std::vector<Kite> kites_;
  std::map<Edge, std::size_t> index_;
};

// A drawing described only by its crossings: for each edge (indexed by the
// graph's canonical edge order), the indices of the edges it crosses, in order
// from its lower endpoint to its higher endpoint.
struct CrossingDrawing {
  Graph graph;
  std::vector<std::vector<std::size_t>> crossings;

  // Largest number of crossings on one edge.
  int max_crossings() const;
  // Throws std::invalid_argument on asymmetric or repeated crossings, or
  // crossings between edges sharing an endpoint.
  void validate() const;
};

// Sub-edge level crossing list of a 1-planarized drawing.
struct OnePlanarCertificate {
  std::vector<std::pair<Edge, Edge>> crossings;
  std::map<Edge, int> crossings_per_edge;
  int max_per_edge = 0;
  int subdivisions = 0;
};

struct OnePlanarization {
  Graph graph;
  OnePlanarCertificate certificate;
};

EmbeddedGraph dodecahedron();

enum class PentagonFill {
  // One apex per face joined to the five corners.
  kWheel,
  // Per face, a ring u_0..u_4 with u_i adjacent to corners i and i+1, plus a
  // center joined to the ring. Two corners at distance two along the face
  // then share no new neighbor.
  kInnerRing,
};

// Triangulates every pentagonal face of d. Added vertices are tagged kApex.
EmbeddedGraph triangulate_pentagons(const EmbeddedGraph& d, PentagonFill fill = PentagonFill::kWheel);

// Subdivides every edge once and joins a new vertex inside each triangle to
// the three side midpoints.
EmbeddedGraph quadrangulate(const EmbeddedGraph& t);

struct KiteCompletion {
  Graph graph;
  KiteMap kites;
};

// Adds both diagonals of every non-outer quadrangular face.
KiteCompletion add_kite_diagonals(const EmbeddedGraph& q);

// The graph obtained from the non-crossing edges of a kite completion.
Graph uncrossed_subgraph(const KiteCompletion& k);

// Replaces every edge by a path with s internal vertices. Internal vertex i of
// the j-th canonical edge (u < v) gets id n + j*s + i, counted from u.
Graph subdivide_uniform(const Graph& g, int s);

// Subdivides each edge k-1 (k odd) or k (k even) times and places the crossings
// on distinct sub-edges. Throws std::invalid_argument for inconsistent drawings.
OnePlanarization one_planarize(const CrossingDrawing& d);

// Crossing lists of a straight-line drawing. Throws if a vertex lies in the
// relative interior of an edge or two edges overlap.
CrossingDrawing straight_line_drawing(const Graph& g, const std::vector<std::pair<double, double>>& coords);

// The Petersen graph with outer cycle 0..4, spokes i-(i+5) and inner
// pentagram (5+i)-(5+(i+2)%5), together with its standard 2-planar drawing.
Graph petersen_graph();
CrossingDrawing petersen_drawing();

// Convenience pipeline: Q and Q' from the dodecahedron.
struct QuadrangulationFamily {
  EmbeddedGraph d;
  EmbeddedGraph t;
  EmbeddedGraph q;
  KiteCompletion q_prime;
};
QuadrangulationFamily build_quadrangulation_family(PentagonFill fill = PentagonFill::kWheel);

// The cube as a quadrangulation of the sphere.
EmbeddedGraph cube();

// Starting from the cube, repeatedly picks a random face and nests a new
// 4-cycle inside it, each new vertex joined to one corner. Stays a
// 3-connected quadrangulation with 8 + 4 * insertions vertices.
EmbeddedGraph nested_quadrangulation(int insertions, std::uint64_t seed);

// V': midpoints of original dodecahedron edges, keyed by the D-edge.
std::map<Edge, Vertex> dodecahedron_edge_midpoints(const EmbeddedGraph& q);

}  // namespace pursuit

#endif  // PURSUIT_CONSTRUCTIONS_HPP_
