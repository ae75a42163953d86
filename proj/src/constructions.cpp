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

#include "pursuit/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

namespace pursuit {

namespace {

using Point = std::pair<double, double>;

std::string edge_str(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

// Faces of a straight-line plane drawing, traced with the face on the left.
std::vector<Face> trace_faces(const Graph& g, const std::vector<Point>& xy) {
  const int n = g.num_vertices();
  std::vector<std::vector<Vertex>> ccw(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    ccw[v].assign(nb.begin(), nb.end());
    std::sort(ccw[v].begin(), ccw[v].end(), [&](Vertex a, Vertex b) {
      return std::atan2(xy[a].second - xy[v].second, xy[a].first - xy[v].first) <
             std::atan2(xy[b].second - xy[v].second, xy[b].first - xy[v].first);
    });
  }
  std::set<std::pair<Vertex, Vertex>> used;
  std::vector<Face> faces;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : ccw[u]) {
      if (used.contains({u, v})) continue;
      Face face;
      Vertex a = u;
      Vertex b = v;
      while (!used.contains({a, b})) {
        used.insert({a, b});
        face.push_back(a);
        // Next dart: at b, the neighbor clockwise-after a.
        const auto& rot = ccw[b];
        auto it = std::find(rot.begin(), rot.end(), a);
        Vertex c = it == rot.begin() ? rot.back() : *(it - 1);
        a = b;
        b = c;
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

Vertex add_vertex(int& n, std::vector<VertexTag>& tags, VertexTag tag) {
  tags.push_back(tag);
  return n++;
}

}  // namespace

std::string_view tag_name(VertexTag tag) {
  switch (tag) {
    case VertexTag::kDodecahedron:
      return "D_VERTEX";
    case VertexTag::kApex:
      return "T_APEX";
    case VertexTag::kEdgeMidpoint:
      return "EDGE_MID";
    case VertexTag::kFaceVertex:
      return "FACE_VERTEX";
  }
  return "UNKNOWN";
}

std::optional<VertexTag> parse_tag(std::string_view name) {
  for (VertexTag t : {VertexTag::kDodecahedron, VertexTag::kApex, VertexTag::kEdgeMidpoint, VertexTag::kFaceVertex}) {
    if (tag_name(t) == name) return t;
  }
  return std::nullopt;
}

void EmbeddedGraph::validate() const {
  const int n = graph.num_vertices();
  if (static_cast<int>(tags.size()) != n) throw std::logic_error("tag vector does not cover every vertex");
  std::set<std::pair<Vertex, Vertex>> darts;
  for (const Face& f : faces) {
    if (f.size() < 2) throw std::logic_error("degenerate face");
    for (std::size_t i = 0; i < f.size(); ++i) {
      Vertex a = f[i];
      Vertex b = f[(i + 1) % f.size()];
      if (!graph.has_edge(a, b)) throw std::logic_error("face uses missing edge " + edge_str(Edge(a, b)));
      if (!darts.insert({a, b}).second) {
        throw std::logic_error("dart " + std::to_string(a) + "->" + std::to_string(b) + " in two faces");
      }
    }
  }
  if (static_cast<std::int64_t>(darts.size()) != 2 * graph.num_edges()) {
    throw std::logic_error("some edge does not border exactly two faces");
  }
  const std::int64_t euler = n - graph.num_edges() + static_cast<std::int64_t>(faces.size());
  if (euler != 2) throw std::logic_error("Euler characteristic is " + std::to_string(euler) + ", expected 2");
  if (outer_face && *outer_face >= faces.size()) throw std::logic_error("outer face index out of range");
}

void KiteMap::add(const Kite& kite) {
  Kite k = kite;
  k.first = Edge(k.first.u, k.first.v);
  k.second = Edge(k.second.u, k.second.v);
  if (k.first == k.second) throw std::invalid_argument("an edge cannot cross itself");
  for (Edge e : {k.first, k.second}) {
    if (index_.contains(e)) throw std::invalid_argument("edge " + edge_str(e) + " is crossed twice");
  }
  index_[k.first] = kites_.size();
  index_[k.second] = kites_.size();
  kites_.push_back(k);
}

std::optional<Edge> KiteMap::partner(Edge e) const {
  const Kite* k = kite_of(e);
  if (!k) return std::nullopt;
  return k->first == Edge(e.u, e.v) ? k->second : k->first;
}

const Kite* KiteMap::kite_of(Edge e) const {
  auto it = index_.find(Edge(e.u, e.v));
  return it == index_.end() ? nullptr : &kites_[it->second];
}

bool KiteMap::crosses(Edge e, Edge f) const {
  auto p = partner(e);
  return p && *p == Edge(f.u, f.v);
}

void KiteMap::validate(const Graph& g) const {
  for (const Kite& k : kites_) {
    if (!g.has_edge(k.first.u, k.first.v) || !g.has_edge(k.second.u, k.second.v)) {
      throw std::logic_error("crossing edge missing from graph");
    }
    const auto& q = k.quad;
    // a, c, b, d: the crossing pair is {a,b} x {c,d}.
    if (Edge(q[0], q[2]) != k.first || Edge(q[1], q[3]) != k.second) {
      throw std::logic_error("kite quadrangle does not match its crossing pair");
    }
    for (int i = 0; i < 4; ++i) {
      Edge side(q[i], q[(i + 1) % 4]);
      if (!g.has_edge(side.u, side.v)) throw std::logic_error("kite side " + edge_str(side) + " missing");
      if (is_crossed(side)) throw std::logic_error("kite side " + edge_str(side) + " is crossed");
    }
  }
}

int CrossingDrawing::max_crossings() const {
  int best = 0;
  for (const auto& c : crossings) best = std::max(best, static_cast<int>(c.size()));
  return best;
}

void CrossingDrawing::validate() const {
  const auto edges = graph.edges();
  if (crossings.size() != edges.size()) throw std::invalid_argument("crossing lists do not match the edge count");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::set<std::size_t> seen;
    for (std::size_t f : crossings[e]) {
      if (f >= edges.size()) throw std::invalid_argument("crossing refers to a missing edge");
      if (f == e) throw std::invalid_argument("edge " + edge_str(edges[e]) + " crosses itself");
      if (!seen.insert(f).second) throw std::invalid_argument("edges cross twice: " + edge_str(edges[e]));
      const Edge a = edges[e];
      const Edge b = edges[f];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        throw std::invalid_argument("adjacent edges cross: " + edge_str(a) + " and " + edge_str(b));
      }
      const auto& back = crossings[f];
      if (std::count(back.begin(), back.end(), e) != 1) {
        throw std::invalid_argument("asymmetric crossing between " + edge_str(a) + " and " + edge_str(b));
      }
    }
  }
}

EmbeddedGraph dodecahedron() {
  // Outer pentagon a_i, ten-cycle m_j, inner pentagon d_i. a_i sits on the ray
  // of m_{2i}, d_i on the ray of m_{2i+1}, so the straight-line drawing is
  // plane.
  const int n = 20;
  auto a = [](int i) { return (i % 5 + 5) % 5; };
  auto m = [](int j) { return 5 + (j % 10 + 10) % 10; };
  auto d = [](int i) { return 15 + (i % 5 + 5) % 5; };
  std::vector<Edge> edges;
  std::vector<Point> xy(n);
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(a(i), a(i + 1));
    edges.emplace_back(a(i), m(2 * i));
    edges.emplace_back(d(i), d(i + 1));
    edges.emplace_back(d(i), m(2 * i + 1));
    const double ta = 2 * std::numbers::pi * i / 5;
    const double td = 2 * std::numbers::pi * (2 * i + 1) / 10;
    xy[a(i)] = {3 * std::cos(ta), 3 * std::sin(ta)};
    xy[d(i)] = {std::cos(td), std::sin(td)};
  }
  for (int j = 0; j < 10; ++j) {
    edges.emplace_back(m(j), m(j + 1));
    const double t = 2 * std::numbers::pi * j / 10;
    xy[m(j)] = {2 * std::cos(t), 2 * std::sin(t)};
  }
  EmbeddedGraph out;
  out.graph = Graph::FromEdges(n, edges);
  out.faces = trace_faces(out.graph, xy);
  out.tags.assign(n, VertexTag::kDodecahedron);
  out.validate();
  return out;
}

EmbeddedGraph triangulate_pentagons(const EmbeddedGraph& d, PentagonFill fill) {
  int n = d.graph.num_vertices();
  std::vector<VertexTag> tags = d.tags;
  std::vector<Edge> edges = d.graph.edges();
  std::vector<Face> faces;
  for (std::size_t fi = 0; fi < d.faces.size(); ++fi) {
    const Face& f = d.faces[fi];
    if (f.size() != 5) {
      throw std::invalid_argument("triangulate_pentagons: face " + std::to_string(fi) + " has length " +
                                  std::to_string(f.size()));
    }
    if (fill == PentagonFill::kWheel) {
      const Vertex apex = add_vertex(n, tags, VertexTag::kApex);
      for (std::size_t i = 0; i < 5; ++i) {
        edges.emplace_back(apex, f[i]);
        faces.push_back({f[i], f[(i + 1) % 5], apex});
      }
      continue;
    }
    std::array<Vertex, 5> ring{};
    for (auto& u : ring) u = add_vertex(n, tags, VertexTag::kApex);
    const Vertex center = add_vertex(n, tags, VertexTag::kApex);
    for (std::size_t i = 0; i < 5; ++i) {
      const std::size_t j = (i + 1) % 5;
      edges.emplace_back(ring[i], f[i]);
      edges.emplace_back(ring[i], f[j]);
      edges.emplace_back(ring[i], ring[j]);
      edges.emplace_back(ring[i], center);
      faces.push_back({f[i], f[j], ring[i]});
      faces.push_back({ring[i], f[j], ring[j]});
      faces.push_back({ring[i], ring[j], center});
    }
  }
  EmbeddedGraph out;
  out.graph = Graph::FromEdges(n, edges);
  out.faces = std::move(faces);
  out.tags = std::move(tags);
  out.validate();
  return out;
}

EmbeddedGraph quadrangulate(const EmbeddedGraph& t) {
  for (const Face& f : t.faces) {
    if (f.size() != 3) throw std::invalid_argument("quadrangulate: every face must be a triangle");
  }
  int n = t.graph.num_vertices();
  std::vector<VertexTag> tags = t.tags;
  std::map<Edge, Vertex> mid;
  std::vector<Edge> edges;
  for (const Edge& e : t.graph.edges()) {
    const Vertex m = add_vertex(n, tags, VertexTag::kEdgeMidpoint);
    mid[e] = m;
    edges.emplace_back(e.u, m);
    edges.emplace_back(m, e.v);
  }
  std::vector<Face> faces;
  for (const Face& f : t.faces) {
    const Vertex hub = add_vertex(n, tags, VertexTag::kFaceVertex);
    std::array<Vertex, 3> side{};
    for (int i = 0; i < 3; ++i) {
      side[i] = mid.at(Edge(f[i], f[(i + 1) % 3]));  // midpoint of f[i] f[i+1]
      edges.emplace_back(hub, side[i]);
    }
    for (int i = 0; i < 3; ++i) {
      // Corner f[i] sits between the midpoint of its outgoing side and that
      // of its incoming side.
      faces.push_back({f[i], side[i], hub, side[(i + 2) % 3]});
    }
  }
  EmbeddedGraph out;
  out.graph = Graph::FromEdges(n, edges);
  out.faces = std::move(faces);
  out.tags = std::move(tags);
  if (t.outer_face) throw std::invalid_argument("quadrangulate: expects a closed triangulation");
  out.validate();
  return out;
}

KiteCompletion add_kite_diagonals(const EmbeddedGraph& q) {
  q.validate();
  for (std::size_t fi = 0; fi < q.faces.size(); ++fi) {
    if (q.outer_face && *q.outer_face == fi) continue;
    if (q.faces[fi].size() != 4) throw std::invalid_argument("add_kite_diagonals: non-quadrangular face");
  }
  if (!q.outer_face && !connectivity_at_least(q.graph, 3)) {
    throw std::invalid_argument("add_kite_diagonals: closed quadrangulation must be 3-connected");
  }
  std::vector<Edge> edges = q.graph.edges();
  std::set<Edge> present(edges.begin(), edges.end());
  KiteMap kites;
  for (std::size_t fi = 0; fi < q.faces.size(); ++fi) {
    if (q.outer_face && *q.outer_face == fi) continue;
    const Face& f = q.faces[fi];
    const Edge first(f[0], f[2]);
    const Edge second(f[1], f[3]);
    for (Edge e : {first, second}) {
      if (!present.insert(e).second) {
        throw std::invalid_argument("add_kite_diagonals: diagonal " + edge_str(e) + " would duplicate an edge");
      }
      edges.push_back(e);
    }
    kites.add(Kite{first, second, {f[0], f[1], f[2], f[3]}});
  }
  KiteCompletion out{Graph::FromEdges(q.graph.num_vertices(), edges), std::move(kites)};
  out.kites.validate(out.graph);
  return out;
}

Graph uncrossed_subgraph(const KiteCompletion& k) {
  std::vector<Edge> kept;
  for (const Edge& e : k.graph.edges()) {
    if (!k.kites.is_crossed(e)) kept.push_back(e);
  }
  return Graph::FromEdges(k.graph.num_vertices(), kept);
}

Graph subdivide_uniform(const Graph& g, int s) {
  if (s < 0) throw std::invalid_argument("subdivide_uniform: negative subdivision count");
  const auto edges = g.edges();
  const int n = g.num_vertices();
  std::vector<Edge> out;
  out.reserve(edges.size() * (s + 1));
  for (std::size_t j = 0; j < edges.size(); ++j) {
    Vertex prev = edges[j].u;
    for (int i = 0; i < s; ++i) {
      const auto x = static_cast<Vertex>(n + static_cast<int>(j) * s + i);
      out.emplace_back(prev, x);
      prev = x;
    }
    out.emplace_back(prev, edges[j].v);
  }
  return Graph::FromEdges(n + s * static_cast<int>(edges.size()), out);
}

OnePlanarization one_planarize(const CrossingDrawing& d) {
  d.validate();
  const int k = d.max_crossings();
  const int s = k % 2 == 1 ? k - 1 : k;
  const auto edges = d.graph.edges();
  const int n = d.graph.num_vertices();

  // Sub-edge i of edge j runs between path vertex i and i+1, where the path is
  // u, x_0, ..., x_{s-1}, v.
  auto path_vertex = [&](std::size_t j, int i) -> Vertex {
    if (i == 0) return edges[j].u;
    if (i == s + 1) return edges[j].v;
    return static_cast<Vertex>(n + static_cast<int>(j) * s + (i - 1));
  };
  auto sub_edge = [&](std::size_t j, int i) { return Edge(path_vertex(j, i), path_vertex(j, i + 1)); };

  OnePlanarization out;
  out.graph = subdivide_uniform(d.graph, s);
  out.certificate.subdivisions = s;
  for (const Edge& e : out.graph.edges()) out.certificate.crossings_per_edge[e] = 0;

  for (std::size_t j = 0; j < edges.size(); ++j) {
    const auto& list = d.crossings[j];
    if (static_cast<int>(list.size()) > s + 1) {
      throw std::invalid_argument("one_planarize: edge " + edge_str(edges[j]) + " has more crossings than sub-edges");
    }
    for (std::size_t pos = 0; pos < list.size(); ++pos) {
      const std::size_t f = list[pos];
      if (f < j) continue;  // recorded from the other side
      const auto& other = d.crossings[f];
      const auto back = static_cast<int>(std::find(other.begin(), other.end(), j) - other.begin());
      const Edge a = sub_edge(j, static_cast<int>(pos));
      const Edge b = sub_edge(f, back);
      out.certificate.crossings.emplace_back(a, b);
      ++out.certificate.crossings_per_edge[a];
      ++out.certificate.crossings_per_edge[b];
    }
  }
  for (const auto& [e, c] : out.certificate.crossings_per_edge) {
    out.certificate.max_per_edge = std::max(out.certificate.max_per_edge, c);
  }
  if (out.certificate.max_per_edge > 1) throw std::invalid_argument("one_planarize: assignment is not 1-planar");
  return out;
}

CrossingDrawing straight_line_drawing(const Graph& g, const std::vector<Point>& xy) {
  if (static_cast<int>(xy.size()) != g.num_vertices()) throw std::invalid_argument("one coordinate per vertex");
  const auto edges = g.edges();
  auto cross = [](Point o, Point a, Point b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  constexpr double kEps = 1e-12;
  CrossingDrawing d;
  d.graph = g;
  d.crossings.assign(edges.size(), {});
  std::vector<std::vector<std::pair<double, std::size_t>>> hits(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge a = edges[i];
      const Edge b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      const Point p = xy[a.u], p2 = xy[a.v], q = xy[b.u], q2 = xy[b.v];
      const double d1 = cross(p, p2, q), d2 = cross(p, p2, q2);
      const double d3 = cross(q, q2, p), d4 = cross(q, q2, p2);
      if (std::abs(d1) < kEps || std::abs(d2) < kEps || std::abs(d3) < kEps || std::abs(d4) < kEps) {
        // Touching or collinear configurations are not simple drawings.
        const bool separated = (d1 > kEps && d2 > kEps) || (d1 < -kEps && d2 < -kEps) ||
                               (d3 > kEps && d4 > kEps) || (d3 < -kEps && d4 < -kEps);
        if (!separated) throw std::invalid_argument("degenerate drawing near " + edge_str(a) + " / " + edge_str(b));
        continue;
      }
      if ((d1 > 0) != (d2 > 0) && (d3 > 0) != (d4 > 0)) {
        const double ta = d3 / (d3 - d4);  // parameter along a from a.u
        const double tb = d1 / (d1 - d2);  // parameter along b from b.u
        hits[i].emplace_back(ta, j);
        hits[j].emplace_back(tb, i);
      }
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::sort(hits[i].begin(), hits[i].end());
    for (const auto& [t, j] : hits[i]) d.crossings[i].push_back(j);
  }
  d.validate();
  return d;
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::FromEdges(10, edges);
}

CrossingDrawing petersen_drawing() {
  std::vector<Point> xy(10);
  for (int i = 0; i < 5; ++i) {
    const double t = std::numbers::pi / 2 + 2 * std::numbers::pi * i / 5;
    xy[i] = {2 * std::cos(t), 2 * std::sin(t)};
    xy[i + 5] = {std::cos(t), std::sin(t)};
  }
  return straight_line_drawing(petersen_graph(), xy);
}

QuadrangulationFamily build_quadrangulation_family(PentagonFill fill) {
  QuadrangulationFamily f;
  f.d = dodecahedron();
  f.t = triangulate_pentagons(f.d, fill);
  f.q = quadrangulate(f.t);
  f.q_prime = add_kite_diagonals(f.q);
  return f;
}

std::map<Edge, Vertex> dodecahedron_edge_midpoints(const EmbeddedGraph& q) {
  std::map<Edge, Vertex> out;
  for (Vertex v = 0; v < q.graph.num_vertices(); ++v) {
    if (q.tags[v] != VertexTag::kEdgeMidpoint) continue;
    std::vector<Vertex> ends;
    for (Vertex w : q.graph.neighbors(v)) {
      if (q.tags[w] == VertexTag::kDodecahedron) ends.push_back(w);
    }
    if (ends.size() == 2) out[Edge(ends[0], ends[1])] = v;
  }
  return out;
}

EmbeddedGraph cube() {
  EmbeddedGraph c;
  std::vector<Edge> edges;
  for (int i = 0; i < 4; ++i) {
    edges.emplace_back(i, (i + 1) % 4);
    edges.emplace_back(4 + i, 4 + (i + 1) % 4);
    edges.emplace_back(i, i + 4);
  }
  c.graph = Graph::FromEdges(8, edges);
  c.faces = {{0, 3, 2, 1}, {4, 5, 6, 7}};
  for (int i = 0; i < 4; ++i) {
    const int j = (i + 1) % 4;
    c.faces.push_back({i, j, j + 4, i + 4});
  }
  c.tags.assign(8, VertexTag::kFaceVertex);
  c.validate();
  return c;
}

EmbeddedGraph nested_quadrangulation(int insertions, std::uint64_t seed) {
  if (insertions < 0) throw std::invalid_argument("insertions must be non-negative");
  EmbeddedGraph q = cube();
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges = q.graph.edges();
  int n = q.graph.num_vertices();
  for (int t = 0; t < insertions; ++t) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, q.faces.size() - 1)(rng);
    const Face f = q.faces[k];
    std::array<Vertex, 4> x{};
    for (auto& v : x) v = add_vertex(n, q.tags, VertexTag::kFaceVertex);
    q.faces.erase(q.faces.begin() + static_cast<std::ptrdiff_t>(k));
    for (int i = 0; i < 4; ++i) {
      const int j = (i + 1) % 4;
      edges.emplace_back(f[i], x[i]);
      edges.emplace_back(x[i], x[j]);
      q.faces.push_back({f[i], f[j], x[j], x[i]});
    }
    q.faces.push_back({x[0], x[1], x[2], x[3]});
  }
  q.graph = Graph::FromEdges(n, edges);
  q.validate();
  return q;
}

}  // namespace pursuit
