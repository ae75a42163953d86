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

#include "pursuit/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pursuit {

using Json = nlohmann::ordered_json;

GraphDocument document_of(const Graph& g) {
  GraphDocument doc;
  doc.graph = g;
  return doc;
}

GraphDocument document_of(const EmbeddedGraph& e) {
  GraphDocument doc;
  doc.graph = e.graph;
  doc.faces = e.faces;
  doc.tags = e.tags;
  return doc;
}

GraphDocument document_of(const KiteCompletion& k, const std::vector<VertexTag>& tags) {
  GraphDocument doc;
  doc.graph = k.graph;
  doc.tags = tags;
  std::vector<CrossingRecord> records;
  for (const Kite& kite : k.kites.kites()) records.push_back({kite.first, kite.second, kite.quad});
  doc.crossings = std::move(records);
  return doc;
}

GraphDocument document_of(const OuterDrawing& d) {
  GraphDocument doc;
  doc.graph = d.graph;
  doc.outer = true;
  return doc;
}

KiteMap kites_of(const GraphDocument& doc) {
  KiteMap map;
  if (!doc.crossings) return map;
  for (const auto& c : *doc.crossings) {
    if (!c.kite) throw std::invalid_argument("crossing record without a kite");
    map.add({c.first, c.second, *c.kite});
  }
  return map;
}

namespace {

Json edge_json(Edge e) { return Json::array({e.u, e.v}); }

Edge parse_edge(const Json& j, int n) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("edge must be a pair");
  const Vertex a = j[0].get<Vertex>();
  const Vertex b = j[1].get<Vertex>();
  if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
  return Edge(a, b);
}

}  // namespace

std::string to_json(const GraphDocument& doc) {
  Json j;
  j["n"] = doc.graph.num_vertices();
  Json edges = Json::array();
  for (const Edge& e : doc.graph.edges()) edges.push_back(edge_json(e));
  j["edges"] = std::move(edges);
  if (doc.faces) j["faces"] = *doc.faces;
  if (doc.tags) {
    Json tags = Json::array();
    for (VertexTag t : *doc.tags) tags.push_back(std::string(tag_name(t)));
    j["tags"] = std::move(tags);
  }
  if (doc.crossings) {
    Json list = Json::array();
    for (const auto& c : *doc.crossings) {
      Json rec;
      rec["pair"] = Json::array({edge_json(c.first), edge_json(c.second)});
      if (c.kite) rec["kite"] = *c.kite;
      list.push_back(std::move(rec));
    }
    j["crossings"] = std::move(list);
  }
  if (doc.outer) j["outer"] = true;
  return j.dump() + "\n";
}

GraphDocument parse_graph_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph document is not JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
      throw std::invalid_argument("graph document needs \"n\" and \"edges\"");
    }
    const int n = j["n"].get<int>();
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<Edge> edges;
    for (const Json& e : j["edges"]) edges.push_back(parse_edge(e, n));
    std::sort(edges.begin(), edges.end());
    GraphDocument doc;
    doc.graph = Graph::FromEdges(n, edges);
    if (j.contains("faces")) {
      doc.faces = j["faces"].get<std::vector<Face>>();
      for (const Face& f : *doc.faces) {
        for (Vertex v : f) {
          if (v < 0 || v >= n) throw std::invalid_argument("face vertex out of range");
        }
      }
    }
    if (j.contains("tags")) {
      std::vector<VertexTag> tags;
      for (const Json& t : j["tags"]) {
        auto tag = parse_tag(t.get<std::string>());
        if (!tag) throw std::invalid_argument("unknown vertex tag " + t.get<std::string>());
        tags.push_back(*tag);
      }
      if (static_cast<int>(tags.size()) != n) throw std::invalid_argument("tag list does not cover every vertex");
      doc.tags = std::move(tags);
    }
    if (j.contains("crossings")) {
      std::vector<CrossingRecord> records;
      for (const Json& c : j["crossings"]) {
        if (!c.contains("pair") || c["pair"].size() != 2) throw std::invalid_argument("crossing record needs a pair");
        CrossingRecord rec{parse_edge(c["pair"][0], n), parse_edge(c["pair"][1], n), std::nullopt};
        if (c.contains("kite")) rec.kite = c["kite"].get<std::array<Vertex, 4>>();
        records.push_back(rec);
      }
      doc.crossings = std::move(records);
    }
    if (j.contains("outer")) doc.outer = j["outer"].get<bool>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph document: ") + e.what());
  }
}

std::string to_dot(const GraphDocument& doc, const Position* overlay) {
  std::ostringstream out;
  out << "graph G {\n  node [style=filled];\n";
  const int n = doc.graph.num_vertices();
  for (Vertex v = 0; v < n; ++v) {
    out << "  " << v << " [";
    std::string color = "white";
    if (doc.tags) {
      switch ((*doc.tags)[v]) {
        case VertexTag::kDodecahedron:
          color = "tomato";
          break;
        case VertexTag::kApex:
          color = "lightblue";
          break;
        case VertexTag::kEdgeMidpoint:
          color = "palegreen";
          break;
        case VertexTag::kFaceVertex:
          color = "lightgray";
          break;
      }
      out << "class=\"" << tag_name((*doc.tags)[v]) << "\", ";
    }
    out << "fillcolor=" << color;
    if (overlay) {
      if (std::find(overlay->cops.begin(), overlay->cops.end(), v) != overlay->cops.end()) out << ", shape=box";
      if (overlay->robber == v) out << ", shape=doublecircle";
    }
    out << "];\n";
  }
  std::set<Edge> crossed;
  if (doc.crossings) {
    for (const auto& c : *doc.crossings) {
      crossed.insert(c.first);
      crossed.insert(c.second);
    }
  }
  for (const Edge& e : doc.graph.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (crossed.contains(e)) out << " [style=dashed]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pursuit
