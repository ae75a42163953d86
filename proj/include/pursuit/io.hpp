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

// GraphDocument: the JSON interchange format of the command-line tool, and
// DOT export.
//
//   {"n": 4, "edges": [[0,1],[1,2]], "faces": [[0,1,2]],
//    "tags": ["D_VERTEX", ...], "crossings": [{"pair": [[0,2],[1,3]],
//    "kite": [0,1,2,3]}], "outer": true}
//
// Keys appear in this order; every key after "edges" is optional. Edges are
// written canonically (u < v, sorted).

#ifndef PURSUIT_IO_HPP_
#define PURSUIT_IO_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/constructions.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/outer.hpp"
#include "pursuit/policy.hpp"

namespace pursuit {

struct CrossingRecord {
  Edge first;
  Edge second;
  std::optional<std::array<Vertex, 4>> kite;

  bool operator==(const CrossingRecord&) const = default;
};

struct GraphDocument {
  Graph graph;
  std::optional<std::vector<Face>> faces;
  std::optional<std::vector<VertexTag>> tags;
  std::optional<std::vector<CrossingRecord>> crossings;
  bool outer = false;

  bool operator==(const GraphDocument&) const = default;
};

GraphDocument document_of(const Graph& g);
GraphDocument document_of(const EmbeddedGraph& e);
// Q' with the tags of the quadrangulation it came from.
GraphDocument document_of(const KiteCompletion& k, const std::vector<VertexTag>& tags);
GraphDocument document_of(const OuterDrawing& d);

// Kite map from the crossing records; throws if some record has no kite.
KiteMap kites_of(const GraphDocument& doc);

std::string to_json(const GraphDocument& doc);
// Throws std::invalid_argument on malformed documents.
GraphDocument parse_graph_document(const std::string& text);

// One node per vertex colored by tag, crossing edges dashed. An optional
// position marks cops (boxes) and the robber (double circle).
std::string to_dot(const GraphDocument& doc, const Position* overlay = nullptr);

}  // namespace pursuit

#endif  // PURSUIT_IO_HPP_
