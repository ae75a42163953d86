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

#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "pursuit/constructions.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/io.hpp"
#include "pursuit/outer.hpp"

namespace pursuit {
namespace {

TEST(JsonTest, PlainGraph) {
  const std::string text = to_json(document_of(path_graph(3)));
  EXPECT_EQ(text, "{\"n\":3,\"edges\":[[0,1],[1,2]]}\n");
  EXPECT_EQ(parse_graph_document(text), document_of(path_graph(3)));
}

TEST(JsonTest, ConstructionsRoundTrip) {
  const auto f = build_quadrangulation_family();
  const GraphDocument docs[] = {
      document_of(f.d),
      document_of(f.q),
      document_of(f.q_prime, f.q.tags),
      document_of(random_outer_one_planar(12, 5)),
  };
  for (const GraphDocument& doc : docs) {
    const std::string text = to_json(doc);
    const GraphDocument back = parse_graph_document(text);
    EXPECT_EQ(back, doc);
    EXPECT_EQ(to_json(back), text);
  }
}

TEST(JsonTest, KeyOrderAndContents) {
  const auto f = build_quadrangulation_family();
  const std::string text = to_json(document_of(f.q_prime, f.q.tags));
  const auto n = text.find("\"n\"");
  const auto edges = text.find("\"edges\"");
  const auto tags = text.find("\"tags\"");
  const auto crossings = text.find("\"crossings\"");
  EXPECT_LT(n, edges);
  EXPECT_LT(edges, tags);
  EXPECT_LT(tags, crossings);
  EXPECT_NE(text.find("\"D_VERTEX\""), std::string::npos);
  const GraphDocument doc = parse_graph_document(text);
  EXPECT_EQ(kites_of(doc).size(), 180u);
  EXPECT_TRUE(parse_graph_document(to_json(document_of(random_outer_one_planar(6, 1)))).outer);
}

TEST(JsonTest, CanonicalizesEdges) {
  const GraphDocument doc = parse_graph_document(R"({"edges":[[2,1],[1,0]],"n":3})");
  EXPECT_EQ(to_json(doc), "{\"n\":3,\"edges\":[[0,1],[1,2]]}\n");
}

TEST(JsonTest, RejectsMalformedDocuments) {
  EXPECT_THROW(parse_graph_document("not json"), std::invalid_argument);
  EXPECT_THROW(parse_graph_document(R"({"n":2})"), std::invalid_argument);
  EXPECT_THROW(parse_graph_document(R"({"n":2,"edges":[[0,5]]})"), std::invalid_argument);
  EXPECT_THROW(parse_graph_document(R"({"n":2,"edges":[[0,1]],"tags":["NOPE","D_VERTEX"]})"), std::invalid_argument);
  EXPECT_THROW(parse_graph_document(R"({"n":2,"edges":[[0,1]],"tags":["D_VERTEX"]})"), std::invalid_argument);
  EXPECT_EQ(kites_of(document_of(path_graph(3))).size(), 0u);
  GraphDocument bare = document_of(complete_graph(4));
  bare.crossings = std::vector<CrossingRecord>{{Edge(0, 2), Edge(1, 3), std::nullopt}};
  EXPECT_THROW(kites_of(bare), std::invalid_argument);
  EXPECT_EQ(parse_graph_document(to_json(bare)), bare);
}

TEST(DotTest, StableAndStyled) {
  const auto f = build_quadrangulation_family();
  const GraphDocument doc = document_of(f.q_prime, f.q.tags);
  const std::string dot = to_dot(doc);
  EXPECT_EQ(dot, to_dot(parse_graph_document(to_json(doc))));
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
  std::size_t lines = 0;
  for (char c : dot) lines += c == '\n';
  // Header, node style, one line per vertex and per edge, closing brace.
  EXPECT_EQ(lines, 3u + 182u + 720u);
}

TEST(DotTest, Overlay) {
  const GraphDocument doc = document_of(cycle_graph(5));
  const Position pos{{0, 2}, 4};
  const std::string dot = to_dot(doc, &pos);
  EXPECT_NE(dot.find("  0 [fillcolor=white, shape=box];"), std::string::npos);
  EXPECT_NE(dot.find("  4 [fillcolor=white, shape=doublecircle];"), std::string::npos);
  EXPECT_EQ(to_dot(doc).find("doublecircle"), std::string::npos);
}

}  // namespace
}  // namespace pursuit
