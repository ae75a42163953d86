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

// Small deterministic graph families and seeded random corpora.

#ifndef PURSUIT_GENERATORS_HPP_
#define PURSUIT_GENERATORS_HPP_

#include <cstdint>

#include "pursuit/graph.hpp"

namespace pursuit {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

// Uniform random labelled tree (Pruefer sequence).
Graph random_tree(int n, std::uint64_t seed);

// A random spanning tree plus each remaining pair independently with
// probability p. Always connected.
Graph random_connected_graph(int n, double p, std::uint64_t seed);

}  // namespace pursuit

#endif  // PURSUIT_GENERATORS_HPP_
