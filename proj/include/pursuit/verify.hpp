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

// Claim-verification harnesses behind `pursuit verify`. Each returns one or
// more verdicts; a failed verdict carries the falsifying detail.

#ifndef PURSUIT_VERIFY_HPP_
#define PURSUIT_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "pursuit/constructions.hpp"
#include "pursuit/solver.hpp"

namespace pursuit {

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::string format_verdict(const Verdict& v);

struct VerifyOptions {
  SolveOptions solve;
  PentagonFill fill = PentagonFill::kWheel;
  int seeds = 20;
  int rounds = 10000;
  int samples = 1000;
  std::uint64_t seed = 1;
};

// Two cops lose on Q (prime = false) or Q' (prime = true): exact k = 2 solve,
// escape-set audit, and the escape rule against optimal cops.
std::vector<Verdict> verify_lower_bound(bool prime, const VerifyOptions& options);

// Three cops catch: the recursive strategy on Q' and on small kite-complete
// graphs against table-driven robbers.
std::vector<Verdict> verify_three_cops(const VerifyOptions& options);

// Outer 1-planar corpus: chordal iff cop-win, cop number at most two, and the
// invariant robber survives the optimal cop on non-chordal members.
std::vector<Verdict> verify_outer(const VerifyOptions& options);

// Arc structure of outer 1-planar drawings (consecutive cycle members are
// adjacent or joined by crossing cycle edges; at most three vertices attach
// to an open arc) over every chordless cycle of the corpus.
std::vector<Verdict> verify_structure(const VerifyOptions& options);

// Petersen 1-planarization and odd subdivision monotonicity.
std::vector<Verdict> verify_subdivision(const VerifyOptions& options);

// Shortest paths of Q' never use two mutually crossing edges.
std::vector<Verdict> verify_shortest_paths(const VerifyOptions& options);

}  // namespace pursuit

#endif  // PURSUIT_VERIFY_HPP_
