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

// Acceptance suite: one PASS/FAIL line per criterion, plus INFO lines for
// supplementary runs. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pursuit/constructions.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/outer.hpp"
#include "pursuit/simulate.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/strategies.hpp"

namespace {

using namespace pursuit;
using Clock = std::chrono::steady_clock;

bool all_passed = true;

void criterion(int id, bool pass, const std::string& detail, Clock::time_point start) {
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << "CRITERION " << id << (pass ? " PASS " : " FAIL ") << detail << " [" << std::fixed;
  std::cout.precision(1);
  std::cout << secs << "s]" << std::endl;
  all_passed = all_passed && pass;
}

void info(const std::string& line) { std::cout << "INFO " << line << std::endl; }

std::vector<Vertex> random_placement(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Vertex> out;
  for (int i = 0; i < k; ++i) out.push_back(static_cast<Vertex>(rng() % n));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

void solver_oracles() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1001);
  int tree_bad = 0;
  for (int i = 0; i < 50; ++i) {
    const Graph t = oracle::random_graph(2 + i % 29, 0.0, rng);
    tree_bad += cop_number(t, 3).value != 1;
  }
  int cycle_bad = 0;
  for (int n = 4; n <= 12; ++n) cycle_bad += cop_number(cycle_graph(n), 3).value != 2;
  const auto petersen = cop_number(petersen_graph(), 3).value;
  int mismatches = 0;
  int oracle_mismatches = 0;
  int cop_win = 0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    const int n = 1 + i % 8;
    const double p = 0.05 + 0.1 * (i / 8 % 8);
    const Graph g = oracle::random_graph(n, p, rng);
    const bool dismantlable = dismantling_order(g).has_value();
    const bool one = solve(g, 1).cops_win();
    mismatches += dismantlable != one;
    oracle_mismatches += dismantlable != oracle::dismantlable(g);
    cop_win += one;
  }
  std::ostringstream d;
  d << "trees " << 50 - tree_bad << "/50 at 1; cycles C4..C12 " << 9 - cycle_bad << "/9 at 2; petersen "
    << (petersen ? std::to_string(*petersen) : "exceeds 3") << "; " << samples << " graphs n<=8 (" << cop_win
    << " cop-win), dismantling/solver mismatches " << mismatches << ", dismantling/oracle mismatches "
    << oracle_mismatches;
  criterion(1, tree_bad == 0 && cycle_bad == 0 && petersen == 3 && mismatches == 0 && oracle_mismatches == 0,
            d.str(), start);
}

// ---------------------------------------------------------------------------

struct LowerBoundTables {
  QuadrangulationFamily family;
  std::optional<GameTable> q;
  std::optional<GameTable> q_prime;
  double solve_seconds = 0;
};

std::string describe(const GameTable& t) {
  std::ostringstream d;
  d << (t.cops_win() ? "cop-win" : "robber-win") << " (" << t.winning_placements() << " of " << t.ranker().count()
    << " placements win for the cops)";
  return d.str();
}

LowerBoundTables solve_family(PentagonFill fill) {
  const auto started = Clock::now();
  LowerBoundTables out{build_quadrangulation_family(fill), std::nullopt, std::nullopt};
  out.q.emplace(solve(out.family.q.graph, 2));
  out.q_prime.emplace(solve(out.family.q_prime.graph, 2));
  out.solve_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return out;
}

void lower_bounds(const LowerBoundTables& w, const LowerBoundTables& ring) {
  const auto start = Clock::now();
  const Graph& q = w.family.q.graph;
  const Graph& qp = w.family.q_prime.graph;
  const bool counts = q.num_vertices() == 182 && q.num_edges() == 360 && w.family.q.faces.size() == 180 &&
                      qp.num_edges() == 4 * qp.num_vertices() - 8 && qp.num_edges() == 720;
  std::ostringstream d;
  d << "Q " << q.num_vertices() << "/" << q.num_edges() << "/" << w.family.q.faces.size() << " Q' edges "
    << qp.num_edges() << "; k=2 on Q: " << describe(*w.q) << "; k=2 on Q': " << describe(*w.q_prime) << "; build and solves took " << std::fixed
    << std::setprecision(1) << w.solve_seconds << "s";
  criterion(2, counts && !w.q->cops_win() && !w.q_prime->cops_win(), d.str(), start);

  std::ostringstream r;
  r << "inner-ring fill: Q " << ring.family.q.graph.num_vertices() << "/" << ring.family.q.graph.num_edges() << "/"
    << ring.family.q.faces.size() << " Q' edges " << ring.family.q_prime.graph.num_edges() << "; k=2 on Q: "
    << describe(*ring.q) << "; k=2 on Q': " << describe(*ring.q_prime) << "; build and solves took " << std::fixed
    << std::setprecision(1) << ring.solve_seconds << "s";
  info(r.str());
}

// ---------------------------------------------------------------------------

struct EscapeTally {
  int games = 0;
  int survived = 0;
  int captured = 0;
  int violations = 0;
  std::string first_problem;
};

EscapeTally escape_runs(const Graph& g, const std::vector<VertexTag>& tags, const GameTable& table, int seeds,
                        int rounds) {
  EscapeTally t;
  for (int seed = 0; seed < seeds; ++seed) {
    for (TieBreak tie : {TieBreak::kLexicographic, TieBreak::kPursuit}) {
      ++t.games;
      auto cops = optimal_cop_policy(table, random_placement(g.num_vertices(), 2, 2000 + seed), tie);
      auto robber = robber_escape_policy(g, tags);
      try {
        const Transcript tr = simulate(g, *cops, *robber, rounds);
        if (tr.captured()) {
          ++t.captured;
          if (t.first_problem.empty()) t.first_problem = "captured in round " + std::to_string(tr.rounds);
        } else {
          ++t.survived;
        }
      } catch (const ClaimViolation& e) {
        ++t.violations;
        if (t.first_problem.empty()) t.first_problem = e.what();
      }
    }
  }
  return t;
}

std::string describe(const EscapeTally& t) {
  std::ostringstream d;
  d << t.survived << "/" << t.games << " survived, " << t.captured << " captured, " << t.violations
    << " CLAIM_VIOLATION";
  if (!t.first_problem.empty()) d << " (first: " << t.first_problem << ")";
  return d.str();
}

void escape_soundness(const LowerBoundTables& w, const LowerBoundTables& ring) {
  const auto start = Clock::now();
  const auto& tags = w.family.q.tags;
  const EscapeTally q = escape_runs(w.family.q.graph, tags, *w.q, 20, 10000);
  const EscapeTally qp = escape_runs(w.family.q_prime.graph, tags, *w.q_prime, 20, 10000);
  const bool pass = q.survived == q.games && qp.survived == qp.games;
  criterion(3, pass, "20 seeds x 2 tie-breaks, 10^4 rounds; Q: " + describe(q) + "; Q': " + describe(qp), start);

  const EscapeTally rq = escape_runs(ring.family.q.graph, ring.family.q.tags, *ring.q, 20, 10000);
  const EscapeTally rqp = escape_runs(ring.family.q_prime.graph, ring.family.q.tags, *ring.q_prime, 20, 10000);
  info("inner-ring escape rule; Q: " + describe(rq) + "; Q': " + describe(rqp));
  const EscapeAudit aw = audit_escape_sets(w.family.q.graph, tags);
  const EscapeAudit ar = audit_escape_sets(ring.family.q.graph, ring.family.q.tags);
  info("escape-set audit (pairwise intersections equal {r}): wheel " + std::to_string(aw.violations) + "/" +
       std::to_string(aw.pairs_checked) + " pairs violate, inner-ring " + std::to_string(ar.violations) + "/" +
       std::to_string(ar.pairs_checked));
}

// ---------------------------------------------------------------------------

struct ChaseResult {
  bool captured = false;
  int rounds = 0;
  std::string problem;
};

ChaseResult chase(const Graph& g, const KiteMap& kites, RobberPolicy& robber) {
  ChaseResult r;
  const int horizon = 50 * g.num_vertices();
  auto cops = three_cop_policy(g, kites);
  try {
    const Transcript t = simulate(g, *cops, robber, horizon);
    r.captured = t.captured();
    r.rounds = t.rounds;
    if (auto err = check_transcript(g, t)) r.problem = "illegal transcript: " + *err;
    if (!r.captured) r.problem = "not captured within " + std::to_string(horizon) + " rounds\n" + serialize_transcript(t);
  } catch (const ClaimViolation& e) {
    r.problem = std::string("CLAIM_VIOLATION ") + e.what();
  }
  return r;
}

void three_cops(const LowerBoundTables& w, const LowerBoundTables& ring) {
  const auto start = Clock::now();
  bool pass = true;
  std::ostringstream d;
  auto run = [&](const std::string& label, const Graph& g, const KiteMap& kites, RobberPolicy& robber,
                 std::ostringstream& out, bool counts) {
    const ChaseResult r = chase(g, kites, robber);
    if (counts) pass = pass && r.captured && r.problem.empty();
    out << label << (r.captured ? " captured in " + std::to_string(r.rounds) : " NOT captured") << "; ";
    if (!r.problem.empty()) std::cout << "TRANSCRIPT " << label << ": " << r.problem << std::endl;
  };
  {
    auto subset = table_subset_robber_policy(*w.q_prime);
    EvasiveRobber evasive;
    run("Q' vs table-subset robber", w.family.q_prime.graph, w.family.q_prime.kites, *subset, d, true);
    run("Q' vs evasive robber", w.family.q_prime.graph, w.family.q_prime.kites, evasive, d, true);
  }
  int small_captured = 0;
  int small_games = 0;
  int worst = 0;
  for (int i = 0; i < 20; ++i) {
    const EmbeddedGraph q = nested_quadrangulation(i % 9, 3000 + i);
    const KiteCompletion k = add_kite_diagonals(q);
    const GameTable table = solve(k.graph, 3);
    for (TieBreak tie : {TieBreak::kLexicographic, TieBreak::kPursuit}) {
      auto robber = optimal_robber_policy(table, tie);
      const ChaseResult r = chase(k.graph, k.kites, *robber);
      ++small_games;
      if (r.captured && r.problem.empty()) {
        ++small_captured;
        worst = std::max(worst, r.rounds);
      } else {
        pass = false;
        std::cout << "TRANSCRIPT small instance " << i << ": " << r.problem << std::endl;
      }
    }
  }
  d << "20 nested instances (n=8..40) vs exact k=3 optimal robber: " << small_captured << "/" << small_games
    << " captured, slowest " << worst << " rounds; horizon 50n";
  criterion(4, pass, d.str(), start);

  std::ostringstream r;
  auto subset = table_subset_robber_policy(*ring.q_prime);
  EvasiveRobber evasive;
  run("inner-ring Q' vs table-subset robber", ring.family.q_prime.graph, ring.family.q_prime.kites, *subset, r, false);
  run("inner-ring Q' vs evasive robber", ring.family.q_prime.graph, ring.family.q_prime.kites, evasive, r, false);
  info(r.str());
}

// ---------------------------------------------------------------------------

void subdivision_pipeline() {
  const auto start = Clock::now();
  const OnePlanarization p = one_planarize(petersen_drawing());
  // Recount the certificate: every crossing is between two edges of the
  // output, and no sub-edge takes part in two crossings.
  std::map<Edge, int> per_edge;
  bool edges_ok = true;
  for (const auto& [a, b] : p.certificate.crossings) {
    edges_ok = edges_ok && p.graph.has_edge(a.u, a.v) && p.graph.has_edge(b.u, b.v);
    ++per_edge[a];
    ++per_edge[b];
  }
  int max_per_edge = 0;
  for (const auto& [e, c] : per_edge) max_per_edge = std::max(max_per_edge, c);
  const bool two_cops_lose = !solve(p.graph, 2).cops_win();

  std::mt19937_64 rng(5005);
  int violations = 0;
  int exceptions = 0;
  int checked_nontrivial = 0;
  for (int i = 0; i < 1000; ++i) {
    try {
      const Graph g = oracle::random_graph(2 + i % 7, 0.1 + 0.1 * (i / 7 % 5), rng);
      const int c = *cop_number(g, 3).value;
      const Graph s = subdivide_uniform(g, 2);
      if (c >= 2) {
        ++checked_nontrivial;
        violations += solve(s, c - 1).cops_win();
      }
    } catch (const std::exception&) {
      ++exceptions;
    }
  }
  std::ostringstream d;
  d << "petersen 1-planarization: " << p.graph.num_vertices() << " vertices, " << p.certificate.crossings.size()
    << " crossings, certificate max " << p.certificate.max_per_edge << " (recount " << max_per_edge << "), k=2 "
    << (two_cops_lose ? "robber-win so c>=3" : "cop-win") << "; monotonicity on 1000 graphs n<=8 (path length 3, "
    << checked_nontrivial << " with c>=2): " << violations << " violations, " << exceptions << " exceptions";
  criterion(5,
            p.graph.num_vertices() == 40 && p.certificate.max_per_edge == 1 && max_per_edge == 1 && edges_ok &&
                two_cops_lose && violations == 0 && exceptions == 0,
            d.str(), start);
}

// ---------------------------------------------------------------------------

// A uniformly chosen shortest u-v path, built by walking down BFS layers.
Path random_geodesic(const Graph& g, Vertex u, Vertex v, std::mt19937_64& rng) {
  const auto to_v = oracle::distances(g, v);
  Path p{u};
  while (p.back() != v) {
    std::vector<Vertex> next;
    for (Vertex w : g.neighbors(p.back())) {
      if (to_v[w] == to_v[p.back()] - 1) next.push_back(w);
    }
    p.push_back(next[rng() % next.size()]);
  }
  return p;
}

int crossing_pairs_on(const KiteMap& kites, const Path& p) {
  int bad = 0;
  for (std::size_t x = 0; x + 1 < p.size(); ++x) {
    for (std::size_t y = x + 1; y + 1 < p.size(); ++y) {
      bad += kites.crosses(Edge(p[x], p[x + 1]), Edge(p[y], p[y + 1]));
    }
  }
  return bad;
}

void outer_corpus_and_structure(const LowerBoundTables& w) {
  const auto start = Clock::now();
  int chordal = 0;
  int equivalence_bad = 0;
  int over_two = 0;
  int non_chordal = 0;
  int games = 0;
  int survived = 0;
  int violations = 0;
  std::string first_problem;
  int triples = 0;
  int prop1_bad = 0;
  int cor1_bad = 0;
  int invalid = 0;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    const OuterDrawing d = random_outer_one_planar(3 + s % 12, s);
    invalid += !validate_outer_k(d, 1).valid || !is_connected(d.graph);
    const bool is_ch = is_chordal(d.graph).chordal;
    const GameTable one = solve(d.graph, 1);
    const bool cop_win = one.cops_win();
    chordal += is_ch;
    equivalence_bad += is_ch != cop_win;
    if (!cop_win && !solve(d.graph, 2).cops_win()) ++over_two;
    if (is_ch) continue;
    ++non_chordal;
    for (const CycleWitness& u : chordless_cycles(d.graph, 50)) {
      for (const StructureReport& r : check_all_pairs(d, u)) {
        ++triples;
        prop1_bad += !r.prop1;
        cor1_bad += !r.cor1;
      }
    }
    for (TieBreak tie : {TieBreak::kLexicographic, TieBreak::kPursuit}) {
      ++games;
      auto cop = optimal_cop_policy(one, tie);
      try {
        auto robber = robber_policy_outer(d);
        const Transcript t = simulate(d.graph, *cop, *robber, 1000);
        survived += !t.captured();
        if (t.captured() && first_problem.empty()) first_problem = "captured on seed " + std::to_string(s);
      } catch (const ClaimViolation& e) {
        ++violations;
        if (first_problem.empty()) first_problem = e.what();
      }
    }
  }
  std::ostringstream d6;
  d6 << "10^4 drawings n=3..14 (" << invalid << " invalid): " << chordal << " chordal, " << non_chordal
     << " non-chordal; chordal/cop-win mismatches " << equivalence_bad << "; needing >2 cops " << over_two
     << "; outer robber vs optimal cop (both tie-breaks, 10^3 rounds): " << survived << "/" << games << " survived, "
     << violations << " CLAIM_VIOLATION";
  if (!first_problem.empty()) d6 << " (first: " << first_problem << ")";
  criterion(6, invalid == 0 && equivalence_bad == 0 && over_two == 0 && survived == games && violations == 0,
            d6.str(), start);

  const auto start7 = Clock::now();
  const Graph& g = w.family.q_prime.graph;
  const KiteMap& kites = w.family.q_prime.kites;
  std::mt19937_64 rng(7007);
  int lemma_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vertex u = rng() % g.num_vertices();
    const Vertex v = rng() % g.num_vertices();
    lemma_bad += crossing_pairs_on(kites, *shortest_path_avoiding(g, u, v, {}));
    lemma_bad += crossing_pairs_on(kites, random_geodesic(g, u, v, rng));
  }
  std::ostringstream d7;
  d7 << "prop1/cor1 over " << triples << " (U,u,w) triples of the corpus: " << prop1_bad << " prop1 and " << cor1_bad
     << " cor1 violations; lemma2 on 10^3 Q' pairs (library path plus a random geodesic each): " << lemma_bad
     << " crossing edge pairs";
  criterion(7, prop1_bad == 0 && cor1_bad == 0 && lemma_bad == 0 && triples > 0, d7.str(), start7);
}

}  // namespace

int main() {
  solver_oracles();
  const LowerBoundTables wheel = solve_family(PentagonFill::kWheel);
  const LowerBoundTables ring = solve_family(PentagonFill::kInnerRing);
  lower_bounds(wheel, ring);
  escape_soundness(wheel, ring);
  three_cops(wheel, ring);
  subdivision_pipeline();
  outer_corpus_and_structure(wheel);
  std::cout << (all_passed ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << std::endl;
  return all_passed ? 0 : 1;
}
