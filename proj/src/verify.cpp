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

#include "pursuit/verify.hpp"

#include <random>
#include <sstream>

#include "pursuit/errors.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/outer.hpp"
#include "pursuit/simulate.hpp"
#include "pursuit/strategies.hpp"

namespace pursuit {

namespace {

std::string fill_name(PentagonFill f) { return f == PentagonFill::kWheel ? "wheel" : "inner-ring"; }

// Plays and classifies; claim violations are counted, not rethrown.
struct Tally {
  int survived = 0;
  int captured = 0;
  int violations = 0;
  std::string first;
};

void play(Tally& t, const Graph& g, CopPolicy& cops, RobberPolicy& robber, int rounds) {
  try {
    const Transcript tr = simulate(g, cops, robber, rounds);
    if (auto err = check_transcript(g, tr)) throw IllegalMove(*err);
    (tr.captured() ? t.captured : t.survived)++;
    if (tr.captured() && t.first.empty()) t.first = "captured in round " + std::to_string(tr.rounds);
  } catch (const ClaimViolation& e) {
    if (t.violations++ == 0) t.first = e.what();
  }
}

}  // namespace

std::string format_verdict(const Verdict& v) {
  return "VERDICT " + v.name + (v.pass ? " PASS " : " FAIL ") + v.detail;
}

std::vector<Verdict> verify_lower_bound(bool prime, const VerifyOptions& o) {
  const std::string tag = prime ? "thm3" : "thm2";
  const auto f = build_quadrangulation_family(o.fill);
  const Graph& g = prime ? f.q_prime.graph : f.q.graph;
  std::vector<Verdict> out;
  {
    std::ostringstream d;
    d << fill_name(o.fill) << " n=" << g.num_vertices() << " m=" << g.num_edges();
    if (!prime) d << " faces=" << f.q.faces.size();
    bool ok = true;
    if (o.fill == PentagonFill::kWheel) {
      ok = g.num_vertices() == 182 && g.num_edges() == (prime ? 720 : 360) && (prime || f.q.faces.size() == 180);
    }
    ok = ok && (!prime || g.num_edges() == 4 * g.num_vertices() - 8);
    out.push_back({tag + "-counts", ok, d.str()});
  }
  const GameTable table = solve(g, 2, o.solve);
  out.push_back({tag + "-two-cops-lose", !table.cops_win(),
                 "winning placements " + std::to_string(table.winning_placements()) + " of " +
                     std::to_string(table.ranker().count())});
  const EscapeAudit audit = audit_escape_sets(g, f.q.tags);
  out.push_back({tag + "-escape-sets", audit.violations == 0,
                 std::to_string(audit.violations) + " of " + std::to_string(audit.pairs_checked) + " pairs overlap" +
                     (audit.first_violation.empty() ? "" : "; " + audit.first_violation)});
  Tally t;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<Vertex> pick(0, g.num_vertices() - 1);
  for (int s = 0; s < o.seeds; ++s) {
    const std::vector<Vertex> placement{pick(rng), pick(rng)};
    for (TieBreak tie : {TieBreak::kLexicographic, TieBreak::kPursuit}) {
      auto cops = optimal_cop_policy(table, placement, tie);
      auto robber = robber_escape_policy(g, f.q.tags);
      play(t, g, *cops, *robber, o.rounds);
    }
  }
  out.push_back({tag + "-escape-rule", t.captured == 0 && t.violations == 0,
                 "survived " + std::to_string(t.survived) + " captured " + std::to_string(t.captured) +
                     " violations " + std::to_string(t.violations) + (t.first.empty() ? "" : "; " + t.first)});
  return out;
}

std::vector<Verdict> verify_three_cops(const VerifyOptions& o) {
  std::vector<Verdict> out;
  {
    const auto f = build_quadrangulation_family(o.fill);
    const Graph& g = f.q_prime.graph;
    const int horizon = 50 * g.num_vertices();
    const GameTable pairs = solve(g, 2, o.solve);
    Tally t;
    auto cops = three_cop_policy(g, f.q_prime.kites);
    auto subsets = table_subset_robber_policy(pairs);
    play(t, g, *cops, *subsets, horizon);
    auto cops2 = three_cop_policy(g, f.q_prime.kites);
    EvasiveRobber evasive;
    play(t, g, *cops2, evasive, horizon);
    out.push_back({"thm5-qprime", t.survived == 0 && t.violations == 0,
                   fill_name(o.fill) + " captured " + std::to_string(t.captured) + " survived " +
                       std::to_string(t.survived) + " violations " + std::to_string(t.violations) +
                       (t.first.empty() ? "" : "; " + t.first)});
  }
  Tally t;
  int worst = 0;
  for (int i = 0; i < 20; ++i) {
    const EmbeddedGraph q = nested_quadrangulation(i % 9, o.seed + i);
    const KiteCompletion k = add_kite_diagonals(q);
    const GameTable table = solve(k.graph, 3, o.solve);
    auto cops = three_cop_policy(k.graph, k.kites);
    auto robber = optimal_robber_policy(table, TieBreak::kPursuit);
    const int before = t.captured;
    try {
      const Transcript tr = simulate(k.graph, *cops, *robber, 50 * k.graph.num_vertices());
      (tr.captured() ? t.captured : t.survived)++;
      if (tr.captured()) worst = std::max(worst, tr.rounds);
    } catch (const ClaimViolation& e) {
      if (t.violations++ == 0) t.first = e.what();
    }
    if (t.captured == before && t.first.empty()) t.first = "instance " + std::to_string(i) + " not captured";
  }
  out.push_back({"thm5-small", t.captured == 20,
                 "captured " + std::to_string(t.captured) + " of 20, slowest " + std::to_string(worst) + " rounds" +
                     (t.first.empty() ? "" : "; " + t.first)});
  return out;
}

std::vector<Verdict> verify_outer(const VerifyOptions& o) {
  int mismatches = 0, above_two = 0, nonchordal = 0;
  Tally t;
  std::string first;
  for (int s = 0; s < o.samples; ++s) {
    const int n = 3 + s % 12;
    const OuterDrawing d = random_outer_one_planar(n, o.seed + s);
    const bool chordal = is_chordal(d.graph).chordal;
    const GameTable one = solve(d.graph, 1, o.solve);
    const bool two = one.cops_win() || solve(d.graph, 2, o.solve).cops_win();
    if (chordal != one.cops_win() && mismatches++ == 0) first = "seed " + std::to_string(o.seed + s);
    above_two += !two;
    if (chordal) continue;
    ++nonchordal;
    auto cop = optimal_cop_policy(one, TieBreak::kPursuit);
    auto robber = robber_policy_outer(d);
    play(t, d.graph, *cop, *robber, std::min(o.rounds, 1000));
  }
  return {
      {"thm6-chordal-iff-copwin", mismatches == 0,
       std::to_string(o.samples) + " drawings, " + std::to_string(mismatches) + " mismatches" +
           (first.empty() ? "" : "; first " + first)},
      {"thm6-at-most-two", above_two == 0, std::to_string(above_two) + " drawings need three cops"},
      {"thm6-robber", t.captured == 0 && t.violations == 0,
       std::to_string(nonchordal) + " non-chordal, survived " + std::to_string(t.survived) + " captured " +
           std::to_string(t.captured) + " violations " + std::to_string(t.violations) +
           (t.first.empty() ? "" : "; " + t.first)},
  };
}

std::vector<Verdict> verify_structure(const VerifyOptions& o) {
  long triples = 0, prop1 = 0, cor1 = 0;
  std::string first;
  for (int s = 0; s < o.samples; ++s) {
    const OuterDrawing d = random_outer_one_planar(3 + s % 12, o.seed + s);
    for (const CycleWitness& U : chordless_cycles(d.graph, 200)) {
      for (const StructureReport& r : check_all_pairs(d, U)) {
        ++triples;
        if (!r.prop1 && prop1++ == 0) first = "prop1 seed " + std::to_string(o.seed + s);
        if (!r.cor1 && cor1++ == 0 && first.empty()) first = "cor1 seed " + std::to_string(o.seed + s);
      }
    }
  }
  return {{"prop1", prop1 == 0, std::to_string(triples) + " triples, " + std::to_string(prop1) + " violations"},
          {"cor1", cor1 == 0,
           std::to_string(triples) + " triples, " + std::to_string(cor1) + " violations" +
               (first.empty() ? "" : "; " + first)}};
}

std::vector<Verdict> verify_subdivision(const VerifyOptions& o) {
  std::vector<Verdict> out;
  const OnePlanarization p = one_planarize(petersen_drawing());
  const bool three = !solve(p.graph, 2, o.solve).cops_win();
  out.push_back({"subdivision-petersen", p.certificate.max_per_edge <= 1 && p.graph.num_vertices() == 40 && three,
                 "n=" + std::to_string(p.graph.num_vertices()) + " max crossings per sub-edge " +
                     std::to_string(p.certificate.max_per_edge) + (three ? ", two cops lose" : ", two cops win")});
  int exceptions = 0, nontrivial = 0;
  std::string first;
  for (int s = 0; s < o.samples; ++s) {
    const int n = 3 + s % 6;
    const Graph g = random_connected_graph(n, 0.15 + 0.5 * ((s / 6) % 4) / 3.0, o.seed + s);
    const auto c = cop_number(g, 3, o.solve);
    if (!c.value || *c.value == 1) continue;
    ++nontrivial;
    const Graph sub = subdivide_uniform(g, 2);
    if (solve(sub, *c.value - 1, o.solve).cops_win() && exceptions++ == 0) first = "seed " + std::to_string(o.seed + s);
  }
  out.push_back({"subdivision-monotone", exceptions == 0,
                 std::to_string(o.samples) + " graphs (" + std::to_string(nontrivial) + " with c >= 2), " +
                     std::to_string(exceptions) + " exceptions" + (first.empty() ? "" : "; " + first)});
  return out;
}

std::vector<Verdict> verify_shortest_paths(const VerifyOptions& o) {
  const auto f = build_quadrangulation_family(o.fill);
  const Graph& g = f.q_prime.graph;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<Vertex> pick(0, g.num_vertices() - 1);
  int bad = 0;
  for (int i = 0; i < o.samples; ++i) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    const Path p = *shortest_path_avoiding(g, a, b, {});
    for (std::size_t x = 0; x + 1 < p.size(); ++x) {
      for (std::size_t y = x + 1; y + 1 < p.size(); ++y) {
        bad += f.q_prime.kites.crosses(Edge(p[x], p[x + 1]), Edge(p[y], p[y + 1]));
      }
    }
  }
  return {{"lemma2", bad == 0, std::to_string(o.samples) + " pairs, " + std::to_string(bad) + " crossing pairs"}};
}

}  // namespace pursuit
