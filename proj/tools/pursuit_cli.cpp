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

// pursuit: command-line front end.
//
//   pursuit build Q | pursuit copnumber --max 2
//   pursuit build Qprime > qp.json && pursuit simulate --input qp.json \
//       --cops optimal --k 2 --robber escape --rounds 10000 --seed 7
//   pursuit verify thm2
//
// Exit codes: 0 success, 1 claim violated, 2 usage error, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pursuit/constructions.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/io.hpp"
#include "pursuit/outer.hpp"
#include "pursuit/simulate.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/strategies.hpp"
#include "pursuit/verify.hpp"

namespace {

using namespace pursuit;

constexpr int kExitClaim = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

GraphDocument read_document(const std::string& path) { return parse_graph_document(read_all(path)); }

PentagonFill parse_fill(const std::string& s) {
  if (s == "wheel") return PentagonFill::kWheel;
  if (s == "inner-ring") return PentagonFill::kInnerRing;
  throw UsageError("unknown --fill " + s);
}

std::vector<Vertex> parse_list(const std::string& s) {
  std::vector<Vertex> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

struct Globals {
  int threads = 1;
  std::optional<std::uint64_t> budget;

  SolveOptions solve_options() const {
    SolveOptions o;
    if (const char* env = std::getenv("PURSUIT_BUDGET_STATES")) o.max_states = std::stoull(env);
    if (budget) o.max_states = *budget;
    return o;
  }
};

struct BuildArgs {
  std::string what;
  std::string fill = "wheel";
  std::string input;
  int times = 1;
  int insertions = 2;
  int n = 8;
  std::optional<std::uint64_t> seed;
};

int run_build(const BuildArgs& a) {
  const PentagonFill fill = parse_fill(a.fill);
  GraphDocument doc;
  if (a.what == "dodecahedron") {
    doc = document_of(dodecahedron());
  } else if (a.what == "T") {
    doc = document_of(triangulate_pentagons(dodecahedron(), fill));
  } else if (a.what == "Q") {
    doc = document_of(build_quadrangulation_family(fill).q);
  } else if (a.what == "Qprime") {
    const auto f = build_quadrangulation_family(fill);
    doc = document_of(f.q_prime, f.q.tags);
  } else if (a.what == "subdivide") {
    doc = document_of(subdivide_uniform(read_document(a.input).graph, a.times));
  } else if (a.what == "one-planarize") {
    const OnePlanarization p = one_planarize(petersen_drawing());
    doc = document_of(p.graph);
    std::vector<CrossingRecord> records;
    for (const auto& [e, f] : p.certificate.crossings) records.push_back({e, f, std::nullopt});
    doc.crossings = std::move(records);
    std::cerr << "max crossings per sub-edge " << p.certificate.max_per_edge << "\n";
  } else if (a.what == "petersen") {
    doc = document_of(petersen_graph());
  } else if (a.what == "nested") {
    if (!a.seed) throw UsageError("build nested needs --seed");
    const EmbeddedGraph q = nested_quadrangulation(a.insertions, *a.seed);
    doc = document_of(add_kite_diagonals(q), q.tags);
  } else if (a.what == "outer") {
    if (!a.seed) throw UsageError("build outer needs --seed");
    doc = document_of(random_outer_one_planar(a.n, *a.seed));
  } else {
    throw UsageError("unknown construction " + a.what);
  }
  std::cout << to_json(doc);
  return 0;
}

int run_solve(const Globals& g, const std::string& input, int k) {
  const GraphDocument doc = read_document(input);
  const GameTable table = solve(doc.graph, k, g.solve_options());
  std::cout << "cops " << k << "\n";
  std::cout << "states " << table.num_states() << "\n";
  std::cout << "result " << (table.cops_win() ? "cop-win" : "robber-win") << "\n";
  std::cout << "winning-placements " << table.winning_placements() << " of " << table.ranker().count() << "\n";
  const auto best = table.best_placement();
  std::cout << "best-placement";
  for (std::size_t i = 0; i < best.size(); ++i) std::cout << (i ? "," : " ") << best[i];
  std::cout << "\n";
  if (table.cops_win()) std::cout << "worst-case-plies " << table.placement_value(best) << "\n";
  return 0;
}

int run_copnumber(const Globals& g, const std::string& input, int k_max) {
  const GraphDocument doc = read_document(input);
  const CopNumberResult r = cop_number(doc.graph, k_max, g.solve_options());
  if (r.value) {
    std::cout << "copnumber " << *r.value << "\n";
  } else {
    std::cout << "copnumber exceeds " << k_max << "\n";
  }
  return 0;
}

struct SimulateArgs {
  std::string input;
  std::string cops = "optimal";
  std::string robber = "optimal";
  int k = 2;
  int table_cops = 2;
  int rounds = 1000;
  std::optional<std::uint64_t> seed;
  std::string placement = "random";
  std::optional<Vertex> robber_start;
  bool summary = false;
};

int run_simulate(const Globals& globals, const SimulateArgs& a) {
  const GraphDocument doc = read_document(a.input);
  const Graph& g = doc.graph;
  const SolveOptions options = globals.solve_options();
  std::mt19937_64 rng(a.seed.value_or(0));
  std::uniform_int_distribution<Vertex> pick(0, g.num_vertices() - 1);
  auto need_seed = [&](const std::string& what) {
    if (!a.seed) throw UsageError(what + " is random and needs --seed");
  };

  std::optional<GameTable> cop_table;
  std::optional<GameTable> robber_table;
  KiteMap kites;
  std::unique_ptr<CopPolicy> cops;

  const int k = a.cops == "three-cop" ? 3 : a.k;
  std::vector<Vertex> placement;
  if (a.cops != "three-cop" && a.placement != "best") {
    if (a.placement == "random") {
      need_seed("cop placement");
      for (int i = 0; i < k; ++i) placement.push_back(pick(rng));
    } else {
      placement = parse_list(a.placement);
      if (static_cast<int>(placement.size()) != k) throw UsageError("--placement must list --k vertices");
    }
  }
  if (a.cops == "optimal" || a.cops == "optimal-pursuit") {
    cop_table.emplace(solve(g, k, options));
    const TieBreak tie = a.cops == "optimal" ? TieBreak::kLexicographic : TieBreak::kPursuit;
    cops = placement.empty() ? optimal_cop_policy(*cop_table, tie) : optimal_cop_policy(*cop_table, placement, tie);
  } else if (a.cops == "greedy" || a.cops == "stationary") {
    if (placement.empty()) throw UsageError(a.cops + " cops need --placement random or a list");
    if (a.cops == "greedy") {
      cops = std::make_unique<GreedyCops>(placement);
    } else {
      cops = std::make_unique<StationaryCops>(placement);
    }
  } else if (a.cops == "three-cop") {
    kites = kites_of(doc);
    cops = three_cop_policy(g, kites);
  } else {
    throw UsageError("unknown cop policy " + a.cops);
  }

  std::unique_ptr<RobberPolicy> robber;
  if (a.robber == "optimal" || a.robber == "optimal-pursuit") {
    if (cop_table && cop_table->num_cops() == k) {
      robber = optimal_robber_policy(*cop_table, a.robber == "optimal" ? TieBreak::kLexicographic : TieBreak::kPursuit);
    } else {
      robber_table.emplace(solve(g, k, options));
      robber = optimal_robber_policy(*robber_table, a.robber == "optimal" ? TieBreak::kLexicographic : TieBreak::kPursuit);
    }
  } else if (a.robber == "table-subsets") {
    robber_table.emplace(solve(g, a.table_cops, options));
    robber = table_subset_robber_policy(*robber_table);
  } else if (a.robber == "evasive") {
    robber = std::make_unique<EvasiveRobber>();
  } else if (a.robber == "stationary") {
    Vertex start = 0;
    if (a.robber_start) {
      start = *a.robber_start;
    } else {
      need_seed("robber placement");
      start = pick(rng);
    }
    robber = std::make_unique<StationaryRobber>(start);
  } else if (a.robber == "escape") {
    if (!doc.tags) throw UsageError("the escape robber needs vertex tags");
    robber = robber_escape_policy(g, *doc.tags);
  } else if (a.robber == "outer") {
    if (!doc.outer) throw UsageError("the outer robber needs an outer drawing");
    robber = robber_policy_outer(OuterDrawing{g, 1});
  } else {
    throw UsageError("unknown robber policy " + a.robber);
  }

  const Transcript t = simulate(g, *cops, *robber, a.rounds);
  if (a.summary) {
    std::cout << (t.captured() ? "CAPTURED " : "SURVIVED ") << t.rounds << "\n";
  } else {
    std::cout << serialize_transcript(t);
  }
  return 0;
}

struct VerifyArgs {
  std::string what;
  std::string fill = "wheel";
  int seeds = 20;
  int rounds = 10000;
  int samples = 1000;
  std::uint64_t seed = 1;
};

int run_verify(const Globals& globals, const VerifyArgs& a) {
  VerifyOptions o;
  o.solve = globals.solve_options();
  o.fill = parse_fill(a.fill);
  o.seeds = a.seeds;
  o.rounds = a.rounds;
  o.samples = a.samples;
  o.seed = a.seed;
  std::vector<Verdict> verdicts;
  auto add = [&](std::vector<Verdict> v) { verdicts.insert(verdicts.end(), v.begin(), v.end()); };
  const bool all = a.what == "all";
  if (all || a.what == "thm2") add(verify_lower_bound(false, o));
  if (all || a.what == "thm3") add(verify_lower_bound(true, o));
  if (all || a.what == "thm5") add(verify_three_cops(o));
  if (all || a.what == "thm6") add(verify_outer(o));
  if (all || a.what == "prop1") add(verify_structure(o));
  if (all || a.what == "subdivision") add(verify_subdivision(o));
  if (all || a.what == "lemma2") add(verify_shortest_paths(o));
  if (verdicts.empty()) throw UsageError("unknown verification " + a.what);
  bool ok = true;
  for (const Verdict& v : verdicts) {
    std::cout << format_verdict(v) << "\n";
    ok &= v.pass;
  }
  return ok ? 0 : kExitClaim;
}

struct ExportArgs {
  std::string format = "json";
  std::string input;
  std::string transcript;
};

int run_export(const ExportArgs& a) {
  if (a.format == "json") {
    std::cout << to_json(read_document(a.input));
    return 0;
  }
  if (a.format == "dot") {
    const GraphDocument doc = read_document(a.input);
    std::optional<Position> last;
    if (!a.transcript.empty()) {
      const Transcript t = parse_transcript(read_all(a.transcript));
      if (!t.entries.empty()) last = t.entries.back().position;
    }
    std::cout << to_dot(doc, last ? &*last : nullptr);
    return 0;
  }
  if (a.format == "transcript") {
    if (a.transcript.empty() && (a.input.empty() || a.input == "-")) {
      throw UsageError("export --format transcript reads the transcript from --transcript when the graph is on stdin");
    }
    const Transcript t = parse_transcript(read_all(a.transcript));
    if (!a.input.empty()) {
      if (auto err = check_transcript(read_document(a.input).graph, t)) {
        std::cerr << "illegal transcript: " << *err << "\n";
        return kExitClaim;
      }
    }
    std::cout << serialize_transcript(t);
    return 0;
  }
  throw UsageError("unknown export format " + a.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cops and robbers on 1-planar graphs"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--threads", globals.threads, "Thread cap; the solver currently uses one")->check(CLI::PositiveNumber);
  app.add_option("--budget", globals.budget, "State budget for exact solves (overrides PURSUIT_BUDGET_STATES)");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a construction and print it as GraphDocument JSON");
  b->add_option("what", build.what, "dodecahedron|T|Q|Qprime|subdivide|one-planarize|petersen|nested|outer")
      ->required();
  b->add_option("--fill", build.fill, "Pentagon fill of T: wheel|inner-ring");
  b->add_option("--input", build.input, "Graph to subdivide (default stdin)");
  b->add_option("--times", build.times, "Subdivision vertices per edge")->check(CLI::NonNegativeNumber);
  b->add_option("--insertions", build.insertions, "Nested 4-cycles for 'nested'")->check(CLI::NonNegativeNumber);
  b->add_option("-n", build.n, "Vertex count for 'outer'")->check(CLI::Range(3, 1 << 20));
  b->add_option("--seed", build.seed, "Seed for random constructions");

  std::string solve_input;
  int solve_k = 1;
  auto* s = app.add_subcommand("solve", "Solve the k-cop game exactly");
  s->add_option("--cops", solve_k, "Number of cops")->required()->check(CLI::Range(1, 8));
  s->add_option("--input", solve_input, "GraphDocument (default stdin)");

  std::string cn_input;
  int cn_max = 3;
  auto* c = app.add_subcommand("copnumber", "Smallest winning number of cops up to --max");
  c->add_option("--max", cn_max, "Largest k to try")->required()->check(CLI::Range(1, 8));
  c->add_option("--input", cn_input, "GraphDocument (default stdin)");

  SimulateArgs sim;
  auto* m = app.add_subcommand("simulate", "Play a game and print its transcript");
  m->add_option("--input", sim.input, "GraphDocument (default stdin)");
  m->add_option("--cops", sim.cops, "optimal|optimal-pursuit|greedy|stationary|three-cop");
  m->add_option("--robber", sim.robber, "optimal|optimal-pursuit|table-subsets|evasive|stationary|escape|outer");
  m->add_option("--k", sim.k, "Number of cops")->check(CLI::Range(1, 8));
  m->add_option("--table-cops", sim.table_cops, "Table size for table-subsets")->check(CLI::Range(1, 8));
  m->add_option("--rounds", sim.rounds, "Horizon in rounds")->check(CLI::NonNegativeNumber);
  m->add_option("--seed", sim.seed, "Seed for random placements");
  m->add_option("--placement", sim.placement, "random|best|comma-separated cop vertices");
  m->add_option("--robber-start", sim.robber_start, "Start vertex of a stationary robber");
  m->add_flag("--summary", sim.summary, "Print only the outcome");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run a verification suite and print VERDICT lines");
  v->add_option("what", ver.what, "thm2|thm3|thm5|thm6|prop1|subdivision|lemma2|all")->required();
  v->add_option("--fill", ver.fill, "Pentagon fill of T: wheel|inner-ring");
  v->add_option("--seeds", ver.seeds, "Cop placements per lower-bound run");
  v->add_option("--rounds", ver.rounds, "Horizon for escape runs");
  v->add_option("--samples", ver.samples, "Corpus size");
  v->add_option("--seed", ver.seed, "Base seed");

  ExportArgs exp;
  auto* e = app.add_subcommand("export", "Re-emit a graph or transcript");
  e->add_option("--format", exp.format, "json|dot|transcript");
  e->add_option("--input", exp.input, "GraphDocument (default stdin)");
  e->add_option("--transcript", exp.transcript, "Transcript file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (*b) return run_build(build);
    if (*s) return run_solve(globals, solve_input, solve_k);
    if (*c) return run_copnumber(globals, cn_input, cn_max);
    if (*m) return run_simulate(globals, sim);
    if (*v) return run_verify(globals, ver);
    if (*e) return run_export(exp);
  } catch (const BudgetExceeded& err) {
    std::cerr << "budget exceeded: " << err.what() << "\n";
    return kExitBudget;
  } catch (const ClaimViolation& err) {
    std::cerr << "CLAIM_VIOLATION " << err.what() << "\n";
    return kExitClaim;
  } catch (const UsageError& err) {
    std::cerr << "usage: " << err.what() << "\n";
    return kExitUsage;
  } catch (const IllegalMove& err) {
    std::cerr << "illegal move: " << err.what() << "\n";
    return kExitClaim;
  } catch (const std::invalid_argument& err) {
    std::cerr << "invalid input: " << err.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& err) {
    std::cerr << "invalid input: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
