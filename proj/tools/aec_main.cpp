#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aec/bounds.hpp"
#include "aec/coloring.hpp"
#include "aec/constructions.hpp"
#include "aec/graph.hpp"
#include "aec/permutation.hpp"
#include "aec/solver.hpp"
#include "aec/suite.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

const char* status_name(aec::SolveStatus s) {
  switch (s) {
    case aec::SolveStatus::Found: return "found";
    case aec::SolveStatus::Exhausted: return "exhausted";
    default: return "timeout";
  }
}

json bound_json(const aec::BoundReport& r) {
  json j{{"bound", r.bound}, {"rule", r.rule}, {"lhs", r.lhs}, {"rhs", r.rhs}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& args,
            const std::string& out_path, const std::string& coloring_path,
            int drop_a, int drop_b) {
  auto arg_int = [&](size_t i) {
    if (i >= args.size()) throw CLI::ValidationError("gen", "missing argument");
    return std::stoi(args[i]);
  };
  if (family == "kn") {
    write_output(out_path, aec::serialize_graph(aec::complete_graph(arg_int(0))));
  } else if (family == "knn") {
    write_output(out_path,
                 aec::serialize_graph(aec::complete_bipartite(arg_int(0)).first));
  } else if (family == "cocktail") {
    write_output(out_path,
                 aec::serialize_graph(aec::cocktail_party_graph(arg_int(0))));
  } else if (family == "circulant") {
    int v = arg_int(0);
    if (args.size() < 2)
      throw CLI::ValidationError("gen", "circulant needs offsets o1,o2,...");
    std::set<int> offsets;
    std::stringstream ss(args[1]);
    std::string tok;
    while (std::getline(ss, tok, ',')) offsets.insert(std::stoi(tok));
    write_output(out_path, aec::serialize_graph(aec::circulant_graph(v, offsets)));
  } else if (family == "splice") {
    auto [g, spec] = aec::theorem2_splice(arg_int(0), arg_int(1));
    write_output(out_path, aec::serialize_graph(g));
  } else if (family == "p1f") {
    auto ms = aec::cyclic_p1f(arg_int(0));
    auto [g, c] = aec::p1f_restrict(ms, drop_a, drop_b);
    write_output(out_path, aec::serialize_graph(g));
    if (!coloring_path.empty())
      write_output(coloring_path, aec::serialize_coloring(g, c));
  } else {
    throw CLI::ValidationError("gen", "unknown family " + family);
  }
  return 0;
}

int cmd_solve(const std::string& graph_path, int k, double time_limit_s,
              long long node_limit, const std::string& emit_path,
              bool json_output, bool star_fix) {
  aec::Graph g = aec::parse_graph(read_file(graph_path));
  aec::SearchConfig cfg;
  cfg.fix_star_at_max_degree_vertex = star_fix;
  if (time_limit_s > 0)
    cfg.time_limit = std::chrono::milliseconds(
        static_cast<long long>(time_limit_s * 1000));
  if (node_limit > 0) cfg.node_limit = node_limit;

  json report;
  int exit_code = 0;
  std::optional<aec::EdgeColoring> witness;
  if (k >= 0) {
    auto res = aec::exists_acyclic_coloring(g, k, cfg);
    report = {{"status", status_name(res.status)},
              {"k", k},
              {"nodes", res.nodes_explored},
              {"elapsed_ms", res.elapsed.count()}};
    witness = res.witness;
    if (res.status == aec::SolveStatus::Exhausted) exit_code = 2;
    if (res.status == aec::SolveStatus::Timeout) exit_code = 4;
  } else {
    auto res = aec::acyclic_chromatic_index(g, cfg);
    report = {{"status", status_name(res.status)},
              {"nodes", res.nodes_explored},
              {"lo", res.lo},
              {"hi", res.hi}};
    if (res.status == aec::SolveStatus::Found) {
      report["k"] = res.value;
      witness = res.witness;
    } else {
      exit_code = 4;
    }
  }
  if (json_output)
    std::cout << report.dump(2) << '\n';
  else
    std::cerr << report.dump() << '\n';
  if (!emit_path.empty() && witness)
    write_output(emit_path, aec::serialize_coloring(g, *witness));
  return exit_code;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
  aec::Graph g = aec::parse_graph(read_file(graph_path));
  aec::EdgeColoring c = aec::parse_coloring(read_file(coloring_path), g);
  auto verdict = aec::verify_acyclic(g, c);
  switch (verdict.status) {
    case aec::VerdictStatus::Acyclic:
      std::cout << "acyclic\n";
      return 0;
    case aec::VerdictStatus::Improper: {
      auto [e1, e2] = verdict.improper_pair;
      std::cout << "improper: edges " << e1 << " (" << g.edge(e1).first << ","
                << g.edge(e1).second << ") and " << e2 << " ("
                << g.edge(e2).first << "," << g.edge(e2).second
                << ") share a vertex and the color " << c.colors[e1] << "\n";
      return 2;
    }
    case aec::VerdictStatus::BichromaticCycle: {
      const auto& w = *verdict.cycle;
      std::cout << "bichromatic cycle with colors (" << w.color_a << ","
                << w.color_b << "):";
      for (aec::Vertex v : w.vertices) std::cout << ' ' << v;
      std::cout << "\n";
      return 3;
    }
  }
  return 1;
}

int cmd_lemma1(int n, bool exhaustive) {
  if (exhaustive) {
    bool ok = aec::lemma1_exhaustive_oracle(n);
    std::cout << (ok ? "no triple exists\n"
                     : "counterexample triple found (lemma violated)\n");
    return ok ? 0 : 2;
  }
  aec::PerfectMatchingSet ms;
  std::string line;
  while (static_cast<int>(ms.matchings.size()) < 3 && std::getline(std::cin, line)) {
    if (line.empty()) continue;
    ms.matchings.push_back(aec::parse_permutation(line));
  }
  if (ms.matchings.size() < 3)
    throw std::runtime_error("lemma1: need three permutation lines on stdin");
  ms.n = ms.matchings[0].size();
  auto verdict = aec::lemma1_sign_check(ms);
  std::cout << "impossible: " << verdict.explanation << "\n";
  return 0;
}

int cmd_suite(const std::string& json_path, double time_budget) {
  aec::SuiteOptions opt;
  if (time_budget > 0) {
    opt.k6_budget_seconds = std::min(opt.k6_budget_seconds, time_budget);
    opt.k33_budget_seconds = std::min(opt.k33_budget_seconds, time_budget);
  }
  auto reports = aec::run_paper_suite(opt);
  json arr = json::array();
  bool any_fail = false;
  for (const auto& r : reports) {
    arr.push_back(aec::to_json(r));
    const char* label = r.status == aec::ExperimentReport::Status::Pass ? "PASS"
                        : r.status == aec::ExperimentReport::Status::Skipped
                            ? "SKIP"
                            : "FAIL";
    std::cerr << label << ' ' << r.id;
    if (!r.reason.empty()) std::cerr << " (" << r.reason << ")";
    std::cerr << '\n';
    if (r.status == aec::ExperimentReport::Status::Fail) any_fail = true;
  }
  write_output(json_path, arr.dump(2) + "\n");
  return any_fail ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acyclic edge coloring toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph family");
  std::string family;
  std::vector<std::string> gen_args;
  std::string gen_out, gen_coloring_out;
  int drop_a = 0, drop_b = 1;
  gen->add_option("family", family,
                  "kn | knn | cocktail | circulant | splice | p1f")
      ->required();
  gen->add_option("args", gen_args, "family parameters");
  gen->add_option("-o,--output", gen_out, "output graph file (default stdout)");
  gen->add_option("--coloring-out", gen_coloring_out,
                  "coloring output file (p1f only)");
  gen->add_option("--drop-a", drop_a, "p1f: A-side vertices to delete");
  gen->add_option("--drop-b", drop_b, "p1f: B-side vertices to delete (>= 1)");

  // solve
  auto* solve = app.add_subcommand("solve", "decide/optimize acyclic colorings");
  std::string solve_graph, emit_coloring;
  int solve_k = -1;
  double time_limit = 0;
  long long node_limit = 0;
  bool solve_json = false, star_fix = false;
  solve->add_option("graph", solve_graph, "graph file")->required();
  solve->add_option("--k", solve_k, "palette size (omit to compute a'(G))");
  solve->add_option("--time-limit", time_limit, "seconds");
  solve->add_option("--node-limit", node_limit, "search node cap");
  solve->add_option("--emit-coloring", emit_coloring, "write witness here");
  solve->add_flag("--json", solve_json, "JSON report on stdout");
  solve->add_flag("--star-fix", star_fix,
                  "fix the colors at one max-degree vertex (existence only)");

  // verify
  auto* verify = app.add_subcommand("verify", "verify an acyclic coloring");
  std::string verify_graph, verify_coloring;
  verify->add_option("graph", verify_graph)->required();
  verify->add_option("coloring", verify_coloring)->required();

  // bound
  auto* bound = app.add_subcommand("bound", "counting lower bounds");
  int bd = 0, bm = 0, bx = -1, bknn = 0;
  bound->add_option("--d", bd, "degree");
  bound->add_option("--m", bm, "half the vertex count");
  bound->add_option("--x", bx, "removed edges (robustness remark)");
  bound->add_option("--knn", bknn, "side size of a complete bipartite graph");

  // lemma1
  auto* lemma1 = app.add_subcommand("lemma1", "disjoint-matching obstruction");
  int ln = 0;
  bool exhaustive = false;
  lemma1->add_option("--n", ln, "side size (even)");
  lemma1->add_flag("--exhaustive", exhaustive, "run the brute-force oracle");

  // suite
  auto* suite = app.add_subcommand("suite", "run the reproduction experiments");
  std::string suite_json = "-";
  double time_budget = 0;
  suite->add_option("--json", suite_json, "JSON output file (default stdout)");
  suite->add_option("--time-budget", time_budget,
                    "cap in seconds for the long solver experiments");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_gen(family, gen_args, gen_out, gen_coloring_out, drop_a, drop_b);
    if (solve->parsed())
      return cmd_solve(solve_graph, solve_k, time_limit, node_limit,
                       emit_coloring, solve_json, star_fix);
    if (verify->parsed()) return cmd_verify(verify_graph, verify_coloring);
    if (bound->parsed()) {
      if (bknn > 0) {
        std::cout << bound_json(aec::theorem3_bound(bknn)).dump() << '\n';
      } else if (bx >= 0) {
        auto [ok, r] = aec::robust_counting_check(bd, bm, bx);
        json j = bound_json(r);
        j["holds"] = ok;
        std::cout << j.dump() << '\n';
      } else {
        std::cout << bound_json(aec::counting_lower_bound(bd, bm)).dump()
                  << '\n';
      }
      return 0;
    }
    if (lemma1->parsed()) return cmd_lemma1(ln, exhaustive);
    if (suite->parsed()) return cmd_suite(suite_json, time_budget);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 1;
}
