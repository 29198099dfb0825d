// Command line surface: single-graph analysis, corpus campaigns, predicate
// mining, and named-graph fixtures.
//
// Data goes to standard output (or --out); diagnostics and timing go to
// standard error.  Exit codes: 0 clean, 1 usage or input error, 2 at least
// one check failed, 3 results incomplete under budget.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "oddspec/verify.hpp"

namespace {

using namespace oddspec;

int write_data(const std::string& out_path, const std::string& data) {
  if (out_path.empty()) {
    std::cout << data;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  f << data;
  return 0;
}

std::string verdict_text(const Verdict& v) {
  std::string s;
  s += "graph6: " + v.graph6 + "\n";
  s += "n: " + std::to_string(v.n) + "  edges: " + std::to_string(v.edge_count) + "\n";
  s += "lengths:";
  for (int m : v.spectrum.lengths) s += ' ' + std::to_string(m);
  s += v.spectrum.complete ? "" : "  (incomplete)";
  s += "\nodd_lengths:";
  for (int m : v.spectrum.odd_lengths) s += ' ' + std::to_string(m);
  s += "\nchi: " + (v.chi ? std::to_string(*v.chi) : std::string("unknown"));
  s += "  omega: " + std::to_string(v.omega) + "\n";
  for (const auto& [id, out] : v.checks) {
    s += std::string(check_name(id)) + ": ";
    switch (out.status) {
      case CheckOutcome::Status::pass: s += "pass"; break;
      case CheckOutcome::Status::fail: s += "FAIL " + out.witness.dump(); break;
      case CheckOutcome::Status::skip: s += "skip (" + out.skip_reason + ")"; break;
    }
    s += '\n';
  }
  return s;
}

Graph resolve_graph(const std::string& text) {
  if (text.rfind("name:", 0) == 0) return named_graph(text.substr(5));
  return parse_graph6(text);
}

int cmd_analyze(const std::string& input, bool json, const std::string& out_path,
                long long budget) {
  AnalyzeOptions opt;
  if (budget > 0) {
    opt.cycle_budget = budget;
    opt.solver_budget = budget;
  }
  std::string data;
  bool any_fail = false, any_budget_skip = false;
  auto record = [&](const Verdict& v) {
    data += json ? v.to_json().dump() + "\n" : verdict_text(v);
    if (v.any_fail()) any_fail = true;
    if (!v.spectrum.complete || !v.chi) any_budget_skip = true;
    for (const auto& [id, out] : v.checks)
      if (out.status == CheckOutcome::Status::skip && out.skip_reason == "budget")
        any_budget_skip = true;
  };
  if (input == "-") {
    std::string line;
    long long line_no = 0;
    while (std::getline(std::cin, line)) {
      ++line_no;
      if (line.empty() || line == "\r") continue;
      try {
        record(analyze(parse_graph6(line), opt));
      } catch (const error& e) {
        std::cerr << "error: line " << line_no << ": " << e.what() << "\n";
        return 1;
      }
    }
  } else {
    record(analyze(resolve_graph(input), opt));
  }
  if (int rc = write_data(out_path, data)) return rc;
  if (any_fail) return 2;
  if (any_budget_skip) return 3;
  return 0;
}

int cmd_verify(const std::string& corpus, const std::string& checks_arg, int jobs,
               long long budget, const std::string& out_path, const std::string& format) {
  CampaignOptions opt;
  opt.jobs = jobs;
  if (budget > 0) {
    opt.analyze.cycle_budget = budget;
    opt.analyze.solver_budget = budget;
  }
  if (!checks_arg.empty()) {
    opt.analyze.checks.clear();
    std::stringstream ss(checks_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto id = parse_check(tok);
      if (!id) {
        std::cerr << "error: unknown check: " << tok << "\n";
        return 1;
      }
      opt.analyze.checks.push_back(*id);
    }
  }
  auto t0 = std::chrono::steady_clock::now();
  Report report = run_campaign(CorpusSource::from_spec(corpus), opt);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "campaign: " << report.graphs << " graphs, " << jobs << " jobs, " << ms / 1000.0
            << " s, " << report.total_fail << " failures\n";
  std::string data =
      format == "csv" ? report.to_csv() : report.to_json().dump(2) + "\n";
  if (int rc = write_data(out_path, data)) return rc;
  return campaign_exit_code(report);
}

int cmd_mine(const std::string& corpus, bool triangle_free, std::optional<int> odd_lengths,
             std::optional<int> chi, const std::string& out_path, long long budget) {
  MinePredicate pred;
  pred.triangle_free = triangle_free;
  pred.odd_length_count = odd_lengths;
  pred.chi = chi;
  AnalyzeOptions opt;
  if (budget > 0) {
    opt.cycle_budget = budget;
    opt.solver_budget = budget;
  }
  MineResult res = mine(CorpusSource::from_spec(corpus), pred, opt);
  std::string data;
  for (const std::string& line : res.matches) data += line + "\n";
  std::cerr << "mine: scanned " << res.scanned << ", matched " << res.matches.size()
            << ", indeterminate " << res.indeterminate << "\n";
  if (int rc = write_data(out_path, data)) return rc;
  return res.indeterminate > 0 ? 3 : 0;
}

int cmd_gen(const std::string& name, bool graph6_only, const std::string& out_path) {
  Graph g = named_graph(name);
  std::string data;
  if (graph6_only) {
    data = to_graph6(g) + "\n";
  } else {
    data = name + ": n=" + std::to_string(g.n) + " edges=" + std::to_string(g.edge_count()) +
           " graph6=" + to_graph6(g) + "\n";
  }
  return write_data(out_path, data);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact odd-cycle-length invariants, structure witnesses, and theorem campaigns"};
  app.require_subcommand(1);

  std::string input, corpus, checks_arg, out_path, format = "json", name;
  bool json = false, graph6_only = false, triangle_free = false;
  int jobs = 1;
  long long budget = 0;
  std::optional<int> odd_lengths, chi;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze one graph (graph6, name:ID, or - for stdin)");
  analyze_cmd->add_option("input", input, "graph6 string, name:ID, or -")->required();
  analyze_cmd->add_flag("--json", json, "emit JSON instead of text");
  analyze_cmd->add_option("--budget", budget, "cycle and solver budget");
  analyze_cmd->add_option("--out", out_path, "write data to a file");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run checks over a corpus");
  verify_cmd->add_option("--corpus", corpus, "file path, gen:N[,connected][,trianglefree], or rand:N,P,COUNT,SEED")
      ->required();
  verify_cmd->add_option("--checks", checks_arg, "comma separated check names (default: all)");
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--budget", budget, "cycle and solver budget");
  verify_cmd->add_option("--out", out_path, "write the report to a file");
  verify_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* mine_cmd = app.add_subcommand("mine", "emit corpus graphs matching a predicate");
  mine_cmd->add_option("--corpus", corpus, "corpus as in verify")->required();
  mine_cmd->add_flag("--triangle-free", triangle_free, "keep triangle-free graphs only");
  mine_cmd->add_option("--odd-lengths", odd_lengths, "required count of distinct odd cycle lengths");
  mine_cmd->add_option("--chi", chi, "required chromatic number");
  mine_cmd->add_option("--budget", budget, "cycle and solver budget");
  mine_cmd->add_option("--out", out_path, "write matches to a file");

  CLI::App* gen_cmd = app.add_subcommand("gen", "emit a named graph");
  gen_cmd->add_option("--name", name, "petersen, groetzsch, chvatal, complete(K), cycle(K), wheel(K), book(R), path(K), complete_bipartite(A,B)")
      ->required();
  gen_cmd->add_flag("--graph6", graph6_only, "emit the graph6 line only");
  gen_cmd->add_option("--out", out_path, "write data to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (app.got_subcommand(analyze_cmd)) return cmd_analyze(input, json, out_path, budget);
    if (app.got_subcommand(verify_cmd))
      return cmd_verify(corpus, checks_arg, jobs, budget, out_path, format);
    if (app.got_subcommand(mine_cmd))
      return cmd_mine(corpus, triangle_free, odd_lengths, chi, out_path, budget);
    if (app.got_subcommand(gen_cmd)) return cmd_gen(name, graph6_only, out_path);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
