#pragma once

// Per-graph verdicts and corpus campaigns.
//
// Skip discipline: a check whose hypothesis is unmet reports skip with
// reason "hypothesis"; a check whose answer would depend on an exhausted
// enumeration or solver budget reports skip with reason "budget".  A check
// never passes vacuously.
//
// Campaign reports are byte-identical for a fixed corpus and check set
// regardless of worker count: workers fill a chunk's slots by index and the
// aggregator walks them in corpus order.  Timing is never part of a report.

#include <atomic>
#include <cstdint>
#include <fstream>
#include <istream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "oddspec/coloring.hpp"
#include "oddspec/cycles.hpp"
#include "oddspec/generate.hpp"
#include "oddspec/graph.hpp"
#include "oddspec/invariants.hpp"
#include "oddspec/structure.hpp"

namespace oddspec {

using ordered_json = nlohmann::ordered_json;

enum class CheckId {
  gyarfas_bound,
  gyarfas_equality,
  wang_single,
  wang_35,
  thm_3l,
  thm_kl,
  krs_extension,
  nonseparating_exists,
  book_characterization,
  voss_two_diagonals,
  lemma_3connected,
  lemma_intersect2,
  dirac_2cut,
};

inline constexpr int kCheckCount = 13;

inline const char* check_name(CheckId id) {
  switch (id) {
    case CheckId::gyarfas_bound: return "gyarfas_bound";
    case CheckId::gyarfas_equality: return "gyarfas_equality";
    case CheckId::wang_single: return "wang_single";
    case CheckId::wang_35: return "wang_35";
    case CheckId::thm_3l: return "thm_3l";
    case CheckId::thm_kl: return "thm_kl";
    case CheckId::krs_extension: return "krs_extension";
    case CheckId::nonseparating_exists: return "nonseparating_exists";
    case CheckId::book_characterization: return "book_characterization";
    case CheckId::voss_two_diagonals: return "voss_two_diagonals";
    case CheckId::lemma_3connected: return "lemma_3connected";
    case CheckId::lemma_intersect2: return "lemma_intersect2";
    case CheckId::dirac_2cut: return "dirac_2cut";
  }
  return "?";
}

inline std::optional<CheckId> parse_check(std::string_view name) {
  for (int i = 0; i < kCheckCount; ++i)
    if (name == check_name(static_cast<CheckId>(i))) return static_cast<CheckId>(i);
  return std::nullopt;
}

inline std::vector<CheckId> all_checks() {
  std::vector<CheckId> out;
  for (int i = 0; i < kCheckCount; ++i) out.push_back(static_cast<CheckId>(i));
  return out;
}

struct CheckOutcome {
  enum class Status { pass, fail, skip } status = Status::skip;
  std::string skip_reason;   // "hypothesis" or "budget"
  ordered_json witness;      // populated on fail

  static CheckOutcome pass() { return {Status::pass, {}, {}}; }
  static CheckOutcome fail(ordered_json w) { return {Status::fail, {}, std::move(w)}; }
  static CheckOutcome skip(std::string reason) { return {Status::skip, std::move(reason), {}}; }
};

struct Verdict {
  std::string graph6;
  int n = 0;
  int edge_count = 0;
  CycleSpectrum spectrum;
  std::optional<int> chi;  // empty when the solver budget ran out
  int omega = 0;
  std::vector<std::pair<CheckId, CheckOutcome>> checks;  // in CheckId order

  bool any_fail() const {
    for (const auto& [id, out] : checks)
      if (out.status == CheckOutcome::Status::fail) return true;
    return false;
  }

  ordered_json to_json() const {
    ordered_json j;
    j["graph6"] = graph6;
    j["n"] = n;
    j["edge_count"] = edge_count;
    j["spectrum"] = {{"lengths", spectrum.lengths},
                     {"odd_lengths", spectrum.odd_lengths},
                     {"complete", spectrum.complete}};
    if (chi)
      j["chi"] = *chi;
    else
      j["chi"] = nullptr;
    j["omega"] = omega;
    ordered_json jc = ordered_json::object();
    for (const auto& [id, out] : checks) {
      ordered_json o;
      switch (out.status) {
        case CheckOutcome::Status::pass: o["status"] = "pass"; break;
        case CheckOutcome::Status::fail:
          o["status"] = "fail";
          o["witness"] = out.witness;
          break;
        case CheckOutcome::Status::skip:
          o["status"] = "skip";
          o["reason"] = out.skip_reason;
          break;
      }
      jc[check_name(id)] = std::move(o);
    }
    j["checks"] = std::move(jc);
    return j;
  }
};

namespace detail {

inline ordered_json cycle_json(const Cycle& c) { return ordered_json(c.vertices); }

inline std::vector<int> set_to_list(VertexSet s) {
  std::vector<int> out;
  for (VertexSet t = s; t; t &= t - 1) out.push_back(std::countr_zero(t));
  return out;
}

// Proper 3-colorings of a cycle, one per color-permutation orbit: the first
// two vertices are pinned to colors 0 and 1.
template <typename CB>
bool for_each_cycle_coloring(int m, CB&& cb) {
  std::vector<int> col(m);
  col[0] = 0;
  col[1] = 1;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == m) return cb(col);
    for (int c = 0; c < 3; ++c) {
      if (c == col[i - 1]) continue;
      if (i == m - 1 && c == col[0]) continue;
      col[i] = c;
      if (!self(self, i + 1)) return false;
    }
    return true;
  };
  return rec(rec, 2);
}

struct AnalysisScratch {
  const Graph& g;
  const CycleSpectrum& sp;
  std::optional<int> chi;
  int omega;
  long long cycle_budget;
  long long solver_budget;
  bool bipartite;

  const std::vector<int>& L() const { return sp.odd_lengths; }
};

inline CheckOutcome check_gyarfas_bound(const AnalysisScratch& a) {
  if (a.bipartite) return CheckOutcome::skip("hypothesis");
  if (!a.sp.complete || !a.chi) return CheckOutcome::skip("budget");
  int bound = 2 * static_cast<int>(a.L().size()) + 2;
  if (*a.chi <= bound) return CheckOutcome::pass();
  return CheckOutcome::fail({{"chi", *a.chi}, {"bound", bound}, {"odd_lengths", a.L()}});
}

inline CheckOutcome check_gyarfas_equality(const AnalysisScratch& a) {
  if (a.bipartite) return CheckOutcome::skip("hypothesis");
  if (!a.sp.complete || !a.chi) return CheckOutcome::skip("budget");
  int bound = 2 * static_cast<int>(a.L().size()) + 2;
  if (*a.chi != bound) return CheckOutcome::skip("hypothesis");
  auto blocks = block_decomposition(a.g);
  for (VertexSet b : blocks.blocks) {
    int sz = set_size(b);
    if (sz != bound) continue;
    bool complete = true;
    for (VertexSet t = b; complete && t; t &= t - 1) {
      int v = std::countr_zero(t);
      if ((a.g.adj[v] & b) != (b & ~vbit(v))) complete = false;
    }
    if (complete) return CheckOutcome::pass();
  }
  std::vector<int> sizes;
  for (VertexSet b : blocks.blocks) sizes.push_back(set_size(b));
  return CheckOutcome::fail({{"chi", *a.chi}, {"block_sizes", sizes}});
}

inline CheckOutcome check_wang_single(const AnalysisScratch& a) {
  if (!a.sp.complete) return a.bipartite ? CheckOutcome::skip("hypothesis")
                                         : CheckOutcome::skip("budget");
  if (a.L().size() != 1 || a.L()[0] < 5) return CheckOutcome::skip("hypothesis");
  if (!a.chi) return CheckOutcome::skip("budget");
  if (*a.chi == 3) return CheckOutcome::pass();
  return CheckOutcome::fail({{"chi", *a.chi}, {"odd_lengths", a.L()}});
}

inline CheckOutcome check_wang_35(const AnalysisScratch& a) {
  if (!a.sp.complete) return a.bipartite ? CheckOutcome::skip("hypothesis")
                                         : CheckOutcome::skip("budget");
  if (a.L() != std::vector<int>{3, 5}) return CheckOutcome::skip("hypothesis");
  if (!a.chi) return CheckOutcome::skip("budget");
  auto k4 = find_k4(a.g);
  auto w6 = find_w6(a.g);
  int expected = (!k4 && !w6) ? 3 : std::max(4, a.omega);
  if (*a.chi == expected) return CheckOutcome::pass();
  return CheckOutcome::fail({{"chi", *a.chi},
                             {"expected", expected},
                             {"has_k4", k4.has_value()},
                             {"has_w6", w6.has_value()},
                             {"omega", a.omega}});
}

inline CheckOutcome check_thm_3l(const AnalysisScratch& a) {
  if (!a.sp.complete) return a.bipartite ? CheckOutcome::skip("hypothesis")
                                         : CheckOutcome::skip("budget");
  if (a.L().size() != 2 || a.L()[0] != 3 || a.L()[1] < 7) return CheckOutcome::skip("hypothesis");
  if (!a.chi) return CheckOutcome::skip("budget");
  int expected = std::max(3, a.omega);
  if (*a.chi == expected) return CheckOutcome::pass();
  return CheckOutcome::fail(
      {{"chi", *a.chi}, {"expected", expected}, {"omega", a.omega}, {"odd_lengths", a.L()}});
}

inline CheckOutcome check_thm_kl(const AnalysisScratch& a) {
  if (!a.sp.complete) return a.bipartite ? CheckOutcome::skip("hypothesis")
                                         : CheckOutcome::skip("budget");
  if (a.L().size() != 2 || a.L()[0] < 5) return CheckOutcome::skip("hypothesis");
  if (!a.chi) return CheckOutcome::skip("budget");
  if (*a.chi == 3) return CheckOutcome::pass();
  return CheckOutcome::fail({{"chi", *a.chi}, {"odd_lengths", a.L()}});
}

inline CheckOutcome check_krs_extension(const AnalysisScratch& a) {
  if (!a.sp.complete) return a.bipartite ? CheckOutcome::skip("hypothesis")
                                         : CheckOutcome::skip("budget");
  if (a.L().size() != 1 || a.omega > 3) return CheckOutcome::skip("hypothesis");
  auto c = shortest_odd_cycle(a.g);
  if (!c) return CheckOutcome::skip("budget");  // unreachable: |L| = 1
  int m = c->length();
  std::vector<int> bad;
  bool all_extend = for_each_cycle_coloring(m, [&](const std::vector<int>& col) {
    std::vector<int> pre(a.g.n, -1);
    for (int i = 0; i < m; ++i) pre[c->vertices[i]] = col[i];
    if (extend_precoloring(a.g, pre, 3, a.solver_budget)) return true;
    bad = col;
    return false;
  });
  if (all_extend) return CheckOutcome::pass();
  return CheckOutcome::fail({{"cycle", cycle_json(*c)}, {"colors", bad}});
}

inline CheckOutcome check_nonseparating_exists(const AnalysisScratch& a) {
  if (a.bipartite || a.g.n < 4) return CheckOutcome::skip("hypothesis");
  if (vertex_connectivity(a.g) < 3) return CheckOutcome::skip("hypothesis");
  EnumOutcome status = EnumOutcome::completed;
  auto c = non_separating_induced_odd_cycle(a.g, a.cycle_budget, &status);
  if (c) return CheckOutcome::pass();
  if (status == EnumOutcome::budget_exhausted) return CheckOutcome::skip("budget");
  return CheckOutcome::fail({{"note", "no induced odd cycle has connected remainder"}});
}

inline CheckOutcome check_book_characterization(const AnalysisScratch& a) {
  if (a.bipartite) return CheckOutcome::skip("hypothesis");
  if (!a.sp.complete) return CheckOutcome::skip("budget");
  if (a.L() != std::vector<int>{3} || !is_two_connected(a.g))
    return CheckOutcome::skip("hypothesis");
  bool is_k4 = a.g.n == 4 && a.g.edge_count() == 6;
  if (is_k4 || detect_book(a.g)) return CheckOutcome::pass();
  return CheckOutcome::fail({{"note", "neither complete on four vertices nor a book"}});
}

inline CheckOutcome check_voss_two_diagonals(const AnalysisScratch& a) {
  if (find_k4(a.g)) return CheckOutcome::skip("hypothesis");
  if (!a.chi) return CheckOutcome::skip("budget");
  if (*a.chi < 4) return CheckOutcome::skip("hypothesis");
  EnumOutcome status = EnumOutcome::completed;
  auto w = odd_cycle_with_two_diagonals(a.g, a.cycle_budget, &status);
  if (w) return CheckOutcome::pass();
  if (status == EnumOutcome::budget_exhausted) return CheckOutcome::skip("budget");
  return CheckOutcome::fail({{"chi", *a.chi}, {"note", "no odd cycle has two diagonals"}});
}

inline bool lemma_hypothesis(const AnalysisScratch& a, CheckOutcome* out) {
  if (!a.sp.complete) {
    *out = a.bipartite ? CheckOutcome::skip("hypothesis") : CheckOutcome::skip("budget");
    return false;
  }
  if (a.L().size() != 2 || a.L()[0] < 5) {
    *out = CheckOutcome::skip("hypothesis");
    return false;
  }
  if (!a.chi) {
    *out = CheckOutcome::skip("budget");
    return false;
  }
  if (*a.chi != 4 || !is_k_critical(a.g, 4, a.solver_budget)) {
    *out = CheckOutcome::skip("hypothesis");
    return false;
  }
  return true;
}

inline CheckOutcome check_lemma_3connected(const AnalysisScratch& a) {
  CheckOutcome gate;
  if (!lemma_hypothesis(a, &gate)) return gate;
  int kappa = vertex_connectivity(a.g);
  if (kappa >= 3) return CheckOutcome::pass();
  return CheckOutcome::fail({{"connectivity", kappa}, {"odd_lengths", a.L()}});
}

inline CheckOutcome check_lemma_intersect2(const AnalysisScratch& a) {
  CheckOutcome gate;
  if (!lemma_hypothesis(a, &gate)) return gate;
  auto stats = min_pairwise_odd_cycle_intersection(a.g, a.cycle_budget);
  if (!stats.complete) return CheckOutcome::skip("budget");
  if (!stats.min_intersection || *stats.min_intersection >= 2) return CheckOutcome::pass();
  return CheckOutcome::fail(
      {{"min_intersection", *stats.min_intersection}, {"odd_lengths", a.L()}});
}

inline CheckOutcome check_dirac_2cut(const AnalysisScratch& a) {
  auto seps = two_separations(a.g);
  if (seps.empty()) return CheckOutcome::skip("hypothesis");
  if (!a.chi) return CheckOutcome::skip("budget");
  int k = *a.chi;
  if (!is_k_critical(a.g, k, a.solver_budget)) return CheckOutcome::skip("hypothesis");
  for (const auto& sep : seps)
    if (dirac_decomposition_check(a.g, sep, k, a.solver_budget).passed)
      return CheckOutcome::pass();
  std::vector<std::vector<int>> cuts;
  for (const auto& sep : seps) cuts.push_back({sep.cut.first, sep.cut.second});
  return CheckOutcome::fail({{"k", k}, {"cuts", cuts}});
}

inline CheckOutcome run_check(CheckId id, const AnalysisScratch& a) {
  try {
    switch (id) {
      case CheckId::gyarfas_bound: return check_gyarfas_bound(a);
      case CheckId::gyarfas_equality: return check_gyarfas_equality(a);
      case CheckId::wang_single: return check_wang_single(a);
      case CheckId::wang_35: return check_wang_35(a);
      case CheckId::thm_3l: return check_thm_3l(a);
      case CheckId::thm_kl: return check_thm_kl(a);
      case CheckId::krs_extension: return check_krs_extension(a);
      case CheckId::nonseparating_exists: return check_nonseparating_exists(a);
      case CheckId::book_characterization: return check_book_characterization(a);
      case CheckId::voss_two_diagonals: return check_voss_two_diagonals(a);
      case CheckId::lemma_3connected: return check_lemma_3connected(a);
      case CheckId::lemma_intersect2: return check_lemma_intersect2(a);
      case CheckId::dirac_2cut: return check_dirac_2cut(a);
    }
  } catch (const error& e) {
    if (e.code() == errc::budget_exceeded) return CheckOutcome::skip("budget");
    throw;
  }
  return CheckOutcome::skip("hypothesis");
}

}  // namespace detail

struct AnalyzeOptions {
  std::vector<CheckId> checks = all_checks();
  long long cycle_budget = kDefaultCycleBudget;
  long long solver_budget = kDefaultSolverBudget;
};

inline Verdict analyze(const Graph& g, const AnalyzeOptions& opt = {}) {
  Verdict v;
  v.graph6 = to_graph6(g);
  v.n = g.n;
  v.edge_count = g.edge_count();
  v.spectrum = cycle_lengths(g, opt.cycle_budget);
  try {
    v.chi = chromatic_number(g, opt.solver_budget);
  } catch (const error& e) {
    if (e.code() != errc::budget_exceeded) throw;
  }
  v.omega = clique_number(g);
  detail::AnalysisScratch scratch{g,         v.spectrum,        v.chi, v.omega,
                                  opt.cycle_budget, opt.solver_budget,
                                  is_bipartite(g).has_value()};
  for (CheckId id : opt.checks) v.checks.emplace_back(id, detail::run_check(id, scratch));
  return v;
}

// Corpus descriptions: a graph6 file path, "gen:N[,connected][,trianglefree]",
// or "rand:N,P,COUNT,SEED".
struct CorpusSource {
  enum class Kind { file, generate, random } kind = Kind::file;
  std::string spec;  // verbatim, echoed in reports
  std::string path;
  GenerateOptions gen;
  struct {
    int n = 0;
    double p = 0;
    long long count = 0;
    std::uint64_t seed = 0;
  } rand;

  static CorpusSource from_spec(const std::string& text) {
    CorpusSource src;
    src.spec = text;
    if (text.rfind("gen:", 0) == 0) {
      src.kind = Kind::generate;
      std::string rest = text.substr(4);
      std::stringstream ss(rest);
      std::string tok;
      bool first = true;
      while (std::getline(ss, tok, ',')) {
        if (first) {
          first = false;
          try {
            src.gen.n = std::stoi(tok);
          } catch (...) {
            raise(errc::corpus_read_error, "bad generation order in corpus spec");
          }
        } else if (tok == "connected") {
          src.gen.connected_only = true;
        } else if (tok == "trianglefree") {
          src.gen.triangle_free_only = true;
        } else {
          raise(errc::corpus_read_error, "unknown generation flag: " + tok);
        }
      }
      if (first || src.gen.n < 1 || src.gen.n > kMaxVertices)
        raise(errc::corpus_read_error, "generation order outside 1..32");
      return src;
    }
    if (text.rfind("rand:", 0) == 0) {
      src.kind = Kind::random;
      std::stringstream ss(text.substr(5));
      char c1, c2, c3;
      long long n;
      if (!(ss >> n >> c1 >> src.rand.p >> c2 >> src.rand.count >> c3 >> src.rand.seed) ||
          c1 != ',' || c2 != ',' || c3 != ',' || !ss.eof())
        raise(errc::corpus_read_error, "random corpus spec needs N,P,COUNT,SEED");
      if (n < 1 || n > kMaxVertices || src.rand.p < 0 || src.rand.p > 1 || src.rand.count < 0)
        raise(errc::corpus_read_error, "random corpus parameters out of range");
      src.rand.n = static_cast<int>(n);
      return src;
    }
    src.kind = Kind::file;
    src.path = text;
    return src;
  }
};

// Streams a corpus in its defining order.
class CorpusReader {
 public:
  explicit CorpusReader(const CorpusSource& src) : src_(src) {
    switch (src_.kind) {
      case CorpusSource::Kind::file:
        file_.open(src_.path);
        if (!file_) raise(errc::corpus_read_error, "cannot open corpus file: " + src_.path);
        break;
      case CorpusSource::Kind::generate:
        gen_.emplace(src_.gen);
        break;
      case CorpusSource::Kind::random:
        break;
    }
  }

  // For reading prepared lines (e.g. standard input) as a file corpus.
  explicit CorpusReader(std::istream& stream) : stream_(&stream) {}

  std::optional<Graph> next() {
    switch (src_.kind) {
      case CorpusSource::Kind::file: {
        std::istream& in = stream_ ? *stream_ : file_;
        std::string line;
        while (std::getline(in, line)) {
          ++line_no_;
          if (line.empty() || line == "\r") continue;
          try {
            return parse_graph6(line);
          } catch (const error& e) {
            raise(errc::corpus_read_error,
                  "line " + std::to_string(line_no_) + ": " + e.what());
          }
        }
        return std::nullopt;
      }
      case CorpusSource::Kind::generate:
        return gen_->next();
      case CorpusSource::Kind::random: {
        if (emitted_ >= src_.rand.count) return std::nullopt;
        Graph g = random_graph(src_.rand.n, src_.rand.p,
                               src_.rand.seed + static_cast<std::uint64_t>(emitted_));
        ++emitted_;
        return g;
      }
    }
    return std::nullopt;
  }

 private:
  CorpusSource src_;
  std::ifstream file_;
  std::istream* stream_ = nullptr;
  std::optional<IsoFreeGenerator> gen_;
  long long emitted_ = 0;
  long long line_no_ = 0;
};

struct CheckTally {
  long long pass = 0, fail = 0, skip_hypothesis = 0, skip_budget = 0;
};

struct Report {
  int version = 1;
  std::string corpus;
  std::vector<CheckId> checks;
  long long graphs = 0;
  std::vector<CheckTally> tallies;  // parallel to checks
  long long total_pass = 0, total_fail = 0, total_skip = 0;
  std::vector<Verdict> failures;

  const CheckTally& tally(CheckId id) const {
    for (std::size_t i = 0; i < checks.size(); ++i)
      if (checks[i] == id) return tallies[i];
    raise(errc::corpus_read_error, "check not in report");
  }

  ordered_json to_json() const {
    ordered_json j;
    j["version"] = version;
    j["corpus"] = corpus;
    ordered_json names = ordered_json::array();
    for (CheckId id : checks) names.push_back(check_name(id));
    j["checks"] = std::move(names);
    j["graphs"] = graphs;
    ordered_json res = ordered_json::object();
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const CheckTally& t = tallies[i];
      res[check_name(checks[i])] = {{"pass", t.pass},
                                    {"fail", t.fail},
                                    {"skip_hypothesis", t.skip_hypothesis},
                                    {"skip_budget", t.skip_budget}};
    }
    j["results"] = std::move(res);
    j["totals"] = {{"pass", total_pass}, {"fail", total_fail}, {"skip", total_skip}};
    ordered_json fj = ordered_json::array();
    for (const Verdict& v : failures) fj.push_back(v.to_json());
    j["failures"] = std::move(fj);
    return j;
  }

  std::string to_csv() const {
    std::string out = "check,pass,fail,skip_hypothesis,skip_budget\n";
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const CheckTally& t = tallies[i];
      out += check_name(checks[i]);
      out += ',' + std::to_string(t.pass) + ',' + std::to_string(t.fail) + ',' +
             std::to_string(t.skip_hypothesis) + ',' + std::to_string(t.skip_budget) + '\n';
    }
    return out;
  }
};

struct CampaignOptions {
  AnalyzeOptions analyze;
  int jobs = 1;
  std::size_t chunk_size = 256;
};

inline Report run_campaign(const CorpusSource& source, const CampaignOptions& opt = {}) {
  if (opt.jobs < 1) raise(errc::corpus_read_error, "worker count must be at least 1");
  Report report;
  report.corpus = source.spec.empty() ? source.path : source.spec;
  report.checks = opt.analyze.checks;
  report.tallies.assign(report.checks.size(), {});

  CorpusReader reader(source);
  std::vector<Graph> chunk;
  chunk.reserve(opt.chunk_size);
  std::vector<Verdict> results;

  auto absorb = [&](const Verdict& v) {
    ++report.graphs;
    for (std::size_t i = 0; i < v.checks.size(); ++i) {
      CheckTally& t = report.tallies[i];
      const CheckOutcome& out = v.checks[i].second;
      switch (out.status) {
        case CheckOutcome::Status::pass:
          ++t.pass;
          ++report.total_pass;
          break;
        case CheckOutcome::Status::fail:
          ++t.fail;
          ++report.total_fail;
          break;
        case CheckOutcome::Status::skip:
          if (out.skip_reason == "budget")
            ++t.skip_budget;
          else
            ++t.skip_hypothesis;
          ++report.total_skip;
          break;
      }
    }
    if (v.any_fail()) report.failures.push_back(v);
  };

  bool more = true;
  while (more) {
    chunk.clear();
    while (chunk.size() < opt.chunk_size) {
      auto g = reader.next();
      if (!g) {
        more = false;
        break;
      }
      chunk.push_back(*g);
    }
    if (chunk.empty()) break;
    results.assign(chunk.size(), Verdict{});
    if (opt.jobs == 1 || chunk.size() == 1) {
      for (std::size_t i = 0; i < chunk.size(); ++i) results[i] = analyze(chunk[i], opt.analyze);
    } else {
      std::atomic<std::size_t> cursor{0};
      std::exception_ptr first_error;
      std::mutex error_lock;
      auto work = [&]() {
        try {
          while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= chunk.size()) return;
            results[i] = analyze(chunk[i], opt.analyze);
          }
        } catch (...) {
          std::lock_guard<std::mutex> hold(error_lock);
          if (!first_error) first_error = std::current_exception();
        }
      };
      int nthreads = std::min<int>(opt.jobs, static_cast<int>(chunk.size()));
      std::vector<std::thread> pool;
      pool.reserve(nthreads);
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
      if (first_error) std::rethrow_exception(first_error);
    }
    for (const Verdict& v : results) absorb(v);
  }
  return report;
}

inline int campaign_exit_code(const Report& r) {
  if (r.total_fail > 0) return 2;
  for (const CheckTally& t : r.tallies)
    if (t.skip_budget > 0) return 3;
  return 0;
}

// Corpus filter: emits the graph6 line of every graph matching all given
// predicates, in corpus order.  Graphs whose predicate cannot be decided
// within budget are dropped and counted.
struct MinePredicate {
  bool triangle_free = false;
  std::optional<int> odd_length_count;
  std::optional<int> chi;
};

struct MineResult {
  std::vector<std::string> matches;
  long long scanned = 0;
  long long indeterminate = 0;  // budget stopped the predicate evaluation
};

inline bool has_triangle(const Graph& g) {
  for (int u = 0; u < g.n; ++u)
    for (VertexSet t = g.adj[u]; t; t &= t - 1) {
      int v = std::countr_zero(t);
      if (v > u && (g.adj[u] & g.adj[v])) return true;
    }
  return false;
}

inline MineResult mine(const CorpusSource& source, const MinePredicate& pred,
                       const AnalyzeOptions& opt = {}) {
  MineResult res;
  CorpusReader reader(source);
  while (auto g = reader.next()) {
    ++res.scanned;
    if (pred.triangle_free && has_triangle(*g)) continue;
    if (pred.odd_length_count) {
      CycleSpectrum sp = cycle_lengths(*g, opt.cycle_budget);
      if (!sp.complete) {
        ++res.indeterminate;
        continue;
      }
      if (static_cast<int>(sp.odd_lengths.size()) != *pred.odd_length_count) continue;
    }
    if (pred.chi) {
      try {
        if (chromatic_number(*g, opt.solver_budget) != *pred.chi) continue;
      } catch (const error& e) {
        if (e.code() != errc::budget_exceeded) throw;
        ++res.indeterminate;
        continue;
      }
    }
    res.matches.push_back(to_graph6(*g));
  }
  return res;
}

}  // namespace oddspec
