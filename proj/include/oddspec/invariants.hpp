#pragma once

// Exact chromatic number, clique number, criticality, and precoloring
// extension.  The coloring solver is a DSATUR-style branch-and-propagate
// decision procedure: branch on a vertex of maximum saturation (ties by
// lowest index), try colors in ascending order.  All answers are exact;
// a node budget guards against pathological inputs.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddspec/graph.hpp"

namespace oddspec {

inline constexpr long long kDefaultSolverBudget = 100'000'000;

enum class Provenance {
  exact_solver,
  bipartite,
  chorded_cycle_rule,
  k4_extension,
  type_alternating,
  extension,
};

inline const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::exact_solver: return "exact_solver";
    case Provenance::bipartite: return "bipartite";
    case Provenance::chorded_cycle_rule: return "chorded_cycle_rule";
    case Provenance::k4_extension: return "k4_extension";
    case Provenance::type_alternating: return "type_alternating";
    case Provenance::extension: return "extension";
  }
  return "?";
}

struct ColoringCertificate {
  std::vector<int> colors;  // colors[v] in 0..num_colors-1
  int num_colors = 0;
  Provenance provenance = Provenance::exact_solver;

  // Proper, in range, and every color below num_colors used.  Extensions of
  // a caller-supplied precoloring may inherit palette gaps, so for them only
  // propriety and range are required.
  bool validate(const Graph& g) const {
    if (static_cast<int>(colors.size()) != g.n) return false;
    std::vector<char> used(num_colors, 0);
    for (int v = 0; v < g.n; ++v) {
      int c = colors[v];
      if (c < 0 || c >= num_colors) return false;
      used[c] = 1;
      for (VertexSet t = g.adj[v]; t; t &= t - 1)
        if (colors[std::countr_zero(t)] == c) return false;
    }
    if (provenance != Provenance::extension)
      for (char u : used)
        if (!u) return false;
    return true;
  }
};

namespace detail {

// Decision procedure: is there a proper coloring with num_colors colors
// extending the partial assignment?  assignment[v] = -1 for uncolored.
class ColorSolver {
 public:
  ColorSolver(const Graph& g, int num_colors, long long budget)
      : g_(g), k_(num_colors), budget_(budget) {}

  std::optional<std::vector<int>> solve(const std::vector<int>& assignment,
                                        bool symmetry_break) {
    colors_.fill(-1);
    forbidden_.fill(0);
    uncolored_ = g_.vertices();
    max_used_ = -1;
    symmetry_ = symmetry_break;
    for (int v = 0; v < g_.n; ++v) {
      int c = assignment.empty() ? -1 : assignment[v];
      if (c < 0) continue;
      if (c >= k_) return std::nullopt;
      if (forbidden_[v] >> c & 1)
        raise(errc::improper_precoloring, "precoloring assigns adjacent vertices one color");
      place(v, c);
    }
    if (dfs()) {
      std::vector<int> out(colors_.begin(), colors_.begin() + g_.n);
      return out;
    }
    return std::nullopt;
  }

 private:
  void place(int v, int c) {
    colors_[v] = c;
    uncolored_ &= ~vbit(v);
    if (c > max_used_) max_used_ = c;
    for (VertexSet t = g_.adj[v]; t; t &= t - 1)
      forbidden_[std::countr_zero(t)] |= std::uint32_t{1} << c;
  }

  void unplace(int v, int c, int prev_max) {
    colors_[v] = -1;
    uncolored_ |= vbit(v);
    max_used_ = prev_max;
    for (VertexSet t = g_.adj[v]; t; t &= t - 1) {
      int u = std::countr_zero(t);
      std::uint32_t f = 0;
      for (VertexSet s = g_.adj[u]; s; s &= s - 1) {
        int w = std::countr_zero(s);
        if (colors_[w] >= 0) f |= std::uint32_t{1} << colors_[w];
      }
      forbidden_[u] = f;
    }
    (void)c;
  }

  bool dfs() {
    if (!uncolored_) return true;
    if (--budget_ < 0) raise(errc::budget_exceeded, "coloring node budget exhausted");
    int best = -1, best_sat = -1, best_deg = -1;
    for (VertexSet t = uncolored_; t; t &= t - 1) {
      int v = std::countr_zero(t);
      int sat = std::popcount(forbidden_[v]);
      int deg = std::popcount(g_.adj[v] & uncolored_);
      // max saturation, then max uncolored degree, then lowest index
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    int limit = symmetry_ ? std::min(k_ - 1, max_used_ + 1) : k_ - 1;
    for (int c = 0; c <= limit; ++c) {
      if (forbidden_[best] >> c & 1) continue;
      int prev_max = max_used_;
      place(best, c);
      if (dfs()) return true;
      unplace(best, c, prev_max);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  long long budget_;
  std::array<int, kMaxVertices> colors_{};
  std::array<std::uint32_t, kMaxVertices> forbidden_{};
  VertexSet uncolored_ = 0;
  int max_used_ = -1;
  bool symmetry_ = false;
};

}  // namespace detail

// Is g properly colorable with num_colors colors?  Returns a witness.
inline std::optional<std::vector<int>> find_coloring(const Graph& g, int num_colors,
                                                     long long budget = kDefaultSolverBudget) {
  if (num_colors < 0) return std::nullopt;
  if (g.n == 0) return std::vector<int>{};
  if (num_colors == 0) return std::nullopt;
  detail::ColorSolver s(g, num_colors, budget);
  return s.solve({}, /*symmetry_break=*/true);
}

// Extend a partial proper coloring (precoloring[v] = -1 for free vertices)
// using at most num_colors colors, or report that none exists.
inline std::optional<std::vector<int>> extend_precoloring(const Graph& g,
                                                          const std::vector<int>& precoloring,
                                                          int num_colors,
                                                          long long budget = kDefaultSolverBudget) {
  if (static_cast<int>(precoloring.size()) != g.n)
    raise(errc::improper_precoloring, "precoloring length differs from order");
  for (int v = 0; v < g.n; ++v)
    if (precoloring[v] >= num_colors)
      raise(errc::improper_precoloring, "precolor outside palette");
  if (g.n == 0) return std::vector<int>{};
  if (num_colors <= 0) return std::nullopt;
  detail::ColorSolver s(g, num_colors, budget);
  return s.solve(precoloring, /*symmetry_break=*/false);
}

// Maximum clique via Bron-Kerbosch with pivoting and a size bound.
namespace detail {

inline void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                          VertexSet& best, int& best_size) {
  if (!p && !x) {
    int sz = set_size(r);
    if (sz > best_size) {
      best_size = sz;
      best = r;
    }
    return;
  }
  if (set_size(r) + set_size(p) <= best_size) return;
  VertexSet px = p | x;
  int pivot = first_vertex(px), pivot_gain = -1;
  for (VertexSet t = px; t; t &= t - 1) {
    int u = std::countr_zero(t);
    int gain = std::popcount(p & g.adj[u]);
    if (gain > pivot_gain) {
      pivot = u;
      pivot_gain = gain;
    }
  }
  for (VertexSet t = p & ~g.adj[pivot]; t; t &= t - 1) {
    int v = std::countr_zero(t);
    bron_kerbosch(g, r | vbit(v), p & g.adj[v], x & g.adj[v], best, best_size);
    p &= ~vbit(v);
    x |= vbit(v);
  }
}

}  // namespace detail

inline VertexSet maximum_clique(const Graph& g) {
  VertexSet best = 0;
  int best_size = 0;
  detail::bron_kerbosch(g, 0, g.vertices(), 0, best, best_size);
  return best;
}

inline int clique_number(const Graph& g) { return set_size(maximum_clique(g)); }

// Greedy upper bound used only to seed the exact search.
namespace detail {

inline int dsatur_upper_bound(const Graph& g) {
  std::array<int, kMaxVertices> colors{};
  colors.fill(-1);
  std::array<std::uint32_t, kMaxVertices> forbidden{};
  int used = 0;
  for (int step = 0; step < g.n; ++step) {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g.n; ++v) {
      if (colors[v] >= 0) continue;
      int sat = std::popcount(forbidden[v]);
      int deg = g.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    int c = std::countr_one(forbidden[best]);
    colors[best] = c;
    used = std::max(used, c + 1);
    for (VertexSet t = g.adj[best]; t; t &= t - 1)
      forbidden[std::countr_zero(t)] |= std::uint32_t{1} << c;
  }
  return used;
}

}  // namespace detail

// Exact chromatic number with an optimality witness: the returned coloring
// uses chromatic_number colors and the failed decision at one color fewer
// proves minimality.
inline ColoringCertificate chromatic_number_certificate(const Graph& g,
                                                        long long budget = kDefaultSolverBudget) {
  ColoringCertificate cert;
  if (g.n == 0) return cert;
  int lo = clique_number(g);
  int hi = detail::dsatur_upper_bound(g);
  for (int c = lo; c <= hi; ++c) {
    if (auto w = find_coloring(g, c, budget)) {
      cert.colors = std::move(*w);
      cert.num_colors = c;
      assert(cert.validate(g));
      return cert;
    }
  }
  raise(errc::budget_exceeded, "chromatic search failed to close");  // unreachable
}

inline int chromatic_number(const Graph& g, long long budget = kDefaultSolverBudget) {
  return chromatic_number_certificate(g, budget).num_colors;
}

// Vertex- and edge-criticality for the chromatic number.
inline bool is_k_critical(const Graph& g, int k, long long budget = kDefaultSolverBudget) {
  if (g.n == 0) return false;
  for (int v = 0; v < g.n; ++v)
    if (!g.degree(v)) return false;  // isolated vertex never affects chi >= 2
  if (chromatic_number(g, budget) != k) return false;
  for (auto [u, v] : edge_list(g)) {
    Graph h = delete_edge(g, u, v);
    if (!find_coloring(h, k - 1, budget)) return false;
  }
  return true;
}

// A k-critical subgraph of any graph with chromatic number >= k: delete
// vertices then edges while the remainder still needs k colors.
inline Graph extract_critical_subgraph(const Graph& g, int k,
                                       long long budget = kDefaultSolverBudget) {
  if (find_coloring(g, k - 1, budget))
    raise(errc::improper_precoloring, "graph is (k-1)-colorable; no k-critical subgraph");
  Graph h = g;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int v = 0; v < h.n; ++v) {
      Graph cand = delete_vertex(h, v);
      if (!find_coloring(cand, k - 1, budget)) {
        h = cand;
        shrunk = true;
        break;
      }
    }
  }
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (auto [u, v] : edge_list(h)) {
      Graph cand = delete_edge(h, u, v);
      if (!find_coloring(cand, k - 1, budget)) {
        h = cand;
        pruned = true;
        break;
      }
    }
  }
  assert(is_k_critical(h, k, budget));
  return h;
}

}  // namespace oddspec
