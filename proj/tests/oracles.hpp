// Independent reference implementations used to cross-check the library.
// Everything here is deliberately naive: exhaustive DFS, subset scans, and
// counting loops.  None of it shares algorithmic machinery with the headers
// under test.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "oddspec/graph.hpp"

namespace oracle {

using oddspec::Graph;
using oddspec::VertexSet;
using oddspec::vbit;

// Rotate the minimum vertex to the front, then pick the direction with the
// smaller successor.  Normal form for comparing cycle sets.
inline std::vector<int> cycle_key(std::vector<int> walk) {
  auto it = std::min_element(walk.begin(), walk.end());
  std::rotate(walk.begin(), it, walk.end());
  if (walk.size() >= 3 && walk[1] > walk.back())
    std::reverse(walk.begin() + 1, walk.end());
  return walk;
}

// All simple cycles: DFS paths whose minimum vertex is the start, closed back
// to the start.  Each cycle is found once per direction; the key dedupes.
inline std::set<std::vector<int>> all_cycles(const Graph& g) {
  std::set<std::vector<int>> out;
  std::vector<int> path;
  VertexSet used = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    path.push_back(v);
    used |= vbit(v);
    for (VertexSet t = g.adj[v]; t; t &= t - 1) {
      int w = std::countr_zero(t);
      if (w == path[0] && path.size() >= 3) {
        out.insert(cycle_key(path));
      } else if (w > path[0] && !oddspec::set_contains(used, w)) {
        self(self, w);
      }
    }
    used &= ~vbit(v);
    path.pop_back();
  };
  for (int s = 0; s < g.n; ++s) dfs(dfs, s);
  return out;
}

inline std::set<int> cycle_lengths(const Graph& g) {
  std::set<int> out;
  for (const auto& c : all_cycles(g)) out.insert(static_cast<int>(c.size()));
  return out;
}

inline std::set<int> odd_lengths(const Graph& g) {
  std::set<int> out;
  for (int m : oracle::cycle_lengths(g))
    if (m % 2 == 1) out.insert(m);
  return out;
}

// Smallest k admitting a proper coloring, by counting through all assignments.
// Exponential; callers keep n small.
inline int chromatic_number(const Graph& g) {
  if (g.n == 0) return 0;
  auto edges = oddspec::edge_list(g);
  for (int k = 1;; ++k) {
    std::vector<int> a(g.n, 0);
    while (true) {
      bool ok = true;
      for (auto [u, v] : edges)
        if (a[u] == a[v]) { ok = false; break; }
      if (ok) return k;
      int i = 0;
      while (i < g.n && ++a[i] == k) a[i++] = 0;
      if (i == g.n) break;
    }
  }
}

inline int clique_number(const Graph& g) {
  int best = 0;
  for (VertexSet s = 0; s < (VertexSet{1} << g.n); ++s) {
    bool clique = true;
    for (VertexSet t = s; clique && t; t &= t - 1) {
      int u = std::countr_zero(t);
      for (VertexSet r = t & (t - 1); r; r &= r - 1)
        if (!g.has_edge(u, std::countr_zero(r))) { clique = false; break; }
    }
    if (clique) best = std::max(best, std::popcount(s));
  }
  return best;
}

// Smallest vertex subset whose removal disconnects the rest; complete graphs
// get n-1 by convention.
inline int vertex_connectivity(const Graph& g) {
  for (int k = 0; k < g.n - 1; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      VertexSet cut = 0;
      for (int i : idx) cut |= vbit(i);
      auto comps = oddspec::components_of(g, g.vertices() & ~cut);
      if (comps.size() >= 2) return k;
      if (k == 0) break;
      int i = k - 1;
      while (i >= 0 && idx[i] == g.n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return g.n - 1;
}

inline bool has_triangle(const Graph& g) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v) && (g.adj[u] & g.adj[v])) return true;
  return false;
}

inline bool proper_coloring(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.n) return false;
  for (auto [u, v] : oddspec::edge_list(g))
    if (colors[u] == colors[v]) return false;
  return true;
}

}  // namespace oracle
