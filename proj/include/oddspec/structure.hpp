#pragma once

// Structural decompositions and witness finders: blocks, exact vertex
// connectivity, 2-separations, book graphs, K4/W6 containment,
// non-separating induced odd cycles, odd cycles with two diagonals, and the
// clause-by-clause decomposition check for critical graphs with a 2-cut.

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "oddspec/cycles.hpp"
#include "oddspec/graph.hpp"
#include "oddspec/invariants.hpp"

namespace oddspec {

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // maximal 2-connected pieces and bridges
  VertexSet cut_vertices = 0;
};

inline BlockDecomposition block_decomposition(const Graph& g) {
  auto r = detail::biconnected_components(g, g.vertices());
  return {std::move(r.blocks), r.cut_vertices};
}

inline bool is_two_connected(const Graph& g) {
  if (g.n < 3 || !is_connected(g)) return false;
  return block_decomposition(g).cut_vertices == 0;
}

// Exact vertex connectivity: minimum over non-adjacent pairs of the
// vertex-capacity max-flow (each vertex split into in/out halves).
namespace detail {

inline int vertex_disjoint_paths(const Graph& g, int s, int t) {
  // nodes: 2v = in, 2v+1 = out; arcs in->out cap 1, u_out->v_in cap n
  std::array<std::array<signed char, 2 * kMaxVertices>, 2 * kMaxVertices> cap{};
  const signed char big = 64;
  for (int v = 0; v < g.n; ++v) cap[2 * v][2 * v + 1] = 1;
  for (int u = 0; u < g.n; ++u)
    for (VertexSet tset = g.adj[u]; tset; tset &= tset - 1) {
      int v = std::countr_zero(tset);
      cap[2 * u + 1][2 * v] = big;
    }
  int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  while (true) {
    std::array<int, 2 * kMaxVertices> prev{};
    prev.fill(-1);
    prev[source] = source;
    std::array<int, 2 * kMaxVertices> queue{};
    int head = 0, tail = 0;
    queue[tail++] = source;
    while (head < tail && prev[sink] < 0) {
      int x = queue[head++];
      for (int y = 0; y < 2 * g.n; ++y)
        if (prev[y] < 0 && cap[x][y] > 0) {
          prev[y] = x;
          queue[tail++] = y;
        }
    }
    if (prev[sink] < 0) return flow;
    for (int y = sink; y != source; y = prev[y]) {
      --cap[prev[y]][y];
      ++cap[y][prev[y]];
    }
    ++flow;
  }
}

}  // namespace detail

inline int vertex_connectivity(const Graph& g) {
  if (g.n < 2) raise(errc::too_small, "connectivity needs at least two vertices");
  int best = g.n - 1;
  bool complete = true;
  for (int s = 0; s < g.n && best > 0; ++s)
    for (int t = s + 1; t < g.n && best > 0; ++t) {
      if (g.has_edge(s, t)) continue;
      complete = false;
      best = std::min(best, detail::vertex_disjoint_paths(g, s, t));
    }
  return complete ? g.n - 1 : best;
}

struct TwoSeparation {
  VertexSet a_side = 0;  // includes the cut
  VertexSet b_side = 0;  // includes the cut
  std::pair<int, int> cut{-1, -1};
};

inline bool valid_two_separation(const Graph& g, const TwoSeparation& sep) {
  auto [u, v] = sep.cut;
  if (u < 0 || u >= g.n || v < 0 || v >= g.n || u == v) return false;
  VertexSet cutset = vbit(u) | vbit(v);
  if ((sep.a_side & sep.b_side) != cutset) return false;
  if ((sep.a_side | sep.b_side) != g.vertices()) return false;
  if (set_size(sep.a_side) < 3 || set_size(sep.b_side) < 3) return false;
  VertexSet a_only = sep.a_side & ~cutset;
  VertexSet b_only = sep.b_side & ~cutset;
  for (VertexSet t = a_only; t; t &= t - 1)
    if (g.adj[std::countr_zero(t)] & b_only) return false;
  return true;
}

// Every unordered pair whose removal disconnects the rest, one canonical
// separation each: a_side holds the smallest component (ties by lowest
// vertex), b_side everything else.
inline std::vector<TwoSeparation> two_separations(const Graph& g) {
  std::vector<TwoSeparation> out;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      VertexSet rest = g.vertices() & ~(vbit(u) | vbit(v));
      auto comps = components_of(g, rest);
      if (comps.size() < 2) continue;
      std::size_t smallest = 0;
      for (std::size_t i = 1; i < comps.size(); ++i)
        if (set_size(comps[i]) < set_size(comps[smallest])) smallest = i;
      TwoSeparation sep;
      sep.cut = {u, v};
      sep.a_side = comps[smallest] | vbit(u) | vbit(v);
      sep.b_side = (rest & ~comps[smallest]) | vbit(u) | vbit(v);
      assert(valid_two_separation(g, sep));
      out.push_back(sep);
    }
  return out;
}

struct BookWitness {
  std::pair<int, int> spine{-1, -1};
  std::vector<int> pages;
};

// Exact match: g is r triangles sharing one common edge, nothing more.
inline std::optional<BookWitness> detect_book(const Graph& g) {
  if (g.n < 3) return std::nullopt;
  int r = g.n - 2;
  if (g.edge_count() != 2 * r + 1) return std::nullopt;
  for (int x1 = 0; x1 < g.n; ++x1)
    for (int x2 = x1 + 1; x2 < g.n; ++x2) {
      if (!g.has_edge(x1, x2)) continue;
      VertexSet others = g.vertices() & ~(vbit(x1) | vbit(x2));
      if ((g.adj[x1] & others) != others || (g.adj[x2] & others) != others) continue;
      bool pages_independent = true;
      for (VertexSet t = others; pages_independent && t; t &= t - 1)
        if (g.adj[std::countr_zero(t)] & others) pages_independent = false;
      if (!pages_independent) continue;
      BookWitness w;
      w.spine = {x1, x2};
      for (VertexSet t = others; t; t &= t - 1) w.pages.push_back(std::countr_zero(t));
      return w;
    }
  return std::nullopt;
}

// First 4-clique in lexicographic vertex order.
inline std::optional<VertexSet> find_k4(const Graph& g) {
  for (int a = 0; a < g.n; ++a)
    for (VertexSet tb = g.adj[a] & ~full_set(a + 1); tb; tb &= tb - 1) {
      int b = std::countr_zero(tb);
      VertexSet common = g.adj[a] & g.adj[b] & ~full_set(b + 1);
      for (VertexSet tc = common; tc; tc &= tc - 1) {
        int c = std::countr_zero(tc);
        VertexSet last = common & g.adj[c] & ~full_set(c + 1);
        if (last) return vbit(a) | vbit(b) | vbit(c) | vbit(first_vertex(last));
      }
    }
  return std::nullopt;
}

// Six vertices carrying a wheel on five spokes as a subgraph: a hub adjacent
// to five rim vertices that admit a spanning 5-cycle.  Extra edges allowed.
inline std::optional<VertexSet> find_w6(const Graph& g) {
  for (int hub = 0; hub < g.n; ++hub) {
    if (g.degree(hub) < 5) continue;
    std::vector<int> nbr;
    for (VertexSet t = g.adj[hub]; t; t &= t - 1) nbr.push_back(std::countr_zero(t));
    int d = static_cast<int>(nbr.size());
    std::array<int, 5> pick{};
    auto choose = [&](auto&& self, int from, int depth) -> std::optional<VertexSet> {
      if (depth == 5) {
        // spanning cycle over pick: fix pick[perm[0]] minimal, try orders
        std::array<int, 5> perm{0, 1, 2, 3, 4};
        do {
          bool ok = true;
          for (int i = 0; ok && i < 5; ++i)
            if (!g.has_edge(pick[perm[i]], pick[perm[(i + 1) % 5]])) ok = false;
          if (ok) {
            VertexSet w = vbit(hub);
            for (int x : pick) w |= vbit(x);
            return w;
          }
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
        return std::nullopt;
      }
      for (int i = from; i <= d - (5 - depth); ++i) {
        pick[depth] = nbr[i];
        if (auto w = self(self, i + 1, depth + 1)) return w;
      }
      return std::nullopt;
    };
    if (auto w = choose(choose, 0, 0)) return w;
  }
  return std::nullopt;
}

namespace detail {

// Streaming minimum over cycles that satisfy pred, ordered by length then
// vertex sequence; emitted sequences are already canonical.
template <typename Pred>
std::optional<Cycle> least_cycle_matching(const Graph& g, long long budget, Pred&& pred,
                                          EnumOutcome* status) {
  std::optional<Cycle> best;
  auto better = [&](const std::vector<int>& path) {
    if (!best) return true;
    if (path.size() != best->vertices.size()) return path.size() < best->vertices.size();
    return path < best->vertices;
  };
  EnumOutcome out = for_each_cycle(g, budget, [&](const std::vector<int>& path) {
    if (better(path) && pred(path)) {
      Cycle c;
      c.vertices = path;
      best = std::move(c);
    }
    return true;
  });
  if (status) *status = out;
  return best;
}

}  // namespace detail

// Least induced odd cycle whose removal leaves the rest connected (empty
// remainder counts as connected).  A null result with status
// budget_exhausted is inconclusive, not a proof of absence.
inline std::optional<Cycle> non_separating_induced_odd_cycle(
    const Graph& g, long long budget = kDefaultCycleBudget, EnumOutcome* status = nullptr) {
  return detail::least_cycle_matching(
      g, budget,
      [&](const std::vector<int>& path) {
        if (path.size() % 2 == 0) return false;
        Cycle c;
        c.vertices = path;
        if (!c.is_induced(g)) return false;
        return is_connected_on(g, g.vertices() & ~c.mask());
      },
      status);
}

// Least odd cycle carrying at least two chords, with the chords.
inline std::optional<std::pair<Cycle, std::vector<std::pair<int, int>>>>
odd_cycle_with_two_diagonals(const Graph& g, long long budget = kDefaultCycleBudget,
                             EnumOutcome* status = nullptr) {
  auto c = detail::least_cycle_matching(
      g, budget,
      [&](const std::vector<int>& path) {
        if (path.size() % 2 == 0) return false;
        Cycle cand;
        cand.vertices = path;
        return cand.chords(g).size() >= 2;
      },
      status);
  if (!c) return std::nullopt;
  auto chords = c->chords(g);
  return std::make_pair(std::move(*c), std::move(chords));
}

// Clause record for the decomposition of a k-critical graph at a 2-cut.
// Side types: a side is "same-forcing" when every (k-1)-coloring of it gives
// the cut pair one color, "split-forcing" when every such coloring separates
// them.  The decomposition needs one side of each kind; the same-forcing
// side plus the cut edge, and the split-forcing side with the cut pair
// identified, must both be k-critical.
struct DiracCheckRecord {
  bool cut_nonadjacent = false;
  bool sides_typed = false;           // for the reported assignment
  bool same_side_plus_edge_critical = false;
  bool split_side_identified_critical = false;
  int same_forcing_side = -1;         // 0 = a_side, 1 = b_side
  bool passed = false;
};

inline DiracCheckRecord dirac_decomposition_check(const Graph& g, const TwoSeparation& sep,
                                                  int k,
                                                  long long budget = kDefaultSolverBudget) {
  if (!valid_two_separation(g, sep))
    raise(errc::invalid_separation, "not a 2-separation of the input");
  DiracCheckRecord best;
  auto [u, v] = sep.cut;
  best.cut_nonadjacent = !g.has_edge(u, v);
  if (!best.cut_nonadjacent) return best;

  struct SideInfo {
    Graph graph;
    int su, sv;
    bool same_ok, split_ok;
  };
  auto side_info = [&](VertexSet side) {
    auto sub = induced_subgraph(g, side);
    SideInfo info{sub.graph, sub.to_sub[u], sub.to_sub[v], false, false};
    std::vector<int> pre(sub.graph.n, -1);
    pre[info.su] = 0;
    pre[info.sv] = 0;
    info.same_ok = extend_precoloring(sub.graph, pre, k - 1, budget).has_value();
    pre[info.sv] = 1;
    info.split_ok = extend_precoloring(sub.graph, pre, k - 1, budget).has_value();
    return info;
  };
  SideInfo sides[2] = {side_info(sep.a_side), side_info(sep.b_side)};

  for (int same = 0; same < 2; ++same) {
    DiracCheckRecord rec;
    rec.cut_nonadjacent = true;
    rec.same_forcing_side = same;
    const SideInfo& s1 = sides[same];
    const SideInfo& s2 = sides[1 - same];
    rec.sides_typed = s1.same_ok && !s1.split_ok && s2.split_ok && !s2.same_ok;
    Graph g1 = s1.graph;
    g1.add_edge(s1.su, s1.sv);
    rec.same_side_plus_edge_critical = is_k_critical(g1, k, budget);
    Graph g2 = contract_pair(s2.graph, s2.su, s2.sv);
    rec.split_side_identified_critical = is_k_critical(g2, k, budget);
    rec.passed = rec.sides_typed && rec.same_side_plus_edge_critical &&
                 rec.split_side_identified_critical;
    if (rec.passed || same == 0) best = rec;
    if (rec.passed) break;
  }
  return best;
}

}  // namespace oddspec
