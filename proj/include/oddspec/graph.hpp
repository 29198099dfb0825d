#pragma once

// Core graph type: simple undirected graphs on at most 32 vertices, one
// adjacency bitmask per vertex.  Everything downstream (cycle enumeration,
// coloring, structure checks) leans on word-parallel set operations.

#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddspec {

inline constexpr int kMaxVertices = 32;

enum class errc {
  malformed_header,
  non_canonical_padding,
  unsupported_order,
  index_out_of_range,
  edge_absent,
  too_small,
  bipartite_input,
  improper_precoloring,
  invalid_separation,
  budget_exceeded,
  corpus_read_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::malformed_header: return "malformed_header";
    case errc::non_canonical_padding: return "non_canonical_padding";
    case errc::unsupported_order: return "unsupported_order";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::edge_absent: return "edge_absent";
    case errc::too_small: return "too_small";
    case errc::bipartite_input: return "bipartite_input";
    case errc::improper_precoloring: return "improper_precoloring";
    case errc::invalid_separation: return "invalid_separation";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::corpus_read_error: return "corpus_read_error";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

// Vertex sets are plain 32-bit masks, bit i <=> vertex i.
using VertexSet = std::uint32_t;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline int first_vertex(VertexSet s) { return std::countr_zero(s); }
inline constexpr VertexSet full_set(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : ((VertexSet{1} << n) - 1);
}

struct Graph {
  int n = 0;
  std::array<VertexSet, kMaxVertices> adj{};

  static Graph empty(int order) {
    if (order < 0 || order > kMaxVertices)
      raise(errc::unsupported_order, "order " + std::to_string(order));
    Graph g;
    g.n = order;
    return g;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n) raise(errc::index_out_of_range, "vertex " + std::to_string(v));
  }

  bool has_edge(int u, int v) const { return set_contains(adj[u], v); }

  void add_edge(int u, int v) {
    assert(u != v && u >= 0 && v >= 0 && u < n && v < n);
    adj[u] |= vbit(v);
    adj[v] |= vbit(u);
  }

  void remove_edge_unchecked(int u, int v) {
    adj[u] &= ~vbit(v);
    adj[v] &= ~vbit(u);
  }

  int degree(int v) const { return std::popcount(adj[v]); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
  }

  VertexSet vertices() const { return full_set(n); }

  bool operator==(const Graph&) const = default;

  // Symmetry, no loops, no bits at or above n.  Editing ops assert this.
  bool invariants_hold() const {
    VertexSet all = vertices();
    for (int v = 0; v < n; ++v) {
      if (adj[v] & ~all) return false;
      if (adj[v] & vbit(v)) return false;
      for (VertexSet t = adj[v]; t; t &= t - 1)
        if (!set_contains(adj[std::countr_zero(t)], v)) return false;
    }
    for (int v = n; v < kMaxVertices; ++v)
      if (adj[v]) return false;
    return true;
  }
};

inline std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n; ++u)
    for (VertexSet t = g.adj[u] & ~full_set(u + 1); t; t &= t - 1)
      edges.emplace_back(u, std::countr_zero(t));
  return edges;
}

// ---------------------------------------------------------------------------
// graph6 codec (short form).  Header ">>graph6<<" is accepted on input.
// Order byte is n+63; body packs the upper triangle column by column,
// (0,1),(0,2),(1,2),(0,3),... six bits per byte, high bit first, zero padded.

inline Graph parse_graph6(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  if (line.empty()) raise(errc::malformed_header, "empty graph6 line");
  unsigned char first = static_cast<unsigned char>(line[0]);
  if (first == 126)
    raise(errc::unsupported_order, "long-form graph6 order is not supported");
  if (first < 63 || first > 125)
    raise(errc::malformed_header, "order byte out of range");
  int n = first - 63;
  if (n > kMaxVertices)
    raise(errc::unsupported_order, "order " + std::to_string(n) + " exceeds cap of 32");
  int nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (line.size() != 1 + nbytes)
    raise(errc::malformed_header, "body length " + std::to_string(line.size() - 1) +
                                      ", expected " + std::to_string(nbytes));
  Graph g = Graph::empty(n);
  int bit = 0;
  for (std::size_t k = 0; k < nbytes; ++k) {
    unsigned char raw = static_cast<unsigned char>(line[1 + k]);
    if (raw < 63 || raw > 126) raise(errc::malformed_header, "body byte out of range");
    unsigned val = raw - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      bool set = (val >> b) & 1u;
      if (bit >= nbits) {
        if (set) raise(errc::non_canonical_padding, "nonzero padding bit");
        continue;
      }
      if (set) {
        // bit index -> pair (i,j), j least with j(j-1)/2 > bit
        int j = 1;
        while ((j + 1) * j / 2 <= bit) ++j;
        int i = bit - j * (j - 1) / 2;
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

inline std::string to_graph6(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(g.n + 63));
  int nbits = g.n * (g.n - 1) / 2;
  unsigned val = 0;
  int filled = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      val = (val << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(val + 63));
        val = 0;
        filled = 0;
      }
    }
  }
  if (nbits % 6 != 0) {
    val <<= 6 - nbits % 6;
    out.push_back(static_cast<char>(val + 63));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named graphs.

struct NamedGraphId {
  enum class Kind {
    petersen,
    groetzsch,
    chvatal,
    complete,
    cycle,
    wheel,
    book,
    path,
    complete_bipartite,
  };
  Kind kind = Kind::petersen;
  int a = 0;
  int b = 0;

  static std::optional<NamedGraphId> parse(std::string_view token);
  std::string to_string() const;
};

namespace detail {
inline bool parse_int_list(std::string_view s, std::vector<int>& out) {
  int cur = 0;
  bool any = false;
  for (char ch : s) {
    if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + (ch - '0');
      if (cur > 1000) return false;
      any = true;
    } else if (ch == ',') {
      if (!any) return false;
      out.push_back(cur);
      cur = 0;
      any = false;
    } else {
      return false;
    }
  }
  if (!any) return false;
  out.push_back(cur);
  return true;
}
}  // namespace detail

inline std::optional<NamedGraphId> NamedGraphId::parse(std::string_view token) {
  using Kind = NamedGraphId::Kind;
  auto open = token.find('(');
  std::string_view name = token.substr(0, open);
  std::vector<int> args;
  if (open != std::string_view::npos) {
    if (token.back() != ')') return std::nullopt;
    if (!detail::parse_int_list(token.substr(open + 1, token.size() - open - 2), args))
      return std::nullopt;
  }
  auto mk = [&](Kind k, std::size_t argc) -> std::optional<NamedGraphId> {
    if (args.size() != argc) return std::nullopt;
    NamedGraphId id;
    id.kind = k;
    if (argc >= 1) id.a = args[0];
    if (argc >= 2) id.b = args[1];
    return id;
  };
  if (name == "petersen") return mk(Kind::petersen, 0);
  if (name == "groetzsch") return mk(Kind::groetzsch, 0);
  if (name == "chvatal") return mk(Kind::chvatal, 0);
  if (name == "complete") return mk(Kind::complete, 1);
  if (name == "cycle") return mk(Kind::cycle, 1);
  if (name == "wheel") return mk(Kind::wheel, 1);
  if (name == "book") return mk(Kind::book, 1);
  if (name == "path") return mk(Kind::path, 1);
  if (name == "complete_bipartite") return mk(Kind::complete_bipartite, 2);
  return std::nullopt;
}

inline std::string NamedGraphId::to_string() const {
  using Kind = NamedGraphId::Kind;
  switch (kind) {
    case Kind::petersen: return "petersen";
    case Kind::groetzsch: return "groetzsch";
    case Kind::chvatal: return "chvatal";
    case Kind::complete: return "complete(" + std::to_string(a) + ")";
    case Kind::cycle: return "cycle(" + std::to_string(a) + ")";
    case Kind::wheel: return "wheel(" + std::to_string(a) + ")";
    case Kind::book: return "book(" + std::to_string(a) + ")";
    case Kind::path: return "path(" + std::to_string(a) + ")";
    case Kind::complete_bipartite:
      return "complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return "?";
}

inline Graph named_graph(const NamedGraphId& id) {
  using Kind = NamedGraphId::Kind;
  auto need = [&](bool ok, const char* what) {
    if (!ok) raise(errc::unsupported_order, std::string("bad parameter for ") + what);
  };
  switch (id.kind) {
    case Kind::petersen: {
      // Kneser graph on the 2-subsets of {0..4} in lexicographic order;
      // adjacency is disjointness.
      std::array<std::pair<int, int>, 10> pairs{};
      int k = 0;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs[k++] = {i, j};
      Graph g = Graph::empty(10);
      for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) {
          auto [a, b] = pairs[u];
          auto [c, d] = pairs[v];
          if (a != c && a != d && b != c && b != d) g.add_edge(u, v);
        }
      return g;
    }
    case Kind::groetzsch: {
      // Mycielski construction applied to a 5-cycle: cycle 0..4, shadow
      // vertices 5..9 (5+i joined to the cycle neighbours of i), apex 10.
      Graph g = Graph::empty(11);
      for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        g.add_edge(i, j);
        g.add_edge(5 + i, j);
        g.add_edge(5 + j, i);
        g.add_edge(5 + i, 10);
      }
      return g;
    }
    case Kind::chvatal: {
      static constexpr std::pair<int, int> edges[] = {
          {0, 1}, {0, 4}, {0, 6}, {0, 9}, {1, 2},  {1, 5},  {1, 7},  {2, 3},
          {2, 6}, {2, 8}, {3, 4}, {3, 7}, {3, 9},  {4, 5},  {4, 8},  {5, 10},
          {5, 11}, {6, 10}, {6, 11}, {7, 8}, {7, 11}, {8, 10}, {9, 10}, {9, 11}};
      Graph g = Graph::empty(12);
      for (auto [u, v] : edges) g.add_edge(u, v);
      return g;
    }
    case Kind::complete: {
      need(id.a >= 1 && id.a <= kMaxVertices, "complete");
      Graph g = Graph::empty(id.a);
      for (int u = 0; u < id.a; ++u)
        for (int v = u + 1; v < id.a; ++v) g.add_edge(u, v);
      return g;
    }
    case Kind::cycle: {
      need(id.a >= 3 && id.a <= kMaxVertices, "cycle");
      Graph g = Graph::empty(id.a);
      for (int v = 0; v < id.a; ++v) g.add_edge(v, (v + 1) % id.a);
      return g;
    }
    case Kind::wheel: {
      // hub is vertex 0, rim is the cycle 1..k-1
      need(id.a >= 4 && id.a <= kMaxVertices, "wheel");
      Graph g = Graph::empty(id.a);
      int rim = id.a - 1;
      for (int v = 0; v < rim; ++v) {
        g.add_edge(0, 1 + v);
        g.add_edge(1 + v, 1 + (v + 1) % rim);
      }
      return g;
    }
    case Kind::book: {
      // spine edge {0,1}; each page vertex is joined to both spine ends
      need(id.a >= 1 && id.a + 2 <= kMaxVertices, "book");
      Graph g = Graph::empty(id.a + 2);
      g.add_edge(0, 1);
      for (int p = 0; p < id.a; ++p) {
        g.add_edge(0, 2 + p);
        g.add_edge(1, 2 + p);
      }
      return g;
    }
    case Kind::path: {
      need(id.a >= 1 && id.a <= kMaxVertices, "path");
      Graph g = Graph::empty(id.a);
      for (int v = 0; v + 1 < id.a; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case Kind::complete_bipartite: {
      need(id.a >= 1 && id.b >= 1 && id.a + id.b <= kMaxVertices, "complete_bipartite");
      Graph g = Graph::empty(id.a + id.b);
      for (int u = 0; u < id.a; ++u)
        for (int v = 0; v < id.b; ++v) g.add_edge(u, id.a + v);
      return g;
    }
  }
  raise(errc::unsupported_order, "unknown named graph");
}

inline Graph named_graph(std::string_view token) {
  auto id = NamedGraphId::parse(token);
  if (!id) raise(errc::corpus_read_error, "unknown graph name '" + std::string(token) + "'");
  return named_graph(*id);
}

// G(n,p) with a fixed generator (mt19937_64, whose output sequence is pinned
// by the standard) so the same (n, p, seed) gives the same graph everywhere.
// Pairs are drawn row by row: (0,1),(0,2),...,(0,n-1),(1,2),...
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0 || n > kMaxVertices) raise(errc::unsupported_order, "order " + std::to_string(n));
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0,1]");
  std::mt19937_64 rng(seed);
  Graph g = Graph::empty(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) g.add_edge(u, v);
    }
  return g;
}

// ---------------------------------------------------------------------------
// Edits.  All return a fresh graph with vertices renumbered densely.

inline Graph delete_vertex(const Graph& g, int v) {
  g.check_vertex(v);
  Graph out = Graph::empty(g.n - 1);
  VertexSet low = full_set(v);
  for (int u = 0; u < g.n; ++u) {
    if (u == v) continue;
    VertexSet row = g.adj[u] & ~vbit(v);
    VertexSet packed = (row & low) | ((v + 1 < kMaxVertices ? row >> (v + 1) : 0) << v);
    out.adj[u < v ? u : u - 1] = packed;
  }
  assert(out.invariants_hold());
  return out;
}

inline Graph delete_edge(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v || !g.has_edge(u, v))
    raise(errc::edge_absent, "{" + std::to_string(u) + "," + std::to_string(v) + "}");
  Graph out = g;
  out.remove_edge_unchecked(u, v);
  assert(out.invariants_hold());
  return out;
}

// Merge v into u: the merged vertex keeps position min(u,v) and inherits the
// union of both neighbourhoods (minus any loop); max(u,v) is removed and the
// remaining vertices shift down.
inline Graph contract_pair(const Graph& g, int u, int v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) raise(errc::index_out_of_range, "contracting a vertex with itself");
  int keep = u < v ? u : v;
  int drop = u < v ? v : u;
  Graph merged = g;
  merged.adj[keep] = (g.adj[u] | g.adj[v]) & ~(vbit(u) | vbit(v));
  for (int w = 0; w < g.n; ++w) {
    if (w == keep || w == drop) continue;
    if (set_contains(merged.adj[keep], w))
      merged.adj[w] |= vbit(keep);
  }
  Graph out = delete_vertex(merged, drop);
  assert(out.invariants_hold());
  return out;
}

// ---------------------------------------------------------------------------
// Connectivity and bipartiteness over vertex-set scopes.

inline VertexSet component_of(const Graph& g, int root, VertexSet scope) {
  VertexSet comp = vbit(root);
  VertexSet frontier = comp;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet t = frontier; t; t &= t - 1) next |= g.adj[std::countr_zero(t)];
    next &= scope & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

inline std::vector<VertexSet> components_of(const Graph& g, VertexSet scope) {
  std::vector<VertexSet> comps;
  VertexSet left = scope;
  while (left) {
    VertexSet c = component_of(g, std::countr_zero(left), scope);
    comps.push_back(c);
    left &= ~c;
  }
  return comps;
}

// Empty scope counts as connected.
inline bool is_connected_on(const Graph& g, VertexSet scope) {
  if (!scope) return true;
  return component_of(g, std::countr_zero(scope), scope) == scope;
}

inline bool is_connected(const Graph& g) { return is_connected_on(g, g.vertices()); }

struct Bipartition {
  VertexSet part_a = 0;
  VertexSet part_b = 0;
};

// Two-colors each component by BFS; the lowest vertex of a component (and so
// every isolated vertex) lands in part_a.  Returns nothing on an odd cycle.
inline std::optional<Bipartition> bipartition_on(const Graph& g, VertexSet scope) {
  Bipartition bp;
  VertexSet seen = 0;
  for (VertexSet roots = scope; roots; roots &= roots - 1) {
    int root = std::countr_zero(roots);
    if (set_contains(seen, root)) continue;
    VertexSet cur = vbit(root);
    bool side = false;
    while (cur) {
      VertexSet& mine = side ? bp.part_b : bp.part_a;
      mine |= cur;
      seen |= cur;
      VertexSet next = 0;
      for (VertexSet t = cur; t; t &= t - 1) next |= g.adj[std::countr_zero(t)];
      next &= scope & ~seen;
      cur = next;
      side = !side;
    }
  }
  for (VertexSet t = bp.part_a; t; t &= t - 1)
    if (g.adj[std::countr_zero(t)] & bp.part_a & scope) return std::nullopt;
  for (VertexSet t = bp.part_b; t; t &= t - 1)
    if (g.adj[std::countr_zero(t)] & bp.part_b & scope) return std::nullopt;
  return bp;
}

inline std::optional<Bipartition> is_bipartite(const Graph& g) {
  return bipartition_on(g, g.vertices());
}

// ---------------------------------------------------------------------------
// Induced subgraphs, with the dense renumbering map kept around.

struct InducedSubgraph {
  Graph graph;
  std::array<int, kMaxVertices> to_sub{};   // parent vertex -> sub vertex, -1 if absent
  std::vector<int> to_parent;               // sub vertex -> parent vertex
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  InducedSubgraph out;
  out.to_sub.fill(-1);
  for (VertexSet t = keep; t; t &= t - 1) {
    int v = std::countr_zero(t);
    out.to_sub[v] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  out.graph = Graph::empty(static_cast<int>(out.to_parent.size()));
  for (int su = 0; su < out.graph.n; ++su) {
    int pu = out.to_parent[su];
    for (VertexSet t = g.adj[pu] & keep; t; t &= t - 1) {
      int sv = out.to_sub[std::countr_zero(t)];
      if (sv > su) out.graph.add_edge(su, sv);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Biconnected components over a scope (classic lowpoint DFS with an edge
// stack).  Bridges show up as 2-vertex blocks; vertices isolated within the
// scope belong to no block.

namespace detail {

struct BlocksResult {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices = 0;
};

class BlockFinder {
 public:
  BlockFinder(const Graph& g, VertexSet scope) : g_(g), scope_(scope) {
    disc_.fill(-1);
    low_.fill(0);
  }

  BlocksResult run() {
    for (VertexSet t = scope_; t; t &= t - 1) {
      int root = std::countr_zero(t);
      if (disc_[root] >= 0) continue;
      root_children_ = 0;
      dfs(root, -1);
      if (root_children_ >= 2) res_.cut_vertices |= vbit(root);
    }
    return std::move(res_);
  }

 private:
  void dfs(int u, int parent) {
    disc_[u] = low_[u] = clock_++;
    for (VertexSet t = g_.adj[u] & scope_; t; t &= t - 1) {
      int v = std::countr_zero(t);
      if (v == parent) continue;
      if (disc_[v] < 0) {
        estack_.emplace_back(u, v);
        if (parent < 0) ++root_children_;
        dfs(v, u);
        low_[u] = std::min(low_[u], low_[v]);
        if (low_[v] >= disc_[u]) {
          if (parent >= 0) res_.cut_vertices |= vbit(u);
          VertexSet block = 0;
          while (true) {
            auto [a, b] = estack_.back();
            estack_.pop_back();
            block |= vbit(a) | vbit(b);
            if (a == u && b == v) break;
          }
          res_.blocks.push_back(block);
        }
      } else if (disc_[v] < disc_[u]) {
        estack_.emplace_back(u, v);
        low_[u] = std::min(low_[u], disc_[v]);
      }
    }
  }

  const Graph& g_;
  VertexSet scope_;
  std::array<int, kMaxVertices> disc_{}, low_{};
  std::vector<std::pair<int, int>> estack_;
  BlocksResult res_;
  int clock_ = 0;
  int root_children_ = 0;
};

inline BlocksResult biconnected_components(const Graph& g, VertexSet scope) {
  return BlockFinder(g, scope).run();
}

}  // namespace detail

}  // namespace oddspec
