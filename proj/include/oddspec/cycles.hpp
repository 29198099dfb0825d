#pragma once

// Cycle enumeration and the odd cycle length set.
//
// The enumerator is Johnson-style: one search per start vertex s over the
// subgraph induced by {v >= s}, restricted to the biconnected component of s,
// with the classic blocked-set / unblock-list bookkeeping.  Each simple cycle
// is emitted exactly once, least vertex first, in the direction that makes
// the second vertex smaller than the last; emitted sequences are therefore
// already in canonical rotation.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "oddspec/graph.hpp"

namespace oddspec {

inline constexpr long long kDefaultCycleBudget = 10'000'000;

struct Cycle {
  std::vector<int> vertices;  // canonical rotation, least vertex first

  int length() const { return static_cast<int>(vertices.size()); }

  VertexSet mask() const {
    VertexSet m = 0;
    for (int v : vertices) m |= vbit(v);
    return m;
  }

  // Rotate/reflect an arbitrary traversal into canonical form.
  static Cycle canonical(std::vector<int> walk) {
    Cycle c;
    if (walk.empty()) return c;
    std::size_t at = 0;
    for (std::size_t i = 1; i < walk.size(); ++i)
      if (walk[i] < walk[at]) at = i;
    std::rotate(walk.begin(), walk.begin() + at, walk.end());
    if (walk.size() >= 3 && walk[1] > walk.back())
      std::reverse(walk.begin() + 1, walk.end());
    c.vertices = std::move(walk);
    return c;
  }

  bool validate(const Graph& g) const {
    int m = length();
    if (m < 3) return false;
    VertexSet seen = 0;
    for (int v : vertices) {
      if (v < 0 || v >= g.n || set_contains(seen, v)) return false;
      seen |= vbit(v);
    }
    for (int i = 0; i < m; ++i)
      if (!g.has_edge(vertices[i], vertices[(i + 1) % m])) return false;
    return true;
  }

  // Edges between non-consecutive cycle vertices.
  std::vector<std::pair<int, int>> chords(const Graph& g) const {
    std::vector<std::pair<int, int>> out;
    int m = length();
    std::array<int, kMaxVertices> pos{};
    for (int i = 0; i < m; ++i) pos[vertices[i]] = i;
    VertexSet vs = mask();
    for (int i = 0; i < m; ++i) {
      int u = vertices[i];
      for (VertexSet t = g.adj[u] & vs; t; t &= t - 1) {
        int w = std::countr_zero(t);
        if (w <= u) continue;
        int j = pos[w];
        int d = std::abs(i - j);
        if (d != 1 && d != m - 1) {
          auto e = std::minmax(u, w);
          out.emplace_back(e.first, e.second);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_induced(const Graph& g) const { return chords(g).empty(); }
};

enum class EnumOutcome { completed, stopped, budget_exhausted };

namespace detail {

template <typename CB>
class JohnsonEnumerator {
 public:
  JohnsonEnumerator(const Graph& g, long long budget, CB& cb)
      : g_(g), budget_(budget), cb_(cb) {}

  EnumOutcome run() {
    for (int s = 0; s < g_.n && outcome_ == EnumOutcome::completed; ++s) {
      VertexSet scope = g_.vertices() & ~full_set(s);
      auto blocks = biconnected_components(g_, scope);
      for (const VertexSet& block : blocks.blocks) {
        if (!set_contains(block, s) || set_size(block) < 3) continue;
        block_ = block;
        start_ = s;
        blocked_ = 0;
        waiting_.fill(0);
        path_.clear();
        dfs(s);
        if (outcome_ != EnumOutcome::completed) break;
      }
    }
    return outcome_;
  }

 private:
  void unblock(int v) {
    blocked_ &= ~vbit(v);
    VertexSet w = waiting_[v];
    waiting_[v] = 0;
    while (w) {
      int u = std::countr_zero(w);
      w &= w - 1;
      if (set_contains(blocked_, u)) unblock(u);
    }
  }

  bool dfs(int v) {
    bool found = false;
    path_.push_back(v);
    blocked_ |= vbit(v);
    for (VertexSet t = g_.adj[v] & block_; t; t &= t - 1) {
      int w = std::countr_zero(t);
      if (outcome_ != EnumOutcome::completed) break;
      if (w == start_) {
        if (path_.size() >= 3) {
          found = true;
          if (path_[1] < path_.back()) {
            if (--budget_ < 0) {
              outcome_ = EnumOutcome::budget_exhausted;
              break;
            }
            if (!cb_(path_)) {
              outcome_ = EnumOutcome::stopped;
              break;
            }
          }
        }
      } else if (!set_contains(blocked_, w)) {
        if (dfs(w)) found = true;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (VertexSet t = g_.adj[v] & block_; t; t &= t - 1) {
        int w = std::countr_zero(t);
        if (w != start_) waiting_[w] |= vbit(v);
      }
    }
    path_.pop_back();
    return found;
  }

  const Graph& g_;
  long long budget_;
  CB& cb_;
  VertexSet block_ = 0;
  int start_ = 0;
  VertexSet blocked_ = 0;
  std::array<VertexSet, kMaxVertices> waiting_{};
  std::vector<int> path_;
  EnumOutcome outcome_ = EnumOutcome::completed;
};

}  // namespace detail

// cb receives each cycle as a vertex sequence in canonical rotation and
// returns false to stop.  The budget bounds the number of cycles emitted.
template <typename CB>
EnumOutcome for_each_cycle(const Graph& g, long long budget, CB&& cb) {
  detail::JohnsonEnumerator<CB> e(g, budget, cb);
  return e.run();
}

struct CycleSpectrum {
  std::vector<int> lengths;       // sorted, subset of 3..n
  std::vector<int> odd_lengths;   // sorted odd sublist
  bool complete = true;

  bool has_length(int m) const {
    return std::find(lengths.begin(), lengths.end(), m) != lengths.end();
  }
  std::optional<int> min_odd() const {
    return odd_lengths.empty() ? std::nullopt : std::optional<int>(odd_lengths.front());
  }
};

inline CycleSpectrum cycle_lengths(const Graph& g, long long budget = kDefaultCycleBudget) {
  std::uint64_t seen = 0;
  std::uint64_t want = 0;
  for (int m = 3; m <= g.n; ++m) want |= std::uint64_t{1} << m;
  auto cb = [&](const std::vector<int>& path) {
    seen |= std::uint64_t{1} << path.size();
    return (seen & want) != want;
  };
  EnumOutcome out = for_each_cycle(g, budget, cb);
  CycleSpectrum sp;
  // stopping early because every feasible length appeared still means the
  // length set is exact
  sp.complete = out != EnumOutcome::budget_exhausted;
  for (int m = 3; m <= g.n; ++m)
    if ((seen >> m) & 1) {
      sp.lengths.push_back(m);
      if (m % 2) sp.odd_lengths.push_back(m);
    }
  return sp;
}

// Shortest odd closed walk through v, found by BFS between the two copies of
// v in the bipartite double cover.  Independent of the cycle enumerator.
namespace detail {

inline int double_cover_distance(const Graph& g, int v, int cap,
                                 std::array<int, 2 * kMaxVertices>* parent = nullptr) {
  std::array<int, 2 * kMaxVertices> dist{};
  dist.fill(-1);
  if (parent) parent->fill(-1);
  std::array<int, 2 * kMaxVertices> queue{};
  int head = 0, tail = 0;
  int source = 2 * v;
  dist[source] = 0;
  queue[tail++] = source;
  while (head < tail) {
    int cur = queue[head++];
    int u = cur / 2, side = cur % 2;
    if (cap >= 0 && dist[cur] >= cap) break;
    for (VertexSet t = g.adj[u]; t; t &= t - 1) {
      int w = std::countr_zero(t);
      int nxt = 2 * w + (1 - side);
      if (dist[nxt] < 0) {
        dist[nxt] = dist[cur] + 1;
        if (parent) (*parent)[nxt] = cur;
        queue[tail++] = nxt;
        if (nxt == 2 * v + 1) return dist[nxt];
      }
    }
  }
  return dist[2 * v + 1];
}

}  // namespace detail

inline std::optional<int> odd_girth(const Graph& g) {
  int best = -1;
  for (int v = 0; v < g.n; ++v) {
    int d = detail::double_cover_distance(g, v, best);
    if (d > 0 && (best < 0 || d < best)) best = d;
  }
  return best < 0 ? std::nullopt : std::optional<int>(best);
}

// A witness for the odd girth.  The first vertex (ascending) achieving the
// global minimum yields a closed walk that is necessarily a simple cycle.
inline std::optional<Cycle> shortest_odd_cycle(const Graph& g) {
  auto og = odd_girth(g);
  if (!og) return std::nullopt;
  for (int v = 0; v < g.n; ++v) {
    std::array<int, 2 * kMaxVertices> parent{};
    int d = detail::double_cover_distance(g, v, *og, &parent);
    if (d != *og) continue;
    std::vector<int> walk;
    for (int cur = 2 * v + 1; cur >= 0; cur = parent[cur]) walk.push_back(cur / 2);
    walk.pop_back();  // drop the duplicated start
    Cycle c = Cycle::canonical(std::move(walk));
    assert(c.validate(g));
    return c;
  }
  return std::nullopt;
}

struct CycleList {
  std::vector<Cycle> cycles;
  bool exhausted = false;  // true when more matching cycles exist beyond limit/budget
};

inline CycleList cycles_of_length(const Graph& g, int m, std::size_t limit,
                                  long long budget = kDefaultCycleBudget) {
  CycleList out;
  auto cb = [&](const std::vector<int>& path) {
    if (path.size() == static_cast<std::size_t>(m)) {
      if (out.cycles.size() == limit) {
        out.exhausted = true;
        return false;
      }
      Cycle c;
      c.vertices = path;
      out.cycles.push_back(std::move(c));
    }
    return true;
  };
  if (for_each_cycle(g, budget, cb) == EnumOutcome::budget_exhausted) out.exhausted = true;
  return out;
}

struct OddCyclePairStats {
  std::optional<int> min_intersection;  // empty when fewer than two odd cycles
  bool complete = true;                 // false when the enumeration budget ran out
};

// Minimum |V(C) ∩ V(C')| over unordered pairs of distinct odd cycles.
inline OddCyclePairStats min_pairwise_odd_cycle_intersection(
    const Graph& g, long long budget = kDefaultCycleBudget) {
  if (is_bipartite(g)) raise(errc::bipartite_input, "graph has no odd cycle");
  std::vector<VertexSet> masks;
  auto cb = [&](const std::vector<int>& path) {
    if (path.size() % 2) {
      VertexSet m = 0;
      for (int v : path) m |= vbit(v);
      masks.push_back(m);
    }
    return true;
  };
  EnumOutcome out = for_each_cycle(g, budget, cb);
  OddCyclePairStats stats;
  if (out == EnumOutcome::budget_exhausted) {
    stats.complete = false;
    return stats;
  }
  if (masks.size() < 2) return stats;
  int best = kMaxVertices + 1;
  for (std::size_t i = 0; i < masks.size() && best > 0; ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      int isect = std::popcount(masks[i] & masks[j]);
      if (isect < best) {
        best = isect;
        if (best == 0) break;
      }
    }
  stats.min_intersection = best;
  return stats;
}

}  // namespace oddspec
