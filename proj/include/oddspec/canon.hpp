#pragma once

// Canonical labeling by individualization and refinement.  The refinement
// tree is explored depth-first; the canonical certificate is the
// lexicographically greatest packed adjacency string over the leaves, and
// automorphisms discovered from equal leaves prune sibling branches.  Scales
// comfortably to the orders the generator needs (n <= 12 or so); certificates
// are complete isomorphism invariants at any supported order.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "oddspec/graph.hpp"

namespace oddspec {

struct CanonicalForm {
  std::string certificate;              // order byte + packed canonical adjacency
  std::array<int, kMaxVertices> position{};  // vertex -> canonical position
  int last_vertex = -1;                 // vertex at canonical position n-1
};

namespace detail {

struct CanonPartition {
  int n = 0;
  std::array<int, kMaxVertices> order{};   // order[pos] = vertex
  int ncells = 0;
  std::array<int, kMaxVertices + 1> cstart{};  // cstart[ncells] == n

  bool discrete() const { return ncells == n; }
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.n) {}

  CanonicalForm run() {
    CanonicalForm out;
    if (n_ == 0) {
      out.certificate.push_back('\0');
      return out;
    }
    CanonPartition p;
    p.n = n_;
    for (int v = 0; v < n_; ++v) p.order[v] = v;
    p.ncells = 1;
    p.cstart[0] = 0;
    p.cstart[1] = n_;
    refine(p);
    dfs(p);
    out.certificate = best_;
    for (int i = 0; i < n_; ++i) out.position[best_order_[i]] = i;
    out.last_vertex = best_order_[n_ - 1];
    return out;
  }

 private:
  VertexSet cell_mask(const CanonPartition& p, int ci) const {
    VertexSet m = 0;
    for (int i = p.cstart[ci]; i < p.cstart[ci + 1]; ++i) m |= vbit(p.order[i]);
    return m;
  }

  // Coarsest equitable refinement.  All decisions reference positions and
  // neighbour counts only, so the cell sequence is isomorphism-invariant.
  void refine(CanonPartition& p) const {
    bool again = true;
    while (again) {
      again = false;
      for (int xi = 0; xi < p.ncells && !again; ++xi) {
        int xs = p.cstart[xi], xe = p.cstart[xi + 1];
        if (xe - xs <= 1) continue;
        for (int wi = 0; wi < p.ncells && !again; ++wi) {
          VertexSet wmask = cell_mask(p, wi);
          std::array<int, kMaxVertices> cnt{};
          int c0 = std::popcount(g_.adj[p.order[xs]] & wmask);
          bool differ = false;
          for (int i = xs; i < xe; ++i) {
            cnt[i] = std::popcount(g_.adj[p.order[i]] & wmask);
            if (cnt[i] != c0) differ = true;
          }
          if (!differ) continue;
          // stable sort members of X by count, ascending
          std::array<int, kMaxVertices> tmp{};
          int m = xe - xs;
          for (int i = 0; i < m; ++i) tmp[i] = p.order[xs + i];
          for (int i = 1; i < m; ++i) {
            int v = tmp[i], cv = cnt[xs + i];
            int j = i - 1;
            while (j >= 0 && cnt[xs + j] > cv) {
              tmp[j + 1] = tmp[j];
              cnt[xs + j + 1] = cnt[xs + j];
              --j;
            }
            tmp[j + 1] = v;
            cnt[xs + j + 1] = cv;
          }
          for (int i = 0; i < m; ++i) p.order[xs + i] = tmp[i];
          // insert cell boundaries at count changes
          std::array<int, kMaxVertices + 1> ns{};
          int nn = 0;
          for (int ci = 0; ci <= xi; ++ci) ns[nn++] = p.cstart[ci];
          for (int i = xs + 1; i < xe; ++i)
            if (cnt[i] != cnt[i - 1]) ns[nn++] = i;
          for (int ci = xi + 1; ci <= p.ncells; ++ci) ns[nn++] = p.cstart[ci];
          p.ncells = nn - 1;
          for (int i = 0; i < nn; ++i) p.cstart[i] = ns[i];
          again = true;
        }
      }
    }
  }

  std::string leaf_certificate(const CanonPartition& p) const {
    std::string cert;
    cert.push_back(static_cast<char>(n_));
    unsigned acc = 0;
    int filled = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i) {
        acc = (acc << 1) | (g_.has_edge(p.order[i], p.order[j]) ? 1u : 0u);
        if (++filled == 8) {
          cert.push_back(static_cast<char>(acc));
          acc = 0;
          filled = 0;
        }
      }
    if (filled) cert.push_back(static_cast<char>(acc << (8 - filled)));
    return cert;
  }

  void leaf(const CanonPartition& p) {
    std::string cert = leaf_certificate(p);
    if (!have_best_ || cert > best_) {
      best_ = std::move(cert);
      best_order_ = p.order;
      have_best_ = true;
      return;
    }
    if (cert == best_) {
      std::array<int8_t, kMaxVertices> gen{};
      for (int i = 0; i < n_; ++i) gen[p.order[i]] = static_cast<int8_t>(best_order_[i]);
      gens_.push_back(gen);
    }
  }

  void dfs(const CanonPartition& p) {
    int target = -1;
    for (int ci = 0; ci < p.ncells; ++ci)
      if (p.cstart[ci + 1] - p.cstart[ci] > 1) {
        target = ci;
        break;
      }
    if (target < 0) {
      leaf(p);
      return;
    }
    int ts = p.cstart[target], te = p.cstart[target + 1];
    std::vector<int> tried;
    for (int idx = ts; idx < te; ++idx) {
      int u = p.order[idx];
      if (equivalent_to_tried(u, tried)) continue;
      tried.push_back(u);
      CanonPartition q = p;
      // individualize: u becomes a singleton cell in front of the remainder
      int at = ts;
      for (int i = ts; i < te; ++i)
        if (q.order[i] == u) at = i;
      for (int i = at; i > ts; --i) q.order[i] = q.order[i - 1];
      q.order[ts] = u;
      std::array<int, kMaxVertices + 1> ns{};
      int nn = 0;
      for (int ci = 0; ci <= target; ++ci) ns[nn++] = q.cstart[ci];
      ns[nn++] = ts + 1;
      for (int ci = target + 1; ci <= q.ncells; ++ci) ns[nn++] = q.cstart[ci];
      q.ncells = nn - 1;
      for (int i = 0; i < nn; ++i) q.cstart[i] = ns[i];
      refine(q);
      prefix_.push_back(u);
      dfs(q);
      prefix_.pop_back();
    }
  }

  // u is redundant if some recorded automorphism that fixes the current
  // individualization prefix pointwise maps it into an already-tried vertex.
  bool equivalent_to_tried(int u, const std::vector<int>& tried) {
    if (tried.empty() || gens_.empty()) return false;
    std::array<int, kMaxVertices> uf{};
    for (int v = 0; v < n_; ++v) uf[v] = v;
    auto find = [&](int v) {
      while (uf[v] != v) v = uf[v] = uf[uf[v]];
      return v;
    };
    for (const auto& gen : gens_) {
      bool fixes = true;
      for (int fix : prefix_)
        if (gen[fix] != fix) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gen[v]);
        if (a != b) uf[a] = b;
      }
    }
    int ru = find(u);
    for (int t : tried)
      if (find(t) == ru) return true;
    return false;
  }

  const Graph& g_;
  int n_;
  std::string best_;
  std::array<int, kMaxVertices> best_order_{};
  bool have_best_ = false;
  std::vector<std::array<int8_t, kMaxVertices>> gens_;
  std::vector<int> prefix_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  return detail::CanonSearch(g).run();
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  return canonical_form(a).certificate == canonical_form(b).certificate;
}

}  // namespace oddspec
