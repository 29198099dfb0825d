#pragma once

// Isomorph-free exhaustive generation by canonical augmentation: a child on
// k+1 vertices (new vertex attached to a subset of a parent representative)
// is kept iff deleting the new vertex and deleting the vertex at the last
// canonical position give the same certificate.  Parents are representatives
// themselves, so isomorphic children of distinct parents cannot both pass;
// duplicates under one parent are removed by certificate.
//
// Levels below n are materialized once; order-n graphs are streamed.
// The connected-only filter applies at the final level only, because a
// connected graph may have disconnected vertex-deleted subgraphs.  The
// triangle-free restriction is hereditary and prunes every level: the new
// vertex's neighborhood must be independent in the parent.

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "oddspec/canon.hpp"
#include "oddspec/graph.hpp"

namespace oddspec {

struct GenerateOptions {
  int n = 1;
  bool connected_only = false;
  bool triangle_free_only = false;
};

class IsoFreeGenerator {
 public:
  explicit IsoFreeGenerator(GenerateOptions opt) : opt_(opt) {
    if (opt_.n < 1 || opt_.n > kMaxVertices)
      raise(errc::unsupported_order, "generation order outside 1..32");
    level_ = {Graph::empty(1)};
    for (int k = 1; k < opt_.n - 1; ++k) level_ = expand_level(k, false);
    if (opt_.n == 1) {
      // stream the materialized level directly
      streaming_parent_ = 0;
      next_subset_ = 0;
    }
  }

  // Next order-n representative, in a fixed order independent of filters.
  std::optional<Graph> next() {
    if (opt_.n == 1) {
      if (streaming_parent_ == 0) {
        ++streaming_parent_;
        return level_[0];
      }
      return std::nullopt;
    }
    int k = opt_.n - 1;
    while (streaming_parent_ < level_.size()) {
      const Graph& parent = level_[streaming_parent_];
      if (next_subset_ == 0) {
        parent_cert_ = canonical_form(parent).certificate;
        emitted_.clear();
      }
      while (next_subset_ < (VertexSet{1} << k)) {
        VertexSet s = next_subset_++;
        if (auto child = try_child(parent, s)) {
          if (!opt_.connected_only || is_connected(*child)) return child;
        }
      }
      ++streaming_parent_;
      next_subset_ = 0;
    }
    return std::nullopt;
  }

 private:
  std::optional<Graph> try_child(const Graph& parent, VertexSet s) const {
    int k = parent.n;
    if (opt_.triangle_free_only)
      for (VertexSet t = s; t; t &= t - 1)
        if (parent.adj[std::countr_zero(t)] & s) return std::nullopt;
    Graph child = Graph::empty(k + 1);
    child.adj = parent.adj;
    for (VertexSet t = s; t; t &= t - 1) child.add_edge(std::countr_zero(t), k);
    CanonicalForm cf = canonical_form(child);
    std::string down = canonical_form(delete_vertex(child, cf.last_vertex)).certificate;
    if (down != parent_cert_) return std::nullopt;
    if (!emitted_.insert(cf.certificate).second) return std::nullopt;
    return child;
  }

  std::vector<Graph> expand_level(int k, bool connected_filter) {
    std::vector<Graph> out;
    for (const Graph& parent : level_) {
      parent_cert_ = canonical_form(parent).certificate;
      emitted_.clear();
      for (VertexSet s = 0; s < (VertexSet{1} << k); ++s)
        if (auto child = try_child(parent, s))
          if (!connected_filter || is_connected(*child)) out.push_back(*child);
    }
    return out;
  }

  GenerateOptions opt_;
  std::vector<Graph> level_;
  std::size_t streaming_parent_ = 0;
  VertexSet next_subset_ = 0;
  mutable std::string parent_cert_;
  mutable std::unordered_set<std::string> emitted_;
};

inline std::vector<Graph> generate_all(GenerateOptions opt) {
  IsoFreeGenerator gen(opt);
  std::vector<Graph> out;
  while (auto g = gen.next()) out.push_back(*g);
  return out;
}

}  // namespace oddspec
