#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <string>

#include "oddspec/canon.hpp"
#include "oddspec/generate.hpp"

using namespace oddspec;

namespace {

Graph from_bits(int n, unsigned long long bits) {
  Graph g = Graph::empty(n);
  int idx = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++idx)
      if (bits >> idx & 1) g.add_edge(u, v);
  return g;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  Graph h = Graph::empty(g.n);
  for (auto [u, v] : edge_list(g)) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace

TEST_CASE("certificate counts equal the unlabeled census for small orders") {
  // distinct certificates over all labeled graphs on n vertices must equal
  // the number of isomorphism classes: 1, 2, 4, 11, 34, 156
  const long long classes[] = {0, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> certs;
    int m = n * (n - 1) / 2;
    for (unsigned long long bits = 0; bits < (1ULL << m); ++bits)
      certs.insert(canonical_form(from_bits(n, bits)).certificate);
    REQUIRE(static_cast<long long>(certs.size()) == classes[n]);
  }
}

TEST_CASE("certificates are invariant under relabeling") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, 0.2 + 0.6 * ((rng() >> 11) * 0x1.0p-53), 310 + trial);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = permuted(g, perm);
    REQUIRE(canonical_form(g).certificate == canonical_form(h).certificate);
    REQUIRE(isomorphic(g, h));
  }
}

TEST_CASE("certificates separate non-isomorphic graphs") {
  CHECK_FALSE(isomorphic(named_graph("cycle(6)"), named_graph("path(6)")));
  CHECK_FALSE(isomorphic(named_graph("cycle(6)"),
                         parse_graph6(to_graph6(Graph::empty(6)))));
  // same degree sequence, different graphs: C6 vs two triangles
  Graph two_triangles = Graph::empty(6);
  for (int base : {0, 3})
    for (int i = 0; i < 3; ++i)
      two_triangles.add_edge(base + i, base + (i + 1) % 3);
  CHECK_FALSE(isomorphic(named_graph("cycle(6)"), two_triangles));
}

TEST_CASE("petersen standard labeling is isomorphic to the built-in") {
  Graph std_pet = Graph::empty(10);
  for (int i = 0; i < 5; ++i) {
    std_pet.add_edge(i, (i + 1) % 5);
    std_pet.add_edge(i, 5 + i);
    std_pet.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  CHECK(isomorphic(std_pet, named_graph("petersen")));
}

TEST_CASE("canonical form reports a valid relabeling") {
  Graph g = named_graph("groetzsch");
  CanonicalForm cf = canonical_form(g);
  Graph relabeled = permuted(g, std::vector<int>(cf.position.begin(), cf.position.begin() + g.n));
  CHECK(canonical_form(relabeled).certificate == cf.certificate);
}
