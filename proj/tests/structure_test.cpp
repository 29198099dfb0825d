#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oddspec/structure.hpp"
#include "oracles.hpp"

using namespace oddspec;

namespace {

// two K4 blocks glued per the classic 3-colorability counterexample: a
// 4-chromatic 7-vertex graph with two 2-cuts, used for the decomposition test
Graph glued_k4s() {
  Graph g = Graph::empty(7);
  for (auto [u, v] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                      {0, 5}, {0, 6}, {4, 5}, {4, 6}, {5, 6}, {1, 4}})
    g.add_edge(u, v);
  return g;
}

Graph diamond() {
  Graph g = Graph::empty(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  return g;
}

}  // namespace

TEST_CASE("block decomposition separates blocks at cut vertices") {
  // bowtie: triangles 0-1-2 and 0-3-4
  Graph bow = Graph::empty(5);
  bow.add_edge(0, 1);
  bow.add_edge(1, 2);
  bow.add_edge(2, 0);
  bow.add_edge(0, 3);
  bow.add_edge(3, 4);
  bow.add_edge(4, 0);
  BlockDecomposition bd = block_decomposition(bow);
  CHECK(bd.blocks.size() == 2);
  CHECK(bd.cut_vertices == vbit(0));

  BlockDecomposition path = block_decomposition(named_graph("path(4)"));
  CHECK(path.blocks.size() == 3);
  CHECK(set_size(path.cut_vertices) == 2);

  BlockDecomposition pet = block_decomposition(named_graph("petersen"));
  CHECK(pet.blocks.size() == 1);
  CHECK(pet.cut_vertices == 0);

  CHECK(is_two_connected(named_graph("petersen")));
  CHECK_FALSE(is_two_connected(bow));
  CHECK_FALSE(is_two_connected(named_graph("path(3)")));
}

TEST_CASE("vertex connectivity matches the subset oracle") {
  CHECK(vertex_connectivity(named_graph("petersen")) == 3);
  CHECK(vertex_connectivity(named_graph("groetzsch")) == 3);
  CHECK(vertex_connectivity(named_graph("chvatal")) == 4);
  CHECK(vertex_connectivity(named_graph("complete(5)")) == 4);
  CHECK(vertex_connectivity(named_graph("path(5)")) == 1);
  CHECK(vertex_connectivity(named_graph("cycle(6)")) == 2);
  CHECK_THROWS_AS(vertex_connectivity(named_graph("complete(1)")), error);

  Graph split = Graph::empty(4);
  split.add_edge(0, 1);
  CHECK(vertex_connectivity(split) == 0);

  std::mt19937_64 rng(51);
  int checked = 0;
  for (int trial = 0; checked < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = random_graph(n, 0.2 + 0.6 * ((rng() >> 11) * 0x1.0p-53), 6000 + trial);
    REQUIRE(vertex_connectivity(g) == oracle::vertex_connectivity(g));
    ++checked;
  }
}

TEST_CASE("two-separations carry their defining invariants") {
  auto seps = two_separations(diamond());
  REQUIRE(seps.size() == 1);
  CHECK(seps[0].cut == std::pair{0, 1});
  CHECK(valid_two_separation(diamond(), seps[0]));
  CHECK(set_size(seps[0].a_side) == 3);
  CHECK(set_size(seps[0].b_side) == 3);

  CHECK(two_separations(named_graph("complete(4)")).empty());
  CHECK(two_separations(named_graph("petersen")).empty());  // 3-connected

  Graph g = glued_k4s();
  auto gs = two_separations(g);
  REQUIRE(gs.size() == 2);
  for (const auto& sep : gs) {
    CHECK(valid_two_separation(g, sep));
    CHECK((sep.cut == std::pair{0, 1} || sep.cut == std::pair{0, 4}));
  }

  // C6 splits at every antipodal and non-adjacent pair
  auto c6 = two_separations(named_graph("cycle(6)"));
  CHECK(c6.size() == 9);  // all non-adjacent pairs of a 6-cycle
  for (const auto& sep : c6) CHECK(valid_two_separation(named_graph("cycle(6)"), sep));
}

TEST_CASE("book detection is an exact match") {
  auto b3 = detect_book(named_graph("book(3)"));
  REQUIRE(b3.has_value());
  CHECK(b3->spine == std::pair{0, 1});
  CHECK(b3->pages.size() == 3);

  auto tri = detect_book(named_graph("cycle(3)"));
  REQUIRE(tri.has_value());
  CHECK(tri->pages.size() == 1);

  CHECK_FALSE(detect_book(named_graph("cycle(6)")).has_value());
  CHECK_FALSE(detect_book(named_graph("wheel(6)")).has_value());
  CHECK_FALSE(detect_book(named_graph("complete(4)")).has_value());
  Graph b3_extra = named_graph("book(3)");
  b3_extra.add_edge(2, 3);  // page-page edge breaks the form
  CHECK_FALSE(detect_book(b3_extra).has_value());
}

TEST_CASE("clique and wheel finders") {
  auto k4 = find_k4(named_graph("complete(6)"));
  REQUIRE(k4.has_value());
  CHECK(*k4 == (vbit(0) | vbit(1) | vbit(2) | vbit(3)));  // lex-first
  CHECK_FALSE(find_k4(named_graph("petersen")).has_value());
  CHECK_FALSE(find_k4(named_graph("book(5)")).has_value());

  auto w6 = find_w6(named_graph("wheel(6)"));
  REQUIRE(w6.has_value());
  CHECK(set_size(*w6) == 6);
  CHECK(find_w6(named_graph("complete(6)")).has_value());
  CHECK_FALSE(find_w6(named_graph("petersen")).has_value());
  CHECK_FALSE(find_w6(named_graph("wheel(7)")).has_value());  // rim is a 6-cycle
}

TEST_CASE("non-separating induced odd cycle witnesses") {
  Graph pet = named_graph("petersen");
  auto c = non_separating_induced_odd_cycle(pet);
  REQUIRE(c.has_value());
  CHECK(c->length() == 5);
  CHECK(c->validate(pet));
  CHECK(c->is_induced(pet));
  CHECK(is_connected_on(pet, pet.vertices() & ~c->mask()));

  auto gro = non_separating_induced_odd_cycle(named_graph("groetzsch"));
  REQUIRE(gro.has_value());
  CHECK(gro->length() % 2 == 1);

  CHECK_FALSE(non_separating_induced_odd_cycle(named_graph("cycle(6)")).has_value());
}

TEST_CASE("odd cycle with two diagonals") {
  Graph gro = named_graph("groetzsch");
  auto wit = odd_cycle_with_two_diagonals(gro);
  REQUIRE(wit.has_value());
  CHECK(wit->first.length() == 7);
  CHECK(wit->first.validate(gro));
  CHECK(wit->second.size() >= 2);
  for (auto [u, v] : wit->second) CHECK(gro.has_edge(u, v));

  // petersen's nine-cycles carry three chords each; the shortest odd cycle
  // with two diagonals is one of them
  auto pet = odd_cycle_with_two_diagonals(named_graph("petersen"));
  REQUIRE(pet.has_value());
  CHECK(pet->first.length() == 9);
  CHECK(pet->second.size() == 3);

  CHECK_FALSE(odd_cycle_with_two_diagonals(named_graph("cycle(7)")).has_value());
  CHECK_FALSE(odd_cycle_with_two_diagonals(named_graph("complete_bipartite(3,3)")).has_value());
}

TEST_CASE("two-cut decomposition check passes on the glued K4s") {
  Graph g = glued_k4s();
  auto seps = two_separations(g);
  REQUIRE(seps.size() == 2);
  for (const auto& sep : seps) {
    DiracCheckRecord rec = dirac_decomposition_check(g, sep, 4);
    INFO("cut {" << sep.cut.first << "," << sep.cut.second << "}");
    CHECK(rec.cut_nonadjacent);
    CHECK(rec.sides_typed);
    CHECK(rec.same_side_plus_edge_critical);
    CHECK(rec.split_side_identified_critical);
    CHECK(rec.passed);
  }

  TwoSeparation bogus;
  bogus.a_side = vbit(0);
  bogus.b_side = vbit(1);
  bogus.cut = {0, 1};
  try {
    dirac_decomposition_check(g, bogus, 4);
    FAIL("expected invalid_separation");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_separation);
  }
}

TEST_CASE("disjoint path counts agree with connectivity on petersen") {
  Graph pet = named_graph("petersen");
  for (int u = 0; u < pet.n; ++u)
    for (int v = u + 1; v < pet.n; ++v)
      if (!pet.has_edge(u, v)) REQUIRE(detail::vertex_disjoint_paths(pet, u, v) == 3);
}
