#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include "oddspec/canon.hpp"
#include "oddspec/generate.hpp"
#include "oracles.hpp"

using namespace oddspec;

namespace {

long long count_graphs(GenerateOptions opt) {
  IsoFreeGenerator gen(opt);
  long long total = 0;
  while (gen.next()) ++total;
  return total;
}

}  // namespace

TEST_CASE("census counts match the published tables") {
  // unlabeled simple graphs per order
  const long long all[] = {0, 1, 2, 4, 11, 34, 156, 1044, 12346};
  for (int n = 1; n <= 8; ++n) {
    GenerateOptions opt;
    opt.n = n;
    REQUIRE(count_graphs(opt) == all[n]);
  }
  // connected graphs per order
  const long long conn[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    GenerateOptions opt;
    opt.n = n;
    opt.connected_only = true;
    REQUIRE(count_graphs(opt) == conn[n]);
  }
  // triangle-free graphs per order
  const long long tf[] = {0, 1, 2, 3, 7, 14, 38, 107, 410, 1897};
  for (int n = 1; n <= 9; ++n) {
    GenerateOptions opt;
    opt.n = n;
    opt.triangle_free_only = true;
    REQUIRE(count_graphs(opt) == tf[n]);
  }
}

TEST_CASE("emitted graphs are pairwise non-isomorphic") {
  GenerateOptions opt;
  opt.n = 6;
  IsoFreeGenerator gen(opt);
  std::set<std::string> certs;
  while (auto g = gen.next()) {
    REQUIRE(g->n == 6);
    REQUIRE(g->invariants_hold());
    REQUIRE(certs.insert(canonical_form(*g).certificate).second);
  }
  CHECK(certs.size() == 156);
}

TEST_CASE("filters hold on every emitted graph") {
  GenerateOptions conn;
  conn.n = 6;
  conn.connected_only = true;
  IsoFreeGenerator cg(conn);
  while (auto g = cg.next()) REQUIRE(is_connected(*g));

  GenerateOptions tf;
  tf.n = 7;
  tf.triangle_free_only = true;
  IsoFreeGenerator tg(tf);
  while (auto g = tg.next()) REQUIRE_FALSE(oracle::has_triangle(*g));
}

TEST_CASE("generation order is deterministic") {
  auto run = [] {
    GenerateOptions opt;
    opt.n = 5;
    IsoFreeGenerator gen(opt);
    std::vector<std::string> out;
    while (auto g = gen.next()) out.push_back(to_graph6(*g));
    return out;
  };
  CHECK(run() == run());
}

TEST_CASE("generator rejects orders outside the supported range") {
  GenerateOptions bad;
  bad.n = 0;
  CHECK_THROWS_AS(IsoFreeGenerator(bad), error);
  bad.n = 33;
  CHECK_THROWS_AS(IsoFreeGenerator(bad), error);
  GenerateOptions one;
  one.n = 1;
  CHECK(count_graphs(one) == 1);
}

TEST_CASE("generate_all collects the stream") {
  GenerateOptions opt;
  opt.n = 4;
  auto graphs = generate_all(opt);
  CHECK(graphs.size() == 11);
}
