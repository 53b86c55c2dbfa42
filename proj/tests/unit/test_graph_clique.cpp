#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "ekr/clique.hpp"
#include "ekr/graph.hpp"
#include "oracles/brute.hpp"

using namespace ekr;

namespace {

// Kneser graph K(5,2): vertices are the 2-subsets of {0..4}, edges join
// disjoint pairs. This is the Petersen graph.
UndirectedGraph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  UndirectedGraph g(pairs.size());
  for (std::size_t u = 0; u < pairs.size(); ++u)
    for (std::size_t v = u + 1; v < pairs.size(); ++v) {
      auto [a, b] = pairs[u];
      auto [c, d] = pairs[v];
      if (a != c && a != d && b != c && b != d) g.add_edge(u, v);
    }
  return g;
}

UndirectedGraph complement(const UndirectedGraph& g) {
  UndirectedGraph out(g.vertex_count());
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

UndirectedGraph complete(std::size_t n) {
  UndirectedGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

UndirectedGraph cycle(std::size_t n) {
  UndirectedGraph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

}  // namespace

TEST_SUITE("graph_clique") {

TEST_CASE("graph construction and validation") {
  UndirectedGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);

  CHECK_THROWS_WITH_AS(UndirectedGraph(0), "graph needs at least one vertex",
                       InvalidInput);
  CHECK_THROWS_AS(UndirectedGraph(kMaxGraphVertices + 1), CapExceeded);
  CHECK_THROWS_WITH_AS(g.add_edge(1, 1), "self-loops are not allowed", InvalidInput);
  CHECK_THROWS_WITH_AS(g.add_edge(0, 4), "edge endpoint out of range", InvalidInput);
}

TEST_CASE("dimacs output") {
  UndirectedGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  std::ostringstream out;
  write_dimacs(out, g);
  CHECK(out.str() == "p edge 4 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("is_clique") {
  UndirectedGraph g = complete(4);
  CHECK(is_clique(g, std::vector<std::uint32_t>{}));
  CHECK(is_clique(g, std::vector<std::uint32_t>{2}));
  CHECK(is_clique(g, std::vector<std::uint32_t>{0, 1, 2, 3}));
  UndirectedGraph h = cycle(5);
  CHECK(is_clique(h, std::vector<std::uint32_t>{0, 1}));
  CHECK_FALSE(is_clique(h, std::vector<std::uint32_t>{0, 1, 2}));
  CHECK_FALSE(is_clique(h, std::vector<std::uint32_t>{3, 3}));
  CHECK_THROWS_WITH_AS(is_clique(h, std::vector<std::uint32_t>{5}),
                       "vertex out of range", InvalidInput);
}

TEST_CASE("known clique numbers") {
  CHECK(max_clique(complete(10)).size == 10);
  CHECK(max_clique(complete(1)).size == 1);
  CHECK(max_clique(UndirectedGraph(6)).size == 1);
  CHECK(max_clique(cycle(7)).size == 2);
  CHECK(max_clique(petersen()).size == 2);
  // Petersen independence number is 4.
  CHECK(max_clique(complement(petersen())).size == 4);

  CliqueResult r = max_clique(complete(10));
  CHECK(r.witness == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("matches the subset oracle on random graphs") {
  for (std::uint32_t seed = 1; seed <= 40; ++seed) {
    std::size_t n = 3 + seed % 16;
    unsigned density = 10 + (seed * 23) % 85;
    UndirectedGraph g = brute::random_graph(n, density, seed);
    CliqueResult r = max_clique(g);
    CAPTURE(seed);
    CHECK(r.size == brute::max_clique_size_subsets(g));
    CHECK(r.witness.size() == r.size);
    CHECK(is_clique(g, r.witness));
  }
}

TEST_CASE("greedy lower bound is a valid clique") {
  for (std::uint32_t seed = 1; seed <= 10; ++seed) {
    UndirectedGraph g = brute::random_graph(14, 60, seed);
    auto greedy = greedy_clique_lower_bound(g);
    CHECK(is_clique(g, greedy));
    CHECK(greedy.size() <= max_clique(g).size);
  }
  CHECK(greedy_clique_lower_bound(complete(5)).size() == 5);
}

TEST_CASE("single-worker runs are deterministic") {
  UndirectedGraph g = brute::random_graph(16, 55, 7);
  CliqueResult a = max_clique(g);
  CliqueResult b = max_clique(g);
  CHECK(a.size == b.size);
  CHECK(a.witness == b.witness);
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("worker count does not change the answer") {
  for (std::uint32_t seed = 1; seed <= 10; ++seed) {
    UndirectedGraph g = brute::random_graph(15, 65, seed + 100);
    CliqueOptions par;
    par.workers = 4;
    CliqueResult threaded = max_clique(g, par);
    CHECK(threaded.size == max_clique(g).size);
    CHECK(is_clique(g, threaded.witness));
    CHECK(threaded.witness.size() == threaded.size);
  }
}

TEST_CASE("seed cliques") {
  UndirectedGraph g = brute::random_graph(15, 70, 3);
  CliqueResult plain = max_clique(g);

  CliqueOptions opts;
  opts.seed_clique = plain.witness;
  CliqueResult seeded = max_clique(g, opts);
  CHECK(seeded.size == plain.size);
  CHECK(is_clique(g, seeded.witness));

  opts.seed_clique = {0, 1, 2};
  if (!is_clique(g, opts.seed_clique)) {
    CHECK_THROWS_WITH_AS(max_clique(g, opts), "seed clique is not a clique",
                         InvalidInput);
  }
  opts.seed_clique = {99};
  CHECK_THROWS_WITH_AS(max_clique(g, opts), "vertex out of range", InvalidInput);
}

TEST_CASE("node budget exhaustion") {
  CliqueOptions opts;
  opts.node_budget = 0;
  CHECK_THROWS_WITH_AS(max_clique(cycle(5), opts), "search budget exceeded",
                       BudgetExceeded);
  opts.workers = 4;
  CHECK_THROWS_WITH_AS(max_clique(cycle(5), opts), "search budget exceeded",
                       BudgetExceeded);
  // A generous budget is not hit, and the node count stays within it.
  opts = CliqueOptions{};
  opts.node_budget = 1'000'000;
  CliqueResult r = max_clique(brute::random_graph(16, 60, 11), opts);
  CHECK(r.nodes <= opts.node_budget);
}

TEST_CASE("enumeration matches the recursive oracle") {
  for (std::uint32_t seed = 1; seed <= 25; ++seed) {
    std::size_t n = 4 + seed % 11;
    UndirectedGraph g = brute::random_graph(n, 20 + (seed * 31) % 70, seed + 500);
    std::size_t k = brute::max_clique_size_subsets(g);
    auto expected = brute::all_cliques_of_size(g, k);
    auto got = enumerate_maximum_cliques(g, k);
    CAPTURE(seed);
    CHECK(got == expected);
  }
}

TEST_CASE("enumeration rejects non-maximum sizes") {
  UndirectedGraph g = brute::random_graph(12, 60, 9);
  std::size_t k = brute::max_clique_size_subsets(g);
  REQUIRE(k >= 2);
  CHECK_THROWS_WITH_AS(enumerate_maximum_cliques(g, k - 1),
                       "k is not the maximum clique size", InvalidInput);
  CHECK_THROWS_WITH_AS(enumerate_maximum_cliques(g, k + 1),
                       "k is not the maximum clique size", InvalidInput);
  CHECK_THROWS_AS(enumerate_maximum_cliques(g, 0), InvalidInput);
  CHECK_THROWS_AS(enumerate_maximum_cliques(g, g.vertex_count() + 1), InvalidInput);
}

TEST_CASE("enumeration of a unique maximum clique") {
  auto cliques = enumerate_maximum_cliques(complete(4), 4);
  REQUIRE(cliques.size() == 1);
  CHECK(cliques[0] == std::vector<std::uint32_t>{0, 1, 2, 3});
}

TEST_CASE("enumeration limit") {
  // Two disjoint triangles: two maximum cliques.
  UndirectedGraph g(6);
  for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})
    g.add_edge(u, v);
  CHECK(enumerate_maximum_cliques(g, 3).size() == 2);
  CliqueOptions opts;
  opts.enumeration_limit = 1;
  CHECK_THROWS_WITH_AS(enumerate_maximum_cliques(g, 3, opts),
                       "enumeration limit exceeded", BudgetExceeded);
}

}  // TEST_SUITE
