#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bookcross/graph.hpp"
#include "bookcross/treewidth.hpp"

using namespace bookcross;

TEST_CASE("treewidth of standard graphs") {
  CHECK(treewidth_exact(path_graph(6)).first == 1);
  CHECK(treewidth_exact(star_graph(4)).first == 1);
  CHECK(treewidth_exact(cycle_graph(5)).first == 2);
  CHECK(treewidth_exact(complete_graph(4)).first == 3);
  CHECK(treewidth_exact(complete_graph(6)).first == 5);
  CHECK(treewidth_exact(complete_bipartite(3, 3)).first == 3);
  CHECK(treewidth_exact(cube_graph()).first == 3);
  CHECK(treewidth_exact(Graph(1)).first == 0);
  CHECK(treewidth_exact(Graph(3)).first == 0);
}

TEST_CASE("exact treewidth returns a valid decomposition of matching width") {
  for (int n = 1; n <= 6; n++)
    for (const Graph& g : small_graph_corpus(n, false)) {
      auto [w, td] = treewidth_exact(g);
      CHECK(validate_decomposition(g, td));
      CHECK(td.width() == w);
    }
}

TEST_CASE("min-fill upper bound dominates the exact value") {
  for (const Graph& g : small_graph_corpus(6, false)) {
    auto [ub, td] = treewidth_upperbound(g);
    CHECK(validate_decomposition(g, td));
    CHECK(ub >= treewidth_exact(g).first);
  }
}

TEST_CASE("exact treewidth agrees with a minor-based cross-check") {
  // treewidth >= 2 iff the graph has a cycle (K3 minor); treewidth >= 3
  // implies a K4 minor on these sizes
  for (const Graph& g : small_graph_corpus(5, false)) {
    int w = treewidth_exact(g).first;
    CHECK((w >= 2) == is_minor(g, complete_graph(3)));
    if (w >= 3) CHECK(is_minor(g, complete_graph(4)));
  }
}

TEST_CASE("treewidth_exact respects the vertex guard") {
  Graph big(21);
  CHECK_THROWS_AS(treewidth_exact(big, 20), LimitError);
  CHECK_NOTHROW(treewidth_exact(Graph(20), 20));
}

TEST_CASE("validate_decomposition rejects broken decompositions") {
  Graph k3 = complete_graph(3);
  TreeDecomposition bad;
  bad.bags = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {1, 2})};
  bad.tree = {{0, 1}};
  CHECK(!validate_decomposition(k3, bad));  // edge {0,2} uncovered

  TreeDecomposition good;
  good.bags = {VertexSet::of(3, {0, 1, 2})};
  CHECK(validate_decomposition(k3, good));

  TreeDecomposition disconnected;
  disconnected.bags = {VertexSet::of(3, {0, 1, 2}), VertexSet(3)};
  CHECK(!validate_decomposition(k3, disconnected));  // no tree edge

  Graph p3 = path_graph(3);
  TreeDecomposition torn;
  torn.bags = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {2}), VertexSet::of(3, {1, 2})};
  torn.tree = {{0, 1}, {1, 2}};
  CHECK(!validate_decomposition(p3, torn));  // occurrences of 1 not connected
}

TEST_CASE("make_nice preserves width and validates") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; trial++) {
    int n = 1 + rng() % 8;
    Graph g(n);
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (rng() % 100 < 40) g.add_edge(u, v);
    auto [w, td] = treewidth_exact(g);
    NiceTreeDecomposition nd = make_nice(g, td);
    CHECK(validate_nice(g, nd));
    CHECK(nd.width() == w);
  }
  Graph k3 = complete_graph(3);
  TreeDecomposition bad;
  bad.bags = {VertexSet::of(3, {0, 1})};
  CHECK_THROWS_AS(make_nice(k3, bad), Error);
}

TEST_CASE("decomposition serialization round-trips") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 40; trial++) {
    int n = 2 + rng() % 7;
    Graph g(n);
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (rng() % 2) g.add_edge(u, v);
    auto [w, td] = treewidth_exact(g);
    TreeDecomposition back = parse_decomposition(emit_decomposition(td), n);
    CHECK(back.bags == td.bags);
    CHECK(back.tree == td.tree);
    CHECK(validate_decomposition(g, back));
    (void)w;
  }
  CHECK_THROWS_AS(parse_decomposition("bag 0: 5", 3), ParseError);
  CHECK_THROWS_AS(parse_decomposition("blob 0: 1", 3), ParseError);
  CHECK_THROWS_AS(parse_decomposition("edge 0", 3), ParseError);
}

TEST_CASE("clique sums do not raise treewidth") {
  // gluing two graphs on a shared clique keeps treewidth at the max of the
  // parts (each of width <= 3 here)
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; trial++) {
    Graph g1 = complete_graph(3), g2 = complete_graph(4);
    // grow each part by a couple of random low-degree vertices
    for (Graph* gp : {&g1, &g2}) {
      for (int extra = 0; extra < 2; extra++) {
        Graph bigger(gp->n() + 1, {});
        for (const Edge& e : gp->edges()) bigger.add_edge(e.u, e.v);
        int a = rng() % gp->n(), b = rng() % gp->n();
        bigger.add_edge(a, gp->n());
        if (b != a) bigger.add_edge(b, gp->n());
        *gp = bigger;
      }
    }
    Graph sum = clique_sum(g1, g2, {{0, 0}, {1, 1}, {2, 2}}, EdgeSet(g1.m()));
    int w1 = treewidth_exact(g1).first;
    int w2 = treewidth_exact(g2).first;
    CHECK(treewidth_exact(sum).first == std::max(w1, w2));
  }
}
