#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bookcross/drawing.hpp"
#include "bookcross/graph.hpp"
#include "bookcross/svg.hpp"

using namespace bookcross;

namespace {

BookDrawing one_page(const Graph& g, std::vector<int> spine) {
  BookDrawing d;
  d.spine = std::move(spine);
  d.pages.assign(g.m(), 0);
  d.page_count = 1;
  return d;
}

// minimal XML well-formedness check: tags balance and nest properly
bool xml_well_formed(const std::string& s) {
  std::vector<std::string> stack;
  size_t i = 0;
  while ((i = s.find('<', i)) != std::string::npos) {
    size_t j = s.find('>', i);
    if (j == std::string::npos) return false;
    std::string tag = s.substr(i + 1, j - i - 1);
    i = j + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
    } else if (tag.back() != '/') {
      stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
    }
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("crossing counts for fixed drawings") {
  Graph k4 = complete_graph(4);
  CHECK(crossings(k4, one_page(k4, {0, 1, 2, 3})) == 1);

  Graph c4 = cycle_graph(4);
  CHECK(crossings(c4, one_page(c4, {0, 1, 2, 3})) == 0);

  BookDrawing split = one_page(k4, {0, 1, 2, 3});
  split.page_count = 2;
  split.pages[*k4.edge_between(1, 3)] = 1;
  CHECK(crossings(k4, split) == 0);
}

TEST_CASE("crossings rejects invalid drawings") {
  Graph k4 = complete_graph(4);
  CHECK_THROWS_AS(crossings(k4, one_page(k4, {0, 1, 2})), Error);
  CHECK_THROWS_AS(crossings(k4, one_page(k4, {0, 1, 2, 2})), Error);
  BookDrawing bad = one_page(k4, {0, 1, 2, 3});
  bad.pages[0] = 1;  // page 1 but page_count == 1
  CHECK_THROWS_AS(crossings(k4, bad), Error);
  bad.pages[0] = 0;
  bad.pages.pop_back();
  CHECK_THROWS_AS(crossings(k4, bad), Error);
}

TEST_CASE("crossings is invariant under spine rotation and reflection") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; trial++) {
    int n = 4 + rng() % 4;
    Graph g(n);
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (rng() % 100 < 50) g.add_edge(u, v);
    std::vector<int> spine(n);
    for (int i = 0; i < n; i++) spine[i] = i;
    std::shuffle(spine.begin(), spine.end(), rng);
    BookDrawing d = one_page(g, spine);
    if (g.m() > 0) {
      d.page_count = 2;
      for (int e = 0; e < g.m(); e++) d.pages[e] = rng() % 2;
    }
    int base = crossings(g, d);
    BookDrawing rot = d;
    std::rotate(rot.spine.begin(), rot.spine.begin() + 1 + rng() % n, rot.spine.end());
    CHECK(crossings(g, rot) == base);
    BookDrawing refl = d;
    std::reverse(refl.spine.begin(), refl.spine.end());
    CHECK(crossings(g, refl) == base);
  }
}

TEST_CASE("cr1_exact on known graphs") {
  CHECK(cr1_exact(complete_graph(4)).first == 1);
  CHECK(cr1_exact(complete_graph(5)).first == 5);
  CHECK(cr1_exact(cycle_graph(7)).first == 0);
  CHECK(cr1_exact(complete_bipartite(2, 3)).first == 1);
  CHECK_THROWS_AS(cr1_exact(Graph(12)), LimitError);
}

TEST_CASE("cr1_exact witness attains the reported value") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; trial++) {
    int n = 1 + rng() % 7;
    Graph g(n);
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (rng() % 100 < 45) g.add_edge(u, v);
    auto [k, d] = cr1_exact(g);
    CHECK(crossings(g, d) == k);
  }
}

TEST_CASE("cr1_exact is zero exactly on outerplanar graphs") {
  for (int n = 1; n <= 7; n++)
    for (const Graph& g : small_graph_corpus(n, false))
      CHECK((cr1_exact(g).first == 0) == is_outerplanar(g));
}

TEST_CASE("cr2_exact on known graphs") {
  CHECK(cr2_exact(complete_graph(4)).first == 0);
  CHECK(cr2_exact(complete_graph(5)).first == 1);
  CHECK(cr2_exact(complete_bipartite(2, 3)).first == 0);
  CHECK_THROWS_AS(cr2_exact(Graph(10)), LimitError);
}

TEST_CASE("cr2_exact witness attains the reported value") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; trial++) {
    int n = 1 + rng() % 6;
    Graph g(n);
    for (int u = 0; u < n; u++)
      for (int v = u + 1; v < n; v++)
        if (rng() % 100 < 50) g.add_edge(u, v);
    auto [k, d] = cr2_exact(g);
    CHECK(crossings(g, d) == k);
    CHECK(k <= cr1_exact(g).first);
  }
}

TEST_CASE("cr2_exact is zero exactly on subhamiltonian graphs") {
  for (int n = 1; n <= 6; n++)
    for (const Graph& g : small_graph_corpus(n, true)) {
      bool sub = is_subhamiltonian(g).has_value();
      CHECK((cr2_exact(g).first == 0) == sub);
      CHECK(is_2page_planar(g) == sub);
    }
}

TEST_CASE("is_2page_planar on known graphs") {
  CHECK(is_2page_planar(complete_graph(4)));
  CHECK(!is_2page_planar(complete_graph(5)));
  CHECK(is_2page_planar(cube_graph()));
}

TEST_CASE("disconnected graphs lay out components contiguously") {
  // two disjoint K4 blocks
  Graph g(8);
  for (int b = 0; b < 2; b++)
    for (int u = 0; u < 4; u++)
      for (int v = u + 1; v < 4; v++) g.add_edge(4 * b + u, 4 * b + v);
  auto [k1, d1] = cr1_exact(g);
  CHECK(k1 == 2);
  CHECK(crossings(g, d1) == 2);
  auto [k2, d2] = cr2_exact(g);
  CHECK(k2 == 0);
  CHECK(crossings(g, d2) == 0);
  // isolated vertices are fine too
  Graph iso(3, {{0, 1}});
  CHECK(cr1_exact(iso).first == 0);
  CHECK(cr1_exact(iso).second.spine.size() == 3);
}

TEST_CASE("drawing serialization round-trips") {
  Graph k4 = complete_graph(4);
  auto [k, d] = cr2_exact(k4);
  BookDrawing back = parse_drawing(emit_drawing(d), k4);
  CHECK(back.spine == d.spine);
  CHECK(back.pages == d.pages);
  CHECK(back.page_count == d.page_count);

  auto [k1, d1] = cr1_exact(k4);
  BookDrawing back1 = parse_drawing(emit_drawing(d1), k4);
  CHECK(crossings(k4, back1) == k1);
  (void)k;

  CHECK_THROWS_AS(parse_drawing("page0: 0 1 2 3 4 5", k4), ParseError);
  CHECK_THROWS_AS(parse_drawing("order: 0 1 2 3\npage0: 0 0", k4), ParseError);
  CHECK_THROWS_AS(parse_drawing("order: 0 1 2 3\npage0: 0 1 2", k4), ParseError);
  CHECK_THROWS_AS(parse_drawing("order: 0 1 2 3\npage0: 0 1 2 3 4 9", k4), ParseError);
}

TEST_CASE("svg rendering is well-formed") {
  Graph k4 = complete_graph(4);
  auto [k, d] = cr2_exact(k4);
  std::string svg = render_svg(k4, d);
  CHECK(xml_well_formed(svg));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(std::count(svg.begin(), svg.end(), 'M') >= 6);  // one arc per edge
  (void)k;

  Graph empty(0);
  BookDrawing nothing;
  std::string bare = render_svg(empty, nothing);
  CHECK(xml_well_formed(bare));
  CHECK(bare.find("<line") != std::string::npos);
}
