#include "bookcross/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bookcross/drawing.hpp"

namespace bookcross {

TransformResult apply_identify(const Graph& g, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= g.n() || b >= g.n())
    throw Error("identify: need two distinct vertices");
  TransformResult r;
  r.graph = identify_vertices(g, a, b);
  int merged = a - (a > b ? 1 : 0);
  r.vertex_map.assign(g.n(), -1);
  for (int v = 0; v < g.n(); v++) {
    if (v == b) r.vertex_map[v] = merged;
    else r.vertex_map[v] = v - (v > b ? 1 : 0);
  }
  r.edge_map.assign(g.m(), -1);
  for (int e = 0; e < g.m(); e++) {
    int u = r.vertex_map[g.edge(e).u], v = r.vertex_map[g.edge(e).v];
    if (u == v) continue;  // the a-b edge collapses to a loop and is dropped
    auto img = r.graph.edge_between(u, v);
    r.edge_map[e] = img ? *img : -1;
  }
  r.outs = {merged};
  return r;
}

TransformResult apply_bridge(const Graph& g, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= g.n() || b >= g.n())
    throw Error("bridge: need two distinct vertices");
  TransformResult r;
  r.graph = Graph(g.n() + 1);
  for (const Edge& e : g.edges()) r.graph.add_edge(e.u, e.v);
  r.graph.add_edge(a, g.n());
  r.graph.add_edge(b, g.n());
  r.vertex_map.resize(g.n());
  for (int v = 0; v < g.n(); v++) r.vertex_map[v] = v;
  r.edge_map.resize(g.m());
  for (int e = 0; e < g.m(); e++) r.edge_map[e] = e;
  r.outs = {g.n()};
  return r;
}

Graph separate(const Graph& g, const EdgeSet& a, const EdgeSet& b) {
  if (a.universe() != g.m() || b.universe() != g.m() || a.intersects(b) ||
      (a | b) != g.full_edge_set())
    throw Error("separate: a/b must partition the edges");
  Graph out(2 * g.n());
  for (int v = 0; v < g.n(); v++) out.add_edge(v, v + g.n());
  for (int e = 0; e < g.m(); e++) {
    int off = a.test(e) ? 0 : g.n();
    out.add_edge(g.edge(e).u + off, g.edge(e).v + off);
  }
  return out;
}

TransformResult apply_separate(const Graph& g, const EdgeSet& a, const EdgeSet& b) {
  TransformResult r;
  r.graph = separate(g, a, b);
  r.vertex_map.assign(g.n(), -1);  // each vertex splits: no single image
  r.edge_map.assign(g.m(), 0);
  for (int e = 0; e < g.m(); e++) r.edge_map[e] = g.n() + e;
  return r;
}

TransformResult apply_planarize_pair(const Graph& g, int e1, int e2) {
  if (e1 < 0 || e2 < 0 || e1 >= g.m() || e2 >= g.m() || e1 == e2)
    throw Error("planarize: need two distinct edges");
  const Edge& a = g.edge(e1);
  const Edge& c = g.edge(e2);
  if (a.u == c.u || a.u == c.v || a.v == c.u || a.v == c.v)
    throw Error("planarize: edges must not share an endpoint");
  TransformResult r;
  int x = g.n();
  Graph out(g.n() + 1);
  r.vertex_map.resize(g.n());
  std::iota(r.vertex_map.begin(), r.vertex_map.end(), 0);
  r.edge_map.assign(g.m(), -1);
  for (int e = 0; e < g.m(); e++) {
    if (e == e1 || e == e2) continue;
    r.edge_map[e] = out.add_edge(g.edge(e).u, g.edge(e).v);
  }
  out.add_edge(a.u, x);
  out.add_edge(a.v, x);
  out.add_edge(c.u, x);
  out.add_edge(c.v, x);
  r.graph = std::move(out);
  r.outs = {x};
  return r;
}

PlanarizedGraph planarize(const Graph& g, const CrossingDiagram& d,
                          const std::vector<int>& edge_ids) {
  int s = (int)d.segments.size();
  if ((int)edge_ids.size() != s) throw Error("planarize: one edge per diagram segment");
  for (int i = 0; i < s; i++) {
    if (edge_ids[i] < 0 || edge_ids[i] >= g.m()) throw Error("planarize: edge id out of range");
    for (int j = i + 1; j < s; j++)
      if (edge_ids[i] == edge_ids[j]) throw Error("planarize: edge ids must be distinct");
  }
  // crossing pairs, from the diagram
  auto cross = [&](int i, int j) {
    if (!d.colors.empty() && d.colors[i] != d.colors[j]) return false;
    auto [a, b] = d.segments[i];
    auto [c, e] = d.segments[j];
    if (a == c || a == e || b == c || b == e) return false;
    return cyclically_interleaved(a, b, c, e, d.points);
  };
  std::vector<std::pair<int, int>> crossings;
  for (int i = 0; i < s; i++)
    for (int j = i + 1; j < s; j++)
      if (cross(i, j)) {
        const Edge& ei = g.edge(edge_ids[i]);
        const Edge& ej = g.edge(edge_ids[j]);
        if (ei.u == ej.u || ei.u == ej.v || ei.v == ej.u || ei.v == ej.v)
          throw Error("planarize: crossing edges share an endpoint");
        crossings.push_back({i, j});
      }

  PlanarizedGraph out;
  int n = g.n();
  int nc = (int)crossings.size();
  Graph h(n + nc);
  out.crossing_vertices = VertexSet(n + nc);
  out.crossing_page.assign(nc, 0);
  for (int c = 0; c < nc; c++) {
    out.crossing_vertices.set(n + c);
    if (!d.colors.empty()) out.crossing_page[c] = d.colors[crossings[c].first];
  }
  std::vector<bool> mapped(g.m(), false);
  for (int e : edge_ids) mapped[e] = true;
  std::vector<int> keep_map(g.m(), -1);
  for (int e = 0; e < g.m(); e++)
    if (!mapped[e]) keep_map[e] = h.add_edge(g.edge(e).u, g.edge(e).v);

  // replace each mapped edge by its path, crossings ordered along the chord
  out.paths.assign(s, {});
  for (int i = 0; i < s; i++) {
    auto [pa, pb] = d.segments[i];
    auto angle = [&](int p) { return 2.0 * M_PI * p / d.points; };
    double ax = std::cos(angle(pa)), ay = std::sin(angle(pa));
    double bx = std::cos(angle(pb)), by = std::sin(angle(pb));
    std::vector<std::pair<double, int>> along;  // (parameter on chord pa->pb, crossing vertex)
    for (int c = 0; c < nc; c++) {
      auto [ci, cj] = crossings[c];
      if (ci != i && cj != i) continue;
      int other = ci == i ? cj : ci;
      auto [qa, qb] = d.segments[other];
      double cx = std::cos(angle(qa)), cy = std::sin(angle(qa));
      double dx = std::cos(angle(qb)), dy = std::sin(angle(qb));
      // intersection parameter t of segment a+t(b-a) with segment c..d
      double den = (bx - ax) * (dy - cy) - (by - ay) * (dx - cx);
      double t = ((cx - ax) * (dy - cy) - (cy - ay) * (dx - cx)) / den;
      along.push_back({t, n + c});
    }
    std::sort(along.begin(), along.end());
    // the edge's smaller endpoint is anchored at the chord's first point
    const Edge& e = g.edge(edge_ids[i]);
    int prev = e.u;
    for (auto [t, xv] : along) {
      out.paths[i].push_back(h.add_edge(std::min(prev, xv), std::max(prev, xv)));
      prev = xv;
    }
    out.paths[i].push_back(h.add_edge(std::min(prev, e.v), std::max(prev, e.v)));
  }
  out.graph = std::move(h);
  return out;
}

std::string canonical_key_marked(const Graph& g, int marked) {
  int n = g.n();
  if (n > 10) throw LimitError("canonical_key_marked: graph too large");
  if (marked < 0 || marked >= n) throw Error("canonical_key_marked: bad vertex");
  std::vector<uint64_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= uint64_t(1) << e.v;
    adj[e.v] |= uint64_t(1) << e.u;
  }
  // permutations of the unmarked vertices onto labels 1..n-1; marked -> 0
  std::vector<int> rest;
  for (int v = 0; v < n; v++)
    if (v != marked) rest.push_back(v);
  std::string best;
  std::string cur((size_t)n * n, '0');
  std::vector<int> perm(n);
  do {
    perm[0] = marked;
    for (int i = 1; i < n; i++) perm[i] = rest[i - 1];
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++)
        cur[(size_t)i * n + j] = (adj[perm[i]] >> perm[j]) & 1 ? '1' : '0';
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::to_string(n) + "*" + best;
}

}  // namespace bookcross
