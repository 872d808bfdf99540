#include "bookcross/pagechar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "bookcross/drawing.hpp"

namespace bookcross {

namespace {

std::vector<int> set_degrees(const Graph& g, const EdgeSet& xs) {
  std::vector<int> deg(g.n(), 0);
  for (int e : xs.elements()) {
    deg[g.edge(e).u]++;
    deg[g.edge(e).v]++;
  }
  return deg;
}

VertexSet touched_vertices(const Graph& g, const EdgeSet& xs) {
  VertexSet out(g.n());
  for (int e : xs.elements()) {
    out.set(g.edge(e).u);
    out.set(g.edge(e).v);
  }
  return out;
}

// cyclic vertex order of a simple cycle given as an edge set
std::vector<int> cycle_order(const Graph& g, const EdgeSet& cyc) {
  std::vector<int> elems = cyc.elements();
  int start = g.edge(elems[0]).u;
  std::vector<int> order = {start};
  int prev_edge = -1;
  int v = start;
  while (true) {
    int next = -1;
    for (int e : elems)
      if (e != prev_edge && g.incident(e, v)) {
        next = e;
        break;
      }
    int w = g.other_end(next, v);
    if (w == start) break;
    order.push_back(w);
    prev_edge = next;
    v = w;
  }
  return order;
}

// simple paths between a and b whose interior vertices avoid `forbidden`
struct FlapPath {
  int a, b;
  VertexSet verts;  // all touched vertices including endpoints
  EdgeSet edges;
};

std::vector<FlapPath> paths_avoiding(const Graph& g, int a, int b, const VertexSet& forbidden) {
  std::vector<FlapPath> out;
  std::vector<bool> visited(g.n(), false);
  VertexSet verts(g.n());
  EdgeSet edges(g.m());
  visited[a] = true;
  verts.set(a);
  std::function<void(int)> dfs = [&](int v) {
    for (int e : g.incident_edges(v)) {
      int w = g.other_end(e, v);
      if (w == b) {
        FlapPath p{a, b, verts, edges};
        p.verts.set(b);
        p.edges.set(e);
        out.push_back(std::move(p));
        continue;
      }
      if (visited[w] || forbidden.test(w)) continue;
      visited[w] = true;
      verts.set(w);
      edges.set(e);
      dfs(w);
      edges.reset(e);
      verts.reset(w);
      visited[w] = false;
    }
  };
  dfs(a);
  return out;
}

// (pa,pb) and (pc,pd) alternate around the cycle order
bool alternate_on_cycle(const std::vector<int>& order, int pa, int pb, int pc, int pd) {
  auto pos = [&](int v) {
    for (size_t i = 0; i < order.size(); i++)
      if (order[i] == v) return (int)i;
    return -1;
  };
  int ia = pos(pa), ib = pos(pb), ic = pos(pc), id = pos(pd);
  if (ia < 0 || ib < 0 || ic < 0 || id < 0) return false;
  return cyclically_interleaved(ia, ib, ic, id, (int)order.size());
}

// closure endpoints of edge e: its own endpoints, or the crossing vertex's
// neighbors when e touches the crossing vertex (x_vertex < 0: never)
std::vector<int> closure_endpoints(const Graph& g, int e, int x_vertex) {
  if (x_vertex >= 0 && g.incident(e, x_vertex)) return g.neighbors(x_vertex);
  return {g.edge(e).u, g.edge(e).v};
}

}  // namespace

bool degrees_even_bounded(const Graph& g, const EdgeSet& xs, int bound) {
  for (int d : set_degrees(g, xs))
    if (d % 2 != 0 || d > bound) return false;
  return true;
}

std::vector<EdgeSet> simple_cycles_within(const Graph& g, const EdgeSet& xs) {
  std::vector<EdgeSet> out;
  std::vector<bool> visited(g.n(), false);
  for (int s = 0; s < g.n(); s++) {
    // cycles whose smallest vertex is s, walked once (second vertex < last)
    std::vector<int> pverts = {s};
    EdgeSet pedges(g.m());
    std::function<void(int)> dfs = [&](int v) {
      for (int e : g.incident_edges(v)) {
        if (!xs.test(e) || pedges.test(e)) continue;
        int w = g.other_end(e, v);
        if (w == s) {
          if (pverts.size() >= 3 && pverts[1] < v) {
            EdgeSet cyc = pedges;
            cyc.set(e);
            out.push_back(std::move(cyc));
          }
          continue;
        }
        if (w < s || visited[w]) continue;
        visited[w] = true;
        pverts.push_back(w);
        pedges.set(e);
        dfs(w);
        pedges.reset(e);
        pverts.pop_back();
        visited[w] = false;
      }
    };
    visited[s] = true;
    dfs(s);
    visited[s] = false;
  }
  return out;
}

bool has_stray_cycle(const Graph& g, const EdgeSet& x, const EdgeSet& xi, const EdgeSet& xc) {
  for (const EdgeSet& cyc : simple_cycles_within(g, x - xi))
    if (!cyc.subset_of(xc)) return true;
  return false;
}

bool cycle_through_endpoints(const Graph& g, const EdgeSet& xc, int e) {
  for (const EdgeSet& cyc : simple_cycles_within(g, xc)) {
    VertexSet on = touched_vertices(g, cyc);
    if (on.test(g.edge(e).u) && on.test(g.edge(e).v)) return true;
  }
  return false;
}

bool has_crossing_flap_paths(const Graph& g, const EdgeSet& xc, const EdgeSet& xi) {
  for (const EdgeSet& cyc : simple_cycles_within(g, xc)) {
    std::vector<int> order = cycle_order(g, cyc);
    VertexSet on = touched_vertices(g, cyc);
    std::vector<FlapPath> paths;
    for (size_t i = 0; i < order.size(); i++)
      for (size_t j = i + 1; j < order.size(); j++)
        for (FlapPath& p : paths_avoiding(g, order[i], order[j], on))
          paths.push_back(std::move(p));
    for (size_t i = 0; i < paths.size(); i++) {
      const FlapPath& p = paths[i];
      if (p.edges.count() == 1 && p.edges.intersects(xi)) continue;
      for (size_t j = i + 1; j < paths.size(); j++) {
        const FlapPath& q = paths[j];
        if (q.edges.count() == 1 && q.edges.intersects(xi)) continue;
        if (p.verts.intersects(q.verts)) continue;
        if (alternate_on_cycle(order, p.a, p.b, q.a, q.b)) return true;
      }
    }
  }
  return false;
}

namespace {

// the shared search behind page_sets_exist: conditions are monotone in xi,
// so only the maximal qualifying inner set needs checking
std::optional<std::pair<EdgeSet, EdgeSet>> page_sets_find(const Graph& g, const EdgeSet& x) {
  std::vector<int> elems = x.elements();
  for (uint64_t mask = 0; mask < (uint64_t(1) << elems.size()); mask++) {
    EdgeSet xc(g.m());
    for (size_t i = 0; i < elems.size(); i++)
      if ((mask >> i) & 1) xc.set(elems[i]);
    if (!degrees_even_bounded(g, xc)) continue;
    EdgeSet xi(g.m());
    for (int e : (x - xc).elements())
      if (cycle_through_endpoints(g, xc, e)) xi.set(e);
    if (has_stray_cycle(g, x, xi, xc)) continue;
    if (has_crossing_flap_paths(g, xc, xi)) continue;
    return std::make_pair(xc, xi);
  }
  return std::nullopt;
}

}  // namespace

bool page_sets_exist(const Graph& g, const EdgeSet& x) {
  return page_sets_find(g, x).has_value();
}

bool closure_on_cycle(const Graph& g, const EdgeSet& xc, int e, int x_vertex) {
  std::vector<int> ends = closure_endpoints(g, e, x_vertex);
  for (const EdgeSet& cyc : simple_cycles_within(g, xc)) {
    VertexSet on = touched_vertices(g, cyc);
    bool all = true;
    for (int v : ends)
      if (!on.test(v)) all = false;
    if (all) return true;
  }
  return false;
}

bool closures_cross(const Graph& g, const EdgeSet& xc, const EdgeSet& xi, int x_vertex) {
  std::vector<int> inner = xi.elements();
  std::vector<EdgeSet> cycles = simple_cycles_within(g, xc);
  for (size_t i = 0; i < inner.size(); i++)
    for (size_t j = i + 1; j < inner.size(); j++) {
      std::vector<int> ep = closure_endpoints(g, inner[i], x_vertex);
      std::vector<int> eq = closure_endpoints(g, inner[j], x_vertex);
      for (const EdgeSet& cyc : cycles) {
        std::vector<int> order = cycle_order(g, cyc);
        for (int pa : ep)
          for (int pb : ep)
            for (int pc : eq)
              for (int pd : eq) {
                std::vector<int> four = {pa, pb, pc, pd};
                std::sort(four.begin(), four.end());
                if (std::unique(four.begin(), four.end()) != four.end()) continue;
                if (alternate_on_cycle(order, pa, pb, pc, pd)) return true;
              }
      }
    }
  return false;
}

bool has_crossing_paths_avoiding(const Graph& g, const EdgeSet& xc, const EdgeSet& xi) {
  for (const EdgeSet& cyc : simple_cycles_within(g, xc)) {
    std::vector<int> order = cycle_order(g, cyc);
    VertexSet on = touched_vertices(g, cyc);
    std::vector<FlapPath> paths;
    for (size_t i = 0; i < order.size(); i++)
      for (size_t j = i + 1; j < order.size(); j++)
        for (FlapPath& p : paths_avoiding(g, order[i], order[j], on))
          if (!p.edges.intersects(xi)) paths.push_back(std::move(p));
    for (size_t i = 0; i < paths.size(); i++)
      for (size_t j = i + 1; j < paths.size(); j++) {
        if (paths[i].verts.intersects(paths[j].verts)) continue;
        if (alternate_on_cycle(order, paths[i].a, paths[i].b, paths[j].a, paths[j].b))
          return true;
      }
  }
  return false;
}

std::optional<std::pair<EdgeSet, EdgeSet>> page_sets_find_planarized(const Graph& g,
                                                                     const EdgeSet& x,
                                                                     int x_vertex) {
  std::vector<int> elems = x.elements();
  for (uint64_t mask = 0; mask < (uint64_t(1) << elems.size()); mask++) {
    EdgeSet xc(g.m());
    for (size_t i = 0; i < elems.size(); i++)
      if ((mask >> i) & 1) xc.set(elems[i]);
    if (!degrees_even_bounded(g, xc)) continue;
    std::vector<int> qualifying;
    for (int e : (x - xc).elements())
      if (closure_on_cycle(g, xc, e, x_vertex)) qualifying.push_back(e);
    // the closure non-crossing condition is not monotone in the inner set,
    // so all subsets of the qualifying edges are tried
    for (uint64_t im = 0; im < (uint64_t(1) << qualifying.size()); im++) {
      EdgeSet xi(g.m());
      for (size_t i = 0; i < qualifying.size(); i++)
        if ((im >> i) & 1) xi.set(qualifying[i]);
      if (has_stray_cycle(g, x, xi, xc)) continue;
      if (closures_cross(g, xc, xi, x_vertex)) continue;
      if (has_crossing_paths_avoiding(g, xc, xi)) continue;
      return std::make_pair(xc, xi);
    }
  }
  return std::nullopt;
}

bool page_sets_exist_planarized(const Graph& g, const EdgeSet& x, int x_vertex) {
  return page_sets_find_planarized(g, x, x_vertex).has_value();
}

// --- serialization ---

std::string emit_partition6(const Partition6& p) {
  auto line = [](const char* tag, const EdgeSet& s) {
    std::string out = tag;
    out += ":";
    for (int e : s.elements()) out += " " + std::to_string(e);
    return out + "\n";
  };
  return line("Ab", p.ab) + line("Ac", p.ac) + line("Ai", p.ai) + line("Bb", p.bb) +
         line("Bc", p.bc) + line("Bi", p.bi);
}

Partition6 parse_partition6(const std::string& text, const Graph& g) {
  Partition6 p{EdgeSet(g.m()), EdgeSet(g.m()), EdgeSet(g.m()),
               EdgeSet(g.m()), EdgeSet(g.m()), EdgeSet(g.m())};
  std::map<std::string, EdgeSet*> slots = {{"Ab", &p.ab}, {"Ac", &p.ac}, {"Ai", &p.ai},
                                           {"Bb", &p.bb}, {"Bc", &p.bc}, {"Bi", &p.bi}};
  std::istringstream in(text);
  std::string ln;
  int seen = 0;
  while (std::getline(in, ln)) {
    if (ln.empty()) continue;
    size_t colon = ln.find(':');
    if (colon == std::string::npos) throw ParseError("partition line needs 'Tag:'");
    auto it = slots.find(ln.substr(0, colon));
    if (it == slots.end()) throw ParseError("unknown partition tag in '" + ln + "'");
    std::istringstream rest(ln.substr(colon + 1));
    int e;
    while (rest >> e) {
      if (e < 0 || e >= g.m()) throw ParseError("edge id out of range in partition");
      it->second->set(e);
    }
    seen++;
  }
  if (seen != 6) throw ParseError("partition needs all six lines");
  return p;
}

// --- 1-page structural characterization ---

bool check_onepage_witness(const Graph& g, const OnePageWitness& w, int k) {
  const CrossingDiagram& d = w.diagram;
  if (d.crossing_count() > k) return false;
  if (d.points == 0) {
    // degenerate form: no crossings, one group holding every vertex
    return w.f_edges.empty() && w.w_vertices.empty() && w.u_sets.size() == 1 &&
           w.u_sets[0] == g.full_vertex_set() && is_outerplanar(g);
  }
  int p = d.points;
  if ((int)w.w_vertices.size() != p || w.f_edges.size() != d.segments.size() ||
      (int)w.u_sets.size() != p)
    return false;
  for (int v : w.w_vertices)
    if (v < 0 || v >= g.n()) return false;
  for (int e : w.f_edges)
    if (e < 0 || e >= g.m()) return false;
  for (int i = 0; i < p; i++)
    for (int j = i + 1; j < p; j++)
      if (w.w_vertices[i] == w.w_vertices[j]) return false;

  // the edges realize the diagram configuration
  for (size_t s = 0; s < d.segments.size(); s++) {
    const Edge& e = g.edge(w.f_edges[s]);
    int a = w.w_vertices[d.segments[s].first];
    int b = w.w_vertices[d.segments[s].second];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
  }

  VertexSet wset(g.n());
  for (int v : w.w_vertices) wset.set(v);
  EdgeSet fset(g.m());
  for (int e : w.f_edges) fset.set(e);
  // every vertex of the zone is covered
  for (int v : w.w_vertices) {
    bool covered = false;
    for (int e : w.f_edges)
      if (g.incident(e, v)) covered = true;
    if (!covered) return false;
  }
  // the zone edges are exactly closed under induced edges
  for (int e = 0; e < g.m(); e++)
    if (wset.test(g.edge(e).u) && wset.test(g.edge(e).v) && !fset.test(e)) return false;

  // the groups partition the remaining vertices
  VertexSet seen = wset;
  for (const VertexSet& u : w.u_sets) {
    if (u.universe() != g.n() || u.intersects(seen)) return false;
    seen |= u;
  }
  if (seen != g.full_vertex_set()) return false;

  // no edges between distinct groups
  for (const Edge& e : g.edges())
    for (int i = 0; i < p; i++)
      for (int j = 0; j < p; j++)
        if (i != j && w.u_sets[i].test(e.u) && w.u_sets[j].test(e.v)) return false;

  // a group may touch the zone only at its own gap boundary; an edge to any
  // other zone vertex would be forced to cross a zone edge
  for (const Edge& e : g.edges())
    for (int i = 0; i < p; i++) {
      int in_group = w.u_sets[i].test(e.u) ? e.v : w.u_sets[i].test(e.v) ? e.u : -1;
      if (in_group < 0 || !wset.test(in_group)) continue;
      if (in_group != w.w_vertices[i] && in_group != w.w_vertices[(i + 1) % p]) return false;
    }

  // each group must fit in its zone: group plus the two spine neighbours,
  // outerplanar with the neighbours consecutive on the outer face (enforced
  // by a fresh degree-2 vertex bridging them)
  for (int i = 0; i < p; i++) {
    int a = w.w_vertices[i];
    int b = w.w_vertices[(i + 1) % p];
    std::vector<int> members = w.u_sets[i].elements();
    int va = (int)members.size(), vb = va + 1, vz = va + 2;
    Graph h(va + 3);  // members, the two neighbours, the bridge vertex
    auto idx = [&](int v) {
      if (v == a) return va;
      if (v == b) return vb;
      for (size_t m = 0; m < members.size(); m++)
        if (members[m] == v) return (int)m;
      return -1;
    };
    for (const Edge& e : g.edges()) {
      int iu = idx(e.u), iv = idx(e.v);
      if (iu >= 0 && iv >= 0) h.add_edge(iu, iv);
    }
    h.add_edge(va, vz);
    h.add_edge(vb, vz);
    if (!is_outerplanar(h)) return false;
  }
  return true;
}

std::optional<OnePageWitness> find_onepage_witness(const Graph& g, int k) {
  if (g.n() > 8 || k > 2) throw LimitError("find_onepage_witness: out of supported range");
  if (is_outerplanar(g)) {
    OnePageWitness w;
    w.u_sets = {g.full_vertex_set()};
    return w;
  }
  for (int kk = 1; kk <= k; kk++) {
    for (const CrossingDiagram& d : enumerate_relaxed_diagrams(kk)) {
      int p = d.points;
      std::vector<int> verts(p, -1);
      std::vector<bool> used(g.n(), false);
      OnePageWitness found;
      // assign vertices to points, edges forced by the segments
      std::function<bool(int)> place = [&](int i) -> bool {
        if (i == p) {
          std::vector<int> fe;
          VertexSet wset(g.n());
          for (int v : verts) wset.set(v);
          for (auto [a, b] : d.segments) fe.push_back(*g.edge_between(verts[a], verts[b]));
          EdgeSet fset(g.m());
          for (int e : fe) fset.set(e);
          for (int e = 0; e < g.m(); e++)
            if (wset.test(g.edge(e).u) && wset.test(g.edge(e).v) && !fset.test(e)) return false;
          // group the remaining vertices
          std::vector<int> rest;
          for (int v = 0; v < g.n(); v++)
            if (!wset.test(v)) rest.push_back(v);
          std::vector<int> block(rest.size(), 0);
          while (true) {
            std::vector<VertexSet> us(p, VertexSet(g.n()));
            for (size_t r = 0; r < rest.size(); r++) us[block[r]].set(rest[r]);
            OnePageWitness w{fe, verts, us, d};
            if (check_onepage_witness(g, w, k)) {
              found = w;
              return true;
            }
            size_t pos = 0;
            while (pos < block.size() && block[pos] == p - 1) block[pos++] = 0;
            if (pos == block.size()) break;
            block[pos]++;
          }
          return false;
        }
        for (int v = 0; v < g.n(); v++) {
          if (used[v]) continue;
          verts[i] = v;
          bool ok = true;
          for (auto [a, b] : d.segments)
            if (std::max(a, b) == i && !g.edge_between(verts[a], verts[b])) ok = false;
          if (ok) {
            used[v] = true;
            if (place(i + 1)) return true;
            used[v] = false;
          }
          verts[i] = -1;
        }
        return false;
      };
      if (place(0)) return found;
    }
  }
  return std::nullopt;
}

// --- 2-page characterizations ---

bool check_twopage_partition(const Graph& g, const Partition6& p) {
  EdgeSet a = p.ab | p.ac | p.ai;
  EdgeSet b = p.bb | p.bc | p.bi;
  if (a.intersects(b) || (a | b) != g.full_edge_set()) return false;
  EdgeSet pieces[6] = {p.ab, p.ac, p.ai, p.bb, p.bc, p.bi};
  for (int i = 0; i < 6; i++)
    for (int j = i + 1; j < 6; j++)
      if (pieces[i].intersects(pieces[j])) return false;
  for (auto [x, xc, xi] : {std::tuple{a, p.ac, p.ai}, std::tuple{b, p.bc, p.bi}}) {
    if (!is_outerplanar(edge_subgraph(g, x))) return false;
    if (!degrees_even_bounded(g, xc)) return false;
    for (int e : xi.elements())
      if (!cycle_through_endpoints(g, xc, e)) return false;
    if (has_stray_cycle(g, x, xi, xc)) return false;
    if (has_crossing_flap_paths(g, xc, xi)) return false;
  }
  return is_planar(separate(g, a, b));
}

std::optional<Partition6> find_twopage_partition(const Graph& g) {
  if (!is_planar(g)) return std::nullopt;
  uint64_t limit = uint64_t(1) << (g.m() > 0 ? g.m() - 1 : 0);
  for (uint64_t mask = 0; mask < limit; mask++) {
    EdgeSet a(g.m());
    for (int e = 0; e < g.m(); e++)
      if (e == 0 || ((mask >> (e - 1)) & 1)) a.set(e);  // edge 0 on page A wlog
    EdgeSet b = g.full_edge_set() - a;
    if (!is_outerplanar(edge_subgraph(g, a)) || !is_outerplanar(edge_subgraph(g, b))) continue;
    if (!is_planar(separate(g, a, b))) continue;
    auto sa = page_sets_find(g, a);
    if (!sa) continue;
    auto sb = page_sets_find(g, b);
    if (!sb) continue;
    Partition6 p{a - sa->first - sa->second, sa->first, sa->second,
                 b - sb->first - sb->second, sb->first, sb->second};
    return p;
  }
  return std::nullopt;
}

bool check_crossing_partition(const Graph& g, const CrossingDiagram& d,
                              const std::vector<int>& edge_ids, const Partition6& p) {
  PlanarizedGraph pg = planarize(g, d, edge_ids);
  const Graph& h = pg.graph;
  std::vector<int> xs = pg.crossing_vertices.elements();
  if (xs.size() != 1) throw LimitError("check_crossing_partition: single crossing only");
  int x = xs[0];
  EdgeSet a = p.ab | p.ac | p.ai;
  EdgeSet b = p.bb | p.bc | p.bi;
  if (a.universe() != h.m()) return false;
  if (a.intersects(b) || (a | b) != h.full_edge_set()) return false;
  EdgeSet pieces[6] = {p.ab, p.ac, p.ai, p.bb, p.bc, p.bi};
  for (int i = 0; i < 6; i++)
    for (int j = i + 1; j < 6; j++)
      if (pieces[i].intersects(pieces[j])) return false;
  // the crossing vertex's edges sit on the diagram's page
  const EdgeSet& pinned = pg.crossing_page[0] == 0 ? a : b;
  for (int e : h.incident_edges(x))
    if (!pinned.test(e)) return false;
  for (auto [xp, xc, xi] : {std::tuple{a, p.ac, p.ai}, std::tuple{b, p.bc, p.bi}}) {
    if (!degrees_even_bounded(h, xc)) return false;
    for (int e : xi.elements())
      if (!closure_on_cycle(h, xc, e, x)) return false;
    if (has_stray_cycle(h, xp, xi, xc)) return false;
    if (closures_cross(h, xc, xi, x)) return false;
    if (has_crossing_paths_avoiding(h, xc, xi)) return false;
  }
  return is_planar(separate(h, a, b));
}

std::optional<int> cr2_via_characterization(const Graph& g, int kmax) {
  if (g.n() > 6 || kmax > 1) throw LimitError("cr2_via_characterization: out of range");
  if (find_twopage_partition(g)) return 0;
  if (kmax < 1) return std::nullopt;
  CrossingDiagram d;
  d.points = 4;
  d.segments = {{0, 2}, {1, 3}};
  for (int page = 0; page < 2; page++) {
    d.colors = {page, page};
    for (int e1 = 0; e1 < g.m(); e1++)
      for (int e2 = e1 + 1; e2 < g.m(); e2++) {
        const Edge& ea = g.edge(e1);
        const Edge& eb = g.edge(e2);
        if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v) continue;
        PlanarizedGraph pg = planarize(g, d, {e1, e2});
        const Graph& h = pg.graph;
        if (!is_planar(h)) continue;
        int x = pg.crossing_vertices.elements()[0];
        EdgeSet star(h.m());
        for (int e : h.incident_edges(x)) star.set(e);
        std::vector<int> rest;
        for (int e = 0; e < h.m(); e++)
          if (!star.test(e)) rest.push_back(e);
        for (uint64_t mask = 0; mask < (uint64_t(1) << rest.size()); mask++) {
          EdgeSet a(h.m());
          if (page == 0) a |= star;
          for (size_t i = 0; i < rest.size(); i++)
            if ((mask >> i) & 1) a.set(rest[i]);
          EdgeSet b = h.full_edge_set() - a;
          if (!is_planar(separate(h, a, b))) continue;
          if (!page_sets_exist_planarized(h, a, x)) continue;
          if (!page_sets_exist_planarized(h, b, x)) continue;
          return 1;
        }
      }
  }
  return std::nullopt;
}

}  // namespace bookcross
