#include "bookcross/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace bookcross {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int component_count(const Graph& g) {
  UnionFind uf(g.n());
  for (const Edge& e : g.edges()) uf.unite(e.u, e.v);
  std::set<int> roots;
  for (int v = 0; v < g.n(); v++) roots.insert(uf.find(v));
  return (int)roots.size();
}

bool is_connected(const Graph& g) { return g.n() <= 1 || component_count(g) == 1; }

EdgeSet isthmuses(const Graph& g) {
  EdgeSet out(g.m());
  int base = component_count(g);
  for (int e = 0; e < g.m(); e++) {
    UnionFind uf(g.n());
    for (int f = 0; f < g.m(); f++)
      if (f != e) uf.unite(g.edge(f).u, g.edge(f).v);
    std::set<int> roots;
    for (int v = 0; v < g.n(); v++) roots.insert(uf.find(v));
    if ((int)roots.size() > base) out.set(e);
  }
  return out;
}

namespace {

VertexSet endpoints_of(const Graph& g, const EdgeSet& es) {
  VertexSet vs(g.n());
  for (int e : es.elements()) {
    vs.set(g.edge(e).u);
    vs.set(g.edge(e).v);
  }
  return vs;
}

bool is_simple_cycle(const Graph& g, const EdgeSet& c) {
  if (c.empty()) return false;
  VertexSet vs = endpoints_of(g, c);
  for (int v : vs.elements()) {
    int d = 0;
    for (int e : c.elements()) d += g.incident(e, v);
    if (d != 2) return false;
  }
  // connectivity of the cycle edges
  UnionFind uf(g.n());
  for (int e : c.elements()) uf.unite(g.edge(e).u, g.edge(e).v);
  int root = -1;
  for (int v : vs.elements()) {
    if (root == -1) root = uf.find(v);
    else if (uf.find(v) != root) return false;
  }
  return true;
}

}  // namespace

std::vector<Flap> flaps(const Graph& g, const EdgeSet& cycle) {
  if (cycle.universe() != g.m() || !is_simple_cycle(g, cycle))
    throw Error("flaps: edge set is not a simple cycle of the graph");
  VertexSet cycle_verts = endpoints_of(g, cycle);

  // Two non-cycle edges are equivalent when they lie on a path with no
  // interior vertex on the cycle; the closure of that relation merges all
  // edges meeting at a non-cycle vertex.
  UnionFind uf(g.m());
  for (int v = 0; v < g.n(); v++) {
    if (cycle_verts.test(v)) continue;
    int first = -1;
    for (int e = 0; e < g.m(); e++) {
      if (cycle.test(e) || !g.incident(e, v)) continue;
      if (first == -1) first = e;
      else uf.unite(first, e);
    }
  }
  std::map<int, Flap> groups;
  for (int e = 0; e < g.m(); e++) {
    if (cycle.test(e)) continue;
    int root = uf.find(e);
    auto it = groups.find(root);
    if (it == groups.end())
      it = groups.emplace(root, Flap{EdgeSet(g.m()), VertexSet(g.n())}).first;
    it->second.edges.set(e);
  }
  std::vector<Flap> out;
  for (auto& [root, flap] : groups) {
    for (int e : flap.edges.elements()) {
      if (cycle_verts.test(g.edge(e).u)) flap.attachments.set(g.edge(e).u);
      if (cycle_verts.test(g.edge(e).v)) flap.attachments.set(g.edge(e).v);
    }
    out.push_back(std::move(flap));
  }
  return out;
}

// --- minor containment by branch-set search ---

namespace {

struct MinorSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;          // h vertices, each (after first) h-adjacent to an earlier one
  std::vector<uint64_t> branch;    // branch[i] = vertex mask for order[i]
  std::vector<uint64_t> adj;       // adjacency masks of g

  explicit MinorSearch(const Graph& g_, const Graph& h_) : g(g_), h(h_) {
    adj.assign(g.n(), 0);
    for (const Edge& e : g.edges()) {
      adj[e.u] |= uint64_t(1) << e.v;
      adj[e.v] |= uint64_t(1) << e.u;
    }
  }

  uint64_t mask_neighbors(uint64_t s) const {
    uint64_t out = 0;
    for (uint64_t t = s; t; t &= t - 1) out |= adj[std::countr_zero(t)];
    return out & ~s;
  }

  bool ok_with_previous(int i, uint64_t s) const {
    for (int j = 0; j < i; j++) {
      if (!h.adjacent(order[i], order[j])) continue;
      if (!(mask_neighbors(branch[j]) & s)) return false;
    }
    return true;
  }

  // Enumerate connected subsets of `allowed` containing the current set,
  // recursing into the next branch set whenever the h-adjacency constraints
  // are satisfied.  Excluding an extension vertex from `allowed` after trying
  // it avoids enumerating the same subset twice.
  bool grow(int i, uint64_t cur, uint64_t frontier, uint64_t allowed, uint64_t used) {
    branch[i] = cur;
    if (ok_with_previous(i, cur) && place(i + 1, used | cur)) return true;
    uint64_t f = frontier & allowed;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      uint64_t vbit = uint64_t(1) << v;
      if (grow(i, cur | vbit, (frontier | adj[v]) & allowed & ~(cur | vbit), allowed & ~vbit, used))
        return true;
      branch[i] = cur;
      allowed &= ~vbit;
      f &= allowed;
    }
    return false;
  }

  bool place(int i, uint64_t used) {
    if (i == (int)order.size()) return true;
    uint64_t free = ~used & ((g.n() == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n()) - 1));
    if (std::popcount(free) < (int)order.size() - i) return false;
    // seeds: restrict to neighbors of an already-placed h-neighbor when any
    uint64_t seeds = free;
    for (int j = 0; j < i; j++)
      if (h.adjacent(order[i], order[j])) {
        seeds &= mask_neighbors(branch[j]);
        break;
      }
    uint64_t allowed = free;
    while (seeds) {
      int s = std::countr_zero(seeds);
      seeds &= seeds - 1;
      uint64_t sbit = uint64_t(1) << s;
      if (!(allowed & sbit)) continue;
      if (grow(i, sbit, adj[s] & allowed & ~sbit, allowed & ~sbit, used)) return true;
      allowed &= ~sbit;
    }
    return false;
  }

  bool run() {
    if (h.n() == 0) return true;
    if (h.n() > g.n() || h.m() > g.m()) return false;
    // order h's vertices so each one after the first in its component is
    // h-adjacent to an earlier one
    order.clear();
    std::vector<bool> seen(h.n(), false);
    for (int start = 0; start < h.n(); start++) {
      if (seen[start]) continue;
      seen[start] = true;
      order.push_back(start);
      bool progress = true;
      while (progress) {
        progress = false;
        for (int w = 0; w < h.n(); w++) {
          if (seen[w]) continue;
          for (int x : order)
            if (h.adjacent(w, x)) {
              seen[w] = true;
              order.push_back(w);
              progress = true;
              break;
            }
        }
      }
    }
    branch.assign(h.n(), 0);
    return place(0, 0);
  }
};

}  // namespace

bool is_minor(const Graph& g, const Graph& h) {
  if (g.n() > 64) throw LimitError("is_minor: graph too large");
  MinorSearch s(g, h);
  return s.run();
}

bool is_planar(const Graph& g) {
  return !is_minor(g, complete_graph(5)) && !is_minor(g, complete_bipartite(3, 3));
}

bool is_outerplanar(const Graph& g) {
  return !is_minor(g, complete_graph(4)) && !is_minor(g, complete_bipartite(2, 3));
}

Graph identify_vertices(const Graph& g, int a, int b) {
  if (a == b) throw Error("identify_vertices: vertices must be distinct");
  if (a < 0 || b < 0 || a >= g.n() || b >= g.n())
    throw Error("identify_vertices: vertex out of range");
  auto remap = [&](int v) {
    if (v == b) v = a;
    return v - (v > b ? 1 : 0);
  };
  Graph out(g.n() - 1);
  for (const Edge& e : g.edges()) {
    int u = remap(e.u), v = remap(e.v);
    if (u == v) continue;                  // self-loop dropped
    if (out.edge_between(u, v)) continue;  // parallel collapsed
    out.add_edge(u, v);
  }
  return out;
}

Graph clique_sum(const Graph& g1, const Graph& g2,
                 const std::vector<std::pair<int, int>>& clique_map,
                 const EdgeSet& drop) {
  std::vector<int> c1, c2;
  for (auto [a, b] : clique_map) {
    c1.push_back(a);
    c2.push_back(b);
  }
  auto check_clique = [](const Graph& g, const std::vector<int>& vs, const char* side) {
    for (size_t i = 0; i < vs.size(); i++)
      for (size_t j = i + 1; j < vs.size(); j++)
        if (!g.adjacent(vs[i], vs[j]))
          throw Error(std::string("clique_sum: mapped vertices of ") + side + " are not a clique");
  };
  check_clique(g1, c1, "g1");
  check_clique(g2, c2, "g2");
  if (std::set<int>(c1.begin(), c1.end()).size() != c1.size() ||
      std::set<int>(c2.begin(), c2.end()).size() != c2.size())
    throw Error("clique_sum: map is not a bijection");
  if (drop.universe() != g1.m()) throw Error("clique_sum: drop set has wrong universe");
  for (int e : drop.elements()) {
    auto on_clique = [&](int v) { return std::find(c1.begin(), c1.end(), v) != c1.end(); };
    if (!on_clique(g1.edge(e).u) || !on_clique(g1.edge(e).v))
      throw Error("clique_sum: drop edge not a clique edge");
  }

  // g2 vertex -> result vertex
  std::vector<int> map2(g2.n(), -1);
  for (auto [a, b] : clique_map) map2[b] = a;
  int next = g1.n();
  for (int v = 0; v < g2.n(); v++)
    if (map2[v] == -1) map2[v] = next++;

  std::set<std::pair<int, int>> dropped;
  for (int e : drop.elements())
    dropped.insert(std::minmax(g1.edge(e).u, g1.edge(e).v));

  Graph out(next);
  for (int e = 0; e < g1.m(); e++)
    if (!drop.test(e)) out.add_edge(g1.edge(e).u, g1.edge(e).v);
  for (const Edge& e : g2.edges()) {
    int u = map2[e.u], v = map2[e.v];
    if (dropped.count(std::minmax(u, v))) continue;
    if (!out.edge_between(u, v)) out.add_edge(u, v);
  }
  return out;
}

std::optional<std::vector<int>> is_subhamiltonian(const Graph& g) {
  int n = g.n();
  if (n <= 2) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (n >= 3 && rest.front() > rest.back()) continue;  // reflection
    std::vector<int> order;
    order.push_back(0);
    order.insert(order.end(), rest.begin(), rest.end());
    Graph aug = g;
    bool ok = true;
    for (int i = 0; i < n; i++) {
      int u = order[i], v = order[(i + 1) % n];
      if (!aug.adjacent(u, v)) aug.add_edge(u, v);
    }
    if (ok && is_planar(aug)) return order;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
  std::vector<int> map(g.n(), -1);
  int next = 0;
  for (int v : vs.elements()) map[v] = next++;
  Graph out(next);
  for (const Edge& e : g.edges())
    if (map[e.u] >= 0 && map[e.v] >= 0) out.add_edge(map[e.u], map[e.v]);
  return out;
}

Graph edge_subgraph(const Graph& g, const EdgeSet& es) {
  Graph out(g.n());
  for (int e : es.elements()) out.add_edge(g.edge(e).u, g.edge(e).v);
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.n());
  std::vector<std::pair<int, int>> es;
  for (const Edge& e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
  std::sort(es.begin(), es.end(), [](auto a, auto b) {
    auto na = std::minmax(a.first, a.second), nb = std::minmax(b.first, b.second);
    return na < nb;
  });
  for (auto [u, v] : es) out.add_edge(u, v);
  return out;
}

std::string canonical_key(const Graph& g) {
  int n = g.n();
  if (n > 10) throw LimitError("canonical_key: graph too large");
  std::vector<uint64_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= uint64_t(1) << e.v;
    adj[e.v] |= uint64_t(1) << e.u;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  std::string cur((size_t)n * n, '0');
  do {
    // cur[i*n+j]: adjacency of the relabeled graph, built row by row with an
    // early exit as soon as this permutation cannot beat `best`
    int state = 0;  // -1: cur smaller so far, 0: equal prefix, 1: cur larger
    for (int i = 0; i < n && state <= 0; i++) {
      for (int j = 0; j < n; j++)
        cur[(size_t)i * n + j] = (adj[perm[i]] >> perm[j]) & 1 ? '1' : '0';
      if (state == 0 && !best.empty()) {
        int cmp = cur.compare((size_t)i * n, n, best, (size_t)i * n, n);
        state = cmp < 0 ? -1 : (cmp > 0 ? 1 : 0);
      }
    }
    if (best.empty() || state < 0) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

std::vector<Graph> small_graph_corpus(int n, bool connected_only) {
  if (n > 8) throw LimitError("small_graph_corpus: n too large");
  // grow by one vertex at a time from the (n-1)-vertex corpus
  std::vector<Graph> cur;
  cur.push_back(Graph(0));
  for (int size = 1; size <= n; size++) {
    std::map<std::string, Graph> next;
    for (const Graph& g : cur) {
      for (uint64_t nb = 0; nb < (uint64_t(1) << (size - 1)); nb++) {
        Graph h(size);
        for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
        for (int v = 0; v < size - 1; v++)
          if ((nb >> v) & 1) h.add_edge(v, size - 1);
        next.emplace(canonical_key(h), h);
      }
    }
    cur.clear();
    for (auto& [key, g] : next) cur.push_back(std::move(g));
  }
  if (connected_only) {
    std::vector<Graph> out;
    for (const Graph& g : cur)
      if (is_connected(g)) out.push_back(g);
    return out;
  }
  return cur;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; u++)
    for (int v = u + 1; v < n; v++) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; u++)
    for (int v = 0; v < b; v++) g.add_edge(u, a + v);
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; v++) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; v++) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; v++) g.add_edge(0, v);
  return g;
}

Graph cube_graph() {
  Graph g(8);
  for (int v = 0; v < 8; v++)
    for (int b = 0; b < 3; b++) {
      int w = v ^ (1 << b);
      if (v < w) g.add_edge(v, w);
    }
  return g;
}

Graph prism_graph() {
  Graph g(6);
  for (int v = 0; v < 3; v++) {
    g.add_edge(v, (v + 1) % 3);
    g.add_edge(v + 3, (v + 1) % 3 + 3);
    g.add_edge(v, v + 3);
  }
  return g;
}

Graph wheel_graph(int rim) {
  Graph g(rim + 1);
  for (int v = 1; v <= rim; v++) {
    g.add_edge(0, v);
    g.add_edge(v, v % rim + 1);
  }
  return g;
}

}  // namespace bookcross
