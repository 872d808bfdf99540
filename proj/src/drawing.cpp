#include "bookcross/drawing.hpp"

#include <algorithm>
#include <sstream>

namespace bookcross {

namespace {

std::vector<std::vector<int>> component_lists(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); s++) {
    if (comp[s] != -1) continue;
    comp[s] = (int)out.size();
    std::vector<int> verts = {s}, stack = {s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = comp[s];
          verts.push_back(w);
          stack.push_back(w);
        }
    }
    std::sort(verts.begin(), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

std::vector<int> component_edges(const Graph& g, const std::vector<int>& verts) {
  std::vector<bool> in(g.n(), false);
  for (int v : verts) in[v] = true;
  std::vector<int> out;
  for (int e = 0; e < g.m(); e++)
    if (in[g.edge(e).u]) out.push_back(e);
  return out;
}

// Exact max-cut by branch and bound: nodes 0..t-1, returns (cut size, side
// bitmask).  An edge is decided when its larger endpoint is assigned, so
// the bound adds every edge whose larger endpoint is still open.
struct MaxCutSolver {
  int t;
  std::vector<std::vector<int>> below;  // below[v] = neighbors < v
  std::vector<int> suffix;              // edges with larger endpoint >= i
  int best = -1;
  uint64_t best_side = 0, side = 0;

  void rec(int i, int cut) {
    if (cut + suffix[i] <= best) return;
    if (i == t) {
      best = cut;
      best_side = side;
      return;
    }
    for (int s = 0; s < (i == 0 ? 1 : 2); s++) {
      if (s) side |= uint64_t(1) << i;
      else side &= ~(uint64_t(1) << i);
      int add = 0;
      for (int w : below[i])
        if (((side >> w) & 1) != (unsigned)s) add++;
      rec(i + 1, cut + add);
    }
  }

  std::pair<int, uint64_t> run(int nodes, const std::vector<std::pair<int, int>>& edges) {
    t = nodes;
    below.assign(t, {});
    for (auto [a, b] : edges) below[std::max(a, b)].push_back(std::min(a, b));
    suffix.assign(t + 1, 0);
    for (int i = t - 1; i >= 0; i--) suffix[i] = suffix[i + 1] + (int)below[i].size();
    best = -1;
    rec(0, 0);
    return {best, best_side};
  }
};

bool bipartite(int nodes, const std::vector<std::pair<int, int>>& edges, std::vector<int>* color_out) {
  std::vector<std::vector<int>> adj(nodes);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> color(nodes, -1);
  for (int s = 0; s < nodes; s++) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  if (color_out) *color_out = std::move(color);
  return true;
}

// Enumerate cyclic orders of `verts` (first vertex fixed, reflections
// identified) in lexicographic order, calling fn(order) for each.  fn may
// return false to stop.
template <typename F>
void for_each_cyclic_order(const std::vector<int>& verts, F fn) {
  if (verts.size() <= 2) {
    fn(verts);
    return;
  }
  std::vector<int> rest(verts.begin() + 1, verts.end());
  std::vector<int> order(verts.size());
  order[0] = verts[0];
  do {
    if (rest.size() >= 2 && rest.front() > rest.back()) continue;
    std::copy(rest.begin(), rest.end(), order.begin() + 1);
    if (!fn(order)) return;
  } while (std::next_permutation(rest.begin(), rest.end()));
}

void positions_of(const std::vector<int>& order, std::vector<int>& pos) {
  for (size_t i = 0; i < order.size(); i++) pos[order[i]] = (int)i;
}

}  // namespace

bool cyclically_interleaved(int pa, int pb, int pc, int pd, int n) {
  int span = (pb - pa + n) % n;
  int tc = (pc - pa + n) % n;
  int td = (pd - pa + n) % n;
  bool c_in = tc > 0 && tc < span;
  bool d_in = td > 0 && td < span;
  return c_in != d_in;
}

int crossings(const Graph& g, const BookDrawing& d) {
  if ((int)d.spine.size() != g.n()) throw Error("drawing: spine size mismatch");
  std::vector<bool> seen(g.n(), false);
  for (int v : d.spine) {
    if (v < 0 || v >= g.n() || seen[v]) throw Error("drawing: spine is not a permutation");
    seen[v] = true;
  }
  if ((int)d.pages.size() != g.m()) throw Error("drawing: page assignment size mismatch");
  if (d.page_count < 1 || d.page_count > 2) throw Error("drawing: page count must be 1 or 2");
  for (int p : d.pages)
    if (p < 0 || p >= d.page_count) throw Error("drawing: page index out of range");

  std::vector<int> pos(g.n());
  positions_of(d.spine, pos);
  int count = 0;
  for (int e = 0; e < g.m(); e++)
    for (int f = e + 1; f < g.m(); f++) {
      if (d.pages[e] != d.pages[f]) continue;
      const Edge& a = g.edge(e);
      const Edge& b = g.edge(f);
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      if (cyclically_interleaved(pos[a.u], pos[a.v], pos[b.u], pos[b.v], g.n())) count++;
    }
  return count;
}

std::pair<int, BookDrawing> cr1_exact(const Graph& g, int max_n) {
  if (g.n() > max_n) throw LimitError("cr1_exact: graph too large");
  BookDrawing best;
  best.pages.assign(g.m(), 0);
  best.page_count = 1;
  int total = 0;
  for (const std::vector<int>& comp : component_lists(g)) {
    std::vector<int> edges = component_edges(g, comp);
    std::vector<int> best_order;
    int best_k = -1;
    // positions are component-local; only intra-component pairs can cross
    std::vector<int> lpos(comp.size());
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < comp.size(); i++) local[comp[i]] = (int)i;
    for_each_cyclic_order(comp, [&](const std::vector<int>& order) {
      for (size_t i = 0; i < order.size(); i++) lpos[local[order[i]]] = (int)i;
      int k = 0;
      for (size_t i = 0; i < edges.size() && (best_k == -1 || k < best_k); i++)
        for (size_t j = i + 1; j < edges.size(); j++) {
          const Edge& a = g.edge(edges[i]);
          const Edge& b = g.edge(edges[j]);
          if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
          if (cyclically_interleaved(lpos[local[a.u]], lpos[local[a.v]], lpos[local[b.u]],
                                     lpos[local[b.v]], (int)comp.size()))
            k++;
        }
      if (best_k == -1 || k < best_k) {
        best_k = k;
        best_order = order;
      }
      return best_k != 0;
    });
    total += best_k;
    best.spine.insert(best.spine.end(), best_order.begin(), best_order.end());
  }
  return {total, best};
}

std::pair<int, BookDrawing> cr2_exact(const Graph& g, int max_n) {
  if (g.n() > max_n) throw LimitError("cr2_exact: graph too large");
  BookDrawing best;
  best.pages.assign(g.m(), 0);
  best.page_count = 2;
  int total = 0;
  for (const std::vector<int>& comp : component_lists(g)) {
    std::vector<int> edges = component_edges(g, comp);
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < comp.size(); i++) local[comp[i]] = (int)i;
    std::vector<int> lpos(comp.size());
    std::vector<int> best_order;
    std::vector<int> best_sides(edges.size(), 0);
    int best_k = -1;
    for_each_cyclic_order(comp, [&](const std::vector<int>& order) {
      for (size_t i = 0; i < order.size(); i++) lpos[local[order[i]]] = (int)i;
      // conflict graph on the component's edges under this order
      std::vector<std::pair<int, int>> conflicts;
      for (size_t i = 0; i < edges.size(); i++)
        for (size_t j = i + 1; j < edges.size(); j++) {
          const Edge& a = g.edge(edges[i]);
          const Edge& b = g.edge(edges[j]);
          if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
          if (cyclically_interleaved(lpos[local[a.u]], lpos[local[a.v]], lpos[local[b.u]],
                                     lpos[local[b.v]], (int)comp.size()))
            conflicts.push_back({(int)i, (int)j});
        }
      std::vector<int> sides;
      int k;
      if (bipartite((int)edges.size(), conflicts, &sides)) {
        k = 0;
      } else {
        MaxCutSolver mc;
        auto [cut, mask] = mc.run((int)edges.size(), conflicts);
        k = (int)conflicts.size() - cut;
        sides.resize(edges.size());
        for (size_t i = 0; i < edges.size(); i++) sides[i] = (mask >> i) & 1;
      }
      if (best_k == -1 || k < best_k) {
        best_k = k;
        best_order = order;
        best_sides = sides;
      }
      return best_k != 0;
    });
    total += best_k;
    best.spine.insert(best.spine.end(), best_order.begin(), best_order.end());
    for (size_t i = 0; i < edges.size(); i++) best.pages[edges[i]] = best_sides[i];
  }
  return {total, best};
}

bool is_2page_planar(const Graph& g, int max_n) {
  if (g.n() > max_n) throw LimitError("is_2page_planar: graph too large");
  for (const std::vector<int>& comp : component_lists(g)) {
    std::vector<int> edges = component_edges(g, comp);
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < comp.size(); i++) local[comp[i]] = (int)i;
    std::vector<int> lpos(comp.size());
    bool ok = false;
    for_each_cyclic_order(comp, [&](const std::vector<int>& order) {
      for (size_t i = 0; i < order.size(); i++) lpos[local[order[i]]] = (int)i;
      std::vector<std::pair<int, int>> conflicts;
      for (size_t i = 0; i < edges.size(); i++)
        for (size_t j = i + 1; j < edges.size(); j++) {
          const Edge& a = g.edge(edges[i]);
          const Edge& b = g.edge(edges[j]);
          if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
          if (cyclically_interleaved(lpos[local[a.u]], lpos[local[a.v]], lpos[local[b.u]],
                                     lpos[local[b.v]], (int)comp.size()))
            conflicts.push_back({(int)i, (int)j});
        }
      if (bipartite((int)edges.size(), conflicts, nullptr)) {
        ok = true;
        return false;
      }
      return true;
    });
    if (!ok) return false;
  }
  return true;
}

std::string emit_drawing(const BookDrawing& d) {
  std::ostringstream out;
  out << "order:";
  for (int v : d.spine) out << " " << v;
  out << "\n";
  for (int p = 0; p < d.page_count; p++) {
    out << "page" << p << ":";
    for (size_t e = 0; e < d.pages.size(); e++)
      if (d.pages[e] == p) out << " " << e;
    out << "\n";
  }
  return out.str();
}

BookDrawing parse_drawing(const std::string& text, const Graph& g) {
  BookDrawing d;
  d.pages.assign(g.m(), -1);
  d.page_count = 1;
  std::istringstream in(text);
  std::string line;
  bool saw_order = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "order:") {
      saw_order = true;
      int v;
      while (ls >> v) d.spine.push_back(v);
    } else if (head == "page0:" || head == "page1:") {
      int p = head == "page1:" ? 1 : 0;
      if (p == 1) d.page_count = 2;
      int e;
      while (ls >> e) {
        if (e < 0 || e >= g.m()) throw ParseError("drawing: edge id out of range");
        if (d.pages[e] != -1) throw ParseError("drawing: edge assigned twice");
        d.pages[e] = p;
      }
    } else {
      throw ParseError("drawing: unknown line '" + head + "'");
    }
  }
  if (!saw_order) throw ParseError("drawing: missing order line");
  for (int p : d.pages)
    if (p == -1) throw ParseError("drawing: unassigned edge");
  return d;
}

}  // namespace bookcross
