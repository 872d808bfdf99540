#include "bookcross/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace bookcross {

namespace {

// Neighborhood of v in the graph where the vertices of `eliminated` have
// been eliminated (i.e. v's neighbors plus everything reachable from v
// through eliminated vertices).
uint32_t eliminated_neighborhood(const std::vector<uint32_t>& adj, uint32_t eliminated, int v) {
  uint32_t seen = uint32_t(1) << v;
  uint32_t result = adj[v] & ~eliminated;
  uint32_t through = adj[v] & eliminated & ~seen;
  while (through) {
    int w = std::countr_zero(through);
    through &= through - 1;
    seen |= uint32_t(1) << w;
    uint32_t nw = adj[w];
    result |= nw & ~eliminated;
    through |= nw & eliminated & ~seen;
  }
  return result & ~(uint32_t(1) << v) & ~eliminated;
}

struct ExactSolver {
  int n;
  std::vector<uint32_t> adj;
  std::unordered_map<uint32_t, int> memo;

  // minimum over elimination orders of the remaining vertices of the
  // maximum eliminated-neighborhood size
  int solve(uint32_t eliminated) {
    uint32_t all = n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
    uint32_t rest = all & ~eliminated;
    if (std::popcount(rest) <= 1) return 0;
    auto it = memo.find(eliminated);
    if (it != memo.end()) return it->second;
    int best = n;
    for (uint32_t r = rest; r; r &= r - 1) {
      int v = std::countr_zero(r);
      int deg = std::popcount(eliminated_neighborhood(adj, eliminated, v));
      if (deg >= best) continue;  // cannot improve on the current best
      int sub = solve(eliminated | (uint32_t(1) << v));
      best = std::min(best, std::max(deg, sub));
    }
    memo[eliminated] = best;
    return best;
  }
};

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
  int n = g.n();
  std::vector<uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= uint32_t(1) << e.v;
    adj[e.v] |= uint32_t(1) << e.u;
  }
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back(VertexSet(0));
    return td;
  }
  std::vector<int> position(n);
  for (int i = 0; i < n; i++) position[order[i]] = i;
  std::vector<uint32_t> bagmask(n);
  uint32_t eliminated = 0;
  for (int i = 0; i < n; i++) {
    int v = order[i];
    bagmask[i] = eliminated_neighborhood(adj, eliminated, v) | (uint32_t(1) << v);
    eliminated |= uint32_t(1) << v;
  }
  for (int i = 0; i < n; i++) {
    VertexSet bag(n);
    for (int v = 0; v < n; v++)
      if ((bagmask[i] >> v) & 1) bag.set(v);
    td.bags.push_back(bag);
  }
  // connect the bag of v to the bag of the earliest-later eliminated member
  for (int i = 0; i < n; i++) {
    uint32_t rest = bagmask[i] & ~(uint32_t(1) << order[i]);
    if (!rest) {
      if (i + 1 < n) td.tree.push_back({i, i + 1});  // keep the tree connected
      continue;
    }
    int next = -1;
    for (uint32_t r = rest; r; r &= r - 1) {
      int w = std::countr_zero(r);
      if (next == -1 || position[w] < position[next]) next = w;
    }
    td.tree.push_back({i, position[next]});
  }
  return td;
}

std::vector<int> min_fill_order(const Graph& g) {
  int n = g.n();
  std::vector<uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= uint32_t(1) << e.v;
    adj[e.v] |= uint32_t(1) << e.u;
  }
  std::vector<int> order;
  uint32_t eliminated = 0;
  for (int step = 0; step < n; step++) {
    int best = -1;
    long best_score = -1;
    for (int v = 0; v < n; v++) {
      if ((eliminated >> v) & 1) continue;
      uint32_t nb = eliminated_neighborhood(adj, eliminated, v);
      long fill = 0;
      for (uint32_t a = nb; a; a &= a - 1) {
        int x = std::countr_zero(a);
        uint32_t rest = a & (a - 1);
        for (uint32_t b = rest; b; b &= b - 1) {
          int y = std::countr_zero(b);
          uint32_t ny = eliminated_neighborhood(adj, eliminated, y);
          if (!((ny >> x) & 1)) fill++;
        }
      }
      long score = fill * 64 + std::popcount(nb);
      if (best == -1 || score < best_score) {
        best = v;
        best_score = score;
      }
    }
    order.push_back(best);
    eliminated |= uint32_t(1) << best;
  }
  return order;
}

}  // namespace

bool validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  int b = (int)td.bags.size();
  if (b == 0) return g.n() == 0;
  // tree must be acyclic and connected on bag indices
  if ((int)td.tree.size() != b - 1) return false;
  {
    std::vector<int> parent(b);
    for (int i = 0; i < b; i++) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [x, y] : td.tree) {
      if (x < 0 || y < 0 || x >= b || y >= b) return false;
      if (find(x) == find(y)) return false;
      parent[find(x)] = find(y);
    }
  }
  // every vertex somewhere; every edge covered
  for (int v = 0; v < g.n(); v++) {
    bool found = false;
    for (const VertexSet& bag : td.bags)
      if (bag.test(v)) found = true;
    if (!found) return false;
  }
  for (const Edge& e : g.edges()) {
    bool found = false;
    for (const VertexSet& bag : td.bags)
      if (bag.test(e.u) && bag.test(e.v)) found = true;
    if (!found) return false;
  }
  // connectivity of the occurrences of each vertex
  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : td.tree) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (int v = 0; v < g.n(); v++) {
    int start = -1, count = 0;
    for (int i = 0; i < b; i++)
      if (td.bags[i].test(v)) {
        if (start == -1) start = i;
        count++;
      }
    std::vector<bool> seen(b, false);
    std::vector<int> stack = {start};
    seen[start] = true;
    int reached = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      reached++;
      for (int y : adj[x])
        if (!seen[y] && td.bags[y].test(v)) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    if (reached != count) return false;
  }
  return true;
}

std::pair<int, TreeDecomposition> treewidth_exact(const Graph& g, int max_n) {
  if (g.n() > max_n || g.n() > 25) throw LimitError("treewidth_exact: graph too large");
  if (g.n() == 0) return {0, decomposition_from_order(g, {})};
  auto [ub_width, ub_td] = treewidth_upperbound(g);

  ExactSolver solver;
  solver.n = g.n();
  solver.adj.assign(g.n(), 0);
  for (const Edge& e : g.edges()) {
    solver.adj[e.u] |= uint32_t(1) << e.v;
    solver.adj[e.v] |= uint32_t(1) << e.u;
  }
  int width = solver.solve(0);
  if (width >= ub_width) return {ub_width, ub_td};

  // reconstruct an order achieving `width` by greedy descent through the memo
  std::vector<int> order;
  uint32_t eliminated = 0;
  while ((int)order.size() < g.n()) {
    uint32_t all = g.n() == 32 ? ~uint32_t(0) : (uint32_t(1) << g.n()) - 1;
    uint32_t rest = all & ~eliminated;
    if (std::popcount(rest) <= 1) {
      for (uint32_t r = rest; r; r &= r - 1) order.push_back(std::countr_zero(r));
      break;
    }
    bool advanced = false;
    for (uint32_t r = rest; r && !advanced; r &= r - 1) {
      int v = std::countr_zero(r);
      int deg = std::popcount(eliminated_neighborhood(solver.adj, eliminated, v));
      if (deg > width) continue;
      if (solver.solve(eliminated | (uint32_t(1) << v)) <= width) {
        order.push_back(v);
        eliminated |= uint32_t(1) << v;
        advanced = true;
      }
    }
    if (!advanced) throw Error("treewidth_exact: internal reconstruction failure");
  }
  TreeDecomposition td = decomposition_from_order(g, order);
  return {td.width(), td};
}

std::pair<int, TreeDecomposition> treewidth_upperbound(const Graph& g) {
  if (g.n() > 25) throw LimitError("treewidth_upperbound: graph too large");
  if (g.n() == 0) return {0, decomposition_from_order(g, {})};
  TreeDecomposition td = decomposition_from_order(g, min_fill_order(g));
  return {td.width(), td};
}

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  if (!validate_decomposition(g, td)) throw Error("make_nice: invalid decomposition");
  NiceTreeDecomposition nd;
  auto add = [&](NiceNode node) {
    nd.nodes.push_back(std::move(node));
    return (int)nd.nodes.size() - 1;
  };
  int b = (int)td.bags.size();
  std::vector<std::vector<int>> adj(b);
  for (auto [x, y] : td.tree) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  int n = g.n();

  // chain of introduces from `from` up to bag `to` (to must extend from's
  // content by the listed vertices), returning the top node id
  auto intro_chain = [&](int node, VertexSet cur, const VertexSet& target) {
    for (int v : (target - cur).elements()) {
      cur.set(v);
      VertexSet bag = cur;
      node = add({NiceNode::Kind::Introduce, v, node, -1, bag});
    }
    return node;
  };
  auto forget_chain = [&](int node, VertexSet cur, const VertexSet& target) {
    for (int v : (cur - target).elements()) {
      cur.reset(v);
      VertexSet bag = cur;
      node = add({NiceNode::Kind::Forget, v, node, -1, bag});
    }
    return node;
  };

  // build recursively: returns the id of a node whose bag equals td.bags[t]
  std::function<int(int, int)> build = [&](int t, int parent) -> int {
    std::vector<int> child_tops;
    for (int c : adj[t])
      if (c != parent) {
        int sub = build(c, t);
        // convert child's bag to this bag: forget then introduce
        int x = forget_chain(sub, td.bags[c], td.bags[t]);
        x = intro_chain(x, td.bags[c] & td.bags[t], td.bags[t]);
        child_tops.push_back(x);
      }
    if (child_tops.empty()) {
      int leaf = add({NiceNode::Kind::Leaf, -1, -1, -1, VertexSet(n)});
      return intro_chain(leaf, VertexSet(n), td.bags[t]);
    }
    int cur = child_tops[0];
    for (size_t i = 1; i < child_tops.size(); i++)
      cur = add({NiceNode::Kind::Join, -1, cur, child_tops[i], td.bags[t]});
    return cur;
  };

  int top = build(0, -1);
  nd.root = forget_chain(top, td.bags[0], VertexSet(n));
  return nd;
}

bool validate_nice(const Graph& g, const NiceTreeDecomposition& nd) {
  if (nd.root < 0 || nd.root >= (int)nd.nodes.size()) return false;
  if (nd.nodes[nd.root].bag.any()) return false;
  TreeDecomposition td;
  std::vector<bool> reachable(nd.nodes.size(), false);
  std::vector<int> stack = {nd.root};
  reachable[nd.root] = true;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    const NiceNode& node = nd.nodes[t];
    switch (node.kind) {
      case NiceNode::Kind::Leaf:
        if (node.bag.any() || node.child != -1) return false;
        break;
      case NiceNode::Kind::Introduce: {
        if (node.child < 0) return false;
        VertexSet expect = node.bag;
        if (!node.bag.test(node.vertex)) return false;
        expect.reset(node.vertex);
        if (!(nd.nodes[node.child].bag == expect)) return false;
        break;
      }
      case NiceNode::Kind::Forget: {
        if (node.child < 0) return false;
        VertexSet expect = node.bag;
        if (node.bag.test(node.vertex)) return false;
        expect.set(node.vertex);
        if (!(nd.nodes[node.child].bag == expect)) return false;
        break;
      }
      case NiceNode::Kind::Join:
        if (node.child < 0 || node.child2 < 0) return false;
        if (!(nd.nodes[node.child].bag == node.bag)) return false;
        if (!(nd.nodes[node.child2].bag == node.bag)) return false;
        break;
    }
    for (int c : {node.child, node.child2})
      if (c >= 0) {
        if (reachable[c]) return false;  // must be a tree
        reachable[c] = true;
        stack.push_back(c);
      }
  }
  for (size_t i = 0; i < nd.nodes.size(); i++)
    if (!reachable[i]) return false;
  // reuse the plain validator for the three decomposition invariants
  std::vector<int> idx(nd.nodes.size());
  for (size_t i = 0; i < nd.nodes.size(); i++) {
    td.bags.push_back(nd.nodes[i].bag);
    idx[i] = (int)i;
  }
  for (size_t i = 0; i < nd.nodes.size(); i++)
    for (int c : {nd.nodes[i].child, nd.nodes[i].child2})
      if (c >= 0) td.tree.push_back({(int)i, c});
  return validate_decomposition(g, td);
}

std::string emit_decomposition(const TreeDecomposition& td) {
  std::ostringstream out;
  for (size_t i = 0; i < td.bags.size(); i++) {
    out << "bag " << i << ":";
    for (int v : td.bags[i].elements()) out << " " << v;
    out << "\n";
  }
  for (auto [x, y] : td.tree) out << "edge " << x << " " << y << "\n";
  return out.str();
}

TreeDecomposition parse_decomposition(const std::string& text, int n) {
  TreeDecomposition td;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "bag") {
      std::string id;
      ls >> id;
      VertexSet bag(n);
      int v;
      while (ls >> v) {
        if (v < 0 || v >= n) throw ParseError("decomposition: vertex out of range");
        bag.set(v);
      }
      td.bags.push_back(bag);
    } else if (kind == "edge") {
      int x, y;
      if (!(ls >> x >> y)) throw ParseError("decomposition: malformed edge line");
      td.tree.push_back({x, y});
    } else {
      throw ParseError("decomposition: unknown line '" + kind + "'");
    }
  }
  return td;
}

}  // namespace bookcross
