#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bookcross/bitset.hpp"

namespace bookcross {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error {
  using Error::Error;
};
struct LimitError : Error {
  using Error::Error;
};
struct BudgetError : Error {
  using Error::Error;
};

struct Edge {
  int u, v;  // normalized u < v
  bool operator==(const Edge&) const = default;
};

// Simple undirected graph.  Vertices are 0..n-1, edges carry stable ids
// 0..m-1 in insertion order.  No self-loops, no parallel edges.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {}
  Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int n() const { return n_; }
  int m() const { return (int)edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  int add_edge(int u, int v) {
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw Error("edge endpoint out of range");
    if (edge_between(u, v)) throw Error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v});
    return m() - 1;
  }

  std::optional<int> edge_between(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int e = 0; e < m(); e++)
      if (edges_[e].u == u && edges_[e].v == v) return e;
    return std::nullopt;
  }
  bool adjacent(int u, int v) const { return edge_between(u, v).has_value(); }
  bool incident(int e, int v) const { return edges_[e].u == v || edges_[e].v == v; }
  int other_end(int e, int v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  int degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_) d += (e.u == v || e.v == v);
    return d;
  }
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const Edge& e : edges_) {
      if (e.u == v) out.push_back(e.v);
      else if (e.v == v) out.push_back(e.u);
    }
    return out;
  }
  std::vector<int> incident_edges(int v) const {
    std::vector<int> out;
    for (int e = 0; e < m(); e++)
      if (incident(e, v)) out.push_back(e);
    return out;
  }

  VertexSet full_vertex_set() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; v++) s.set(v);
    return s;
  }
  EdgeSet full_edge_set() const {
    EdgeSet s(m());
    for (int e = 0; e < m(); e++) s.set(e);
    return s;
  }

  bool operator==(const Graph&) const = default;

  std::optional<std::string> label(int v) const {
    if (v < (int)labels_.size() && !labels_[v].empty()) return labels_[v];
    return std::nullopt;
  }
  void set_label(int v, std::string s) {
    if ((int)labels_.size() < n_) labels_.resize(n_);
    labels_[v] = std::move(s);
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

struct Flap {
  EdgeSet edges;           // edges of the flap
  VertexSet attachments;   // attachment vertices on the reference cycle
};

// --- structural primitives ---

int component_count(const Graph& g);
bool is_connected(const Graph& g);

// Edges lying on no simple cycle.
EdgeSet isthmuses(const Graph& g);

// Partition of edges(g) minus cycle c into flaps of c.  c must be the edge
// set of a simple cycle of g.
std::vector<Flap> flaps(const Graph& g, const EdgeSet& cycle);

// True iff h (on at most ~6 vertices) is a minor of g, by exhaustive search
// for disjoint connected branch sets with the required cross edges.
bool is_minor(const Graph& g, const Graph& h);

bool is_planar(const Graph& g);       // excludes K5 and K3,3 minors
bool is_outerplanar(const Graph& g);  // excludes K4 and K2,3 minors

// Merge b into a.  Parallel edges collapse, self-loops are dropped.  The
// result renumbers vertices: b removed, ids above b shifted down.
Graph identify_vertices(const Graph& g, int a, int b);

// Glue g2 onto g1 along a clique bijection, then delete the edges in `drop`
// (given as edge ids of g1 within the clique).  Vertices of g2 are appended
// after those of g1, minus the identified ones.
Graph clique_sum(const Graph& g1, const Graph& g2,
                 const std::vector<std::pair<int, int>>& clique_map,
                 const EdgeSet& drop);

// True iff g is a subgraph of a planar Hamiltonian graph; on success returns
// a cyclic vertex order witnessing it.
std::optional<std::vector<int>> is_subhamiltonian(const Graph& g);

Graph induced_subgraph(const Graph& g, const VertexSet& vs);
Graph edge_subgraph(const Graph& g, const EdgeSet& es);  // same vertex set, subset of edges
Graph relabel(const Graph& g, const std::vector<int>& perm);  // vertex v -> perm[v]

// Canonical form by brute-force minimization over vertex permutations.
// Only intended for small n (guarded at n <= 10).
std::string canonical_key(const Graph& g);

// All non-isomorphic graphs with exactly n vertices (optionally connected
// only), as canonical representatives in a deterministic order.
std::vector<Graph> small_graph_corpus(int n, bool connected_only);

// --- named graphs used throughout the tests and corpus suites ---
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph cube_graph();    // Q3
Graph prism_graph();   // C3 x K2
Graph wheel_graph(int rim);  // W_{rim}: hub + cycle

}  // namespace bookcross
