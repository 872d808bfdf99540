#pragma once

#include <optional>
#include <vector>

#include "bookcross/diagram.hpp"
#include "bookcross/graph.hpp"
#include "bookcross/transforms.hpp"

namespace bookcross {

// Six-way edge partition describing a 2-page drawing: per page, the
// region-boundary cycles (c), the edges interior to them (i), and the
// remaining isthmus-like edges (b).
struct Partition6 {
  EdgeSet ab, ac, ai, bb, bc, bi;
};

std::string emit_partition6(const Partition6& p);
Partition6 parse_partition6(const std::string& text, const Graph& g);

// Witness for the 1-page structural characterization: the crossing-zone
// edges in diagram order, their endpoints in spine order, and the vertex
// groups between consecutive spine endpoints.
struct OnePageWitness {
  std::vector<int> f_edges;     // e_0..e_r, one per diagram segment
  std::vector<int> w_vertices;  // v_0..v_l, one per diagram point
  std::vector<VertexSet> u_sets;
  CrossingDiagram diagram;
};

// --- native property primitives (shared by the structural checks and the
// evaluator's registered shortcuts; these implement exactly the semantics
// of the corresponding generated formulas) ---

// every vertex has even degree at most `bound` within xs
bool degrees_even_bounded(const Graph& g, const EdgeSet& xs, int bound = 6);
// all simple cycles (as edge sets) using only edges of xs
std::vector<EdgeSet> simple_cycles_within(const Graph& g, const EdgeSet& xs);
// a simple cycle within x minus xi uses an edge outside xc
bool has_stray_cycle(const Graph& g, const EdgeSet& x, const EdgeSet& xi, const EdgeSet& xc);
// some simple cycle within xc passes through both endpoints of edge e
bool cycle_through_endpoints(const Graph& g, const EdgeSet& xc, int e);
// two vertex-disjoint paths (not single xi edges, interiors off the cycle)
// with four distinct endpoints in crossing position on some cycle of xc
bool has_crossing_flap_paths(const Graph& g, const EdgeSet& xc, const EdgeSet& xi);
// the full per-page test: some xc/xi choice inside x passes all of the above
bool page_sets_exist(const Graph& g, const EdgeSet& x);

// planarized variants (x_vertex is the crossing vertex; its four edges form
// the closure of any inner edge incident to it)
bool closure_on_cycle(const Graph& g, const EdgeSet& xc, int e, int x_vertex);
bool closures_cross(const Graph& g, const EdgeSet& xc, const EdgeSet& xi, int x_vertex);
bool has_crossing_paths_avoiding(const Graph& g, const EdgeSet& xc, const EdgeSet& xi);
bool page_sets_exist_planarized(const Graph& g, const EdgeSet& x, int x_vertex);
// the witnessing (cycle, interior) pair itself, when one exists
std::optional<std::pair<EdgeSet, EdgeSet>> page_sets_find_planarized(const Graph& g,
                                                                     const EdgeSet& x,
                                                                     int x_vertex);

// --- structural characterizations ---

// 1-page: the witness realizes a drawing with at most k crossings
bool check_onepage_witness(const Graph& g, const OnePageWitness& w, int k);
std::optional<OnePageWitness> find_onepage_witness(const Graph& g, int k);

// 2-page planarity: the partition certifies a crossing-free 2-page drawing
bool check_twopage_partition(const Graph& g, const Partition6& p);
std::optional<Partition6> find_twopage_partition(const Graph& g);

// 2-page with crossings: the partition lives on the planarization of g
// with respect to diagram d realized by edge_ids
bool check_crossing_partition(const Graph& g, const CrossingDiagram& d,
                              const std::vector<int>& edge_ids, const Partition6& p);

// smallest k <= kmax admitting a structural witness (k=0 via the planar
// characterization), or absent
std::optional<int> cr2_via_characterization(const Graph& g, int kmax);

}  // namespace bookcross
