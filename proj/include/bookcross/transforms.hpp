#pragma once

#include "bookcross/diagram.hpp"
#include "bookcross/graph.hpp"

namespace bookcross {

// Result of a registered graph transform: the new graph plus maps taking
// each original vertex/edge id to its image, or -1 when it has no
// well-defined single image.  `outs` are the created elements, matching the
// transform's signature.
struct TransformResult {
  Graph graph;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
  std::vector<int> outs;
};

// Merge vertex b into a; outs = the merged vertex.
TransformResult apply_identify(const Graph& g, int a, int b);

// Add one fresh vertex adjacent to a and b (a != b); outs = that vertex.
// Existing vertex and edge ids are unchanged.
TransformResult apply_bridge(const Graph& g, int a, int b);

// Split every vertex into one copy per page, joined by a new edge; page
// edges stay within their copy.  a/b must partition the edges.  Vertices
// have no single image (vertex_map is all -1); outs is empty.
TransformResult apply_separate(const Graph& g, const EdgeSet& a, const EdgeSet& b);

// Replace two edges that share no endpoint by paths through one new shared
// degree-4 vertex; outs = that vertex.
TransformResult apply_planarize_pair(const Graph& g, int e1, int e2);

// Plain-graph view of apply_separate, with the copy-pair layout
// (v, first page) = v and (v, second page) = v + n.
Graph separate(const Graph& g, const EdgeSet& a, const EdgeSet& b);

// Planarization of a whole crossing diagram: each mapped edge becomes a
// path whose internal vertices are its crossings with the other mapped
// edges, in the order the crossings occur along its chord.
struct PlanarizedGraph {
  Graph graph;
  std::vector<std::vector<int>> paths;  // per diagram segment: edge ids of its path
  VertexSet crossing_vertices;
  std::vector<int> crossing_page;  // page of each new vertex's crossing (by vertex id offset)
};

// edge_ids[s] is the graph edge realizing diagram segment s.
PlanarizedGraph planarize(const Graph& g, const CrossingDiagram& d,
                          const std::vector<int>& edge_ids);

// Canonical form that additionally fixes one marked vertex (guarded at
// small n like canonical_key).
std::string canonical_key_marked(const Graph& g, int marked);

}  // namespace bookcross
