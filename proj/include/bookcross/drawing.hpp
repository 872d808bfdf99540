#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bookcross/graph.hpp"

namespace bookcross {

// A book drawing: vertices along a spine (cyclic semantics), each edge in
// one page.  Two edges in the same page cross iff their endpoints
// cyclically interleave on the spine.
struct BookDrawing {
  std::vector<int> spine;  // permutation of vertex ids
  std::vector<int> pages;  // page index per edge id
  int page_count = 1;
};

// Whether positions pc, pd are separated by the chord (pa, pb) on a cycle
// of length n; all four positions distinct.
bool cyclically_interleaved(int pa, int pb, int pc, int pd, int n);

int crossings(const Graph& g, const BookDrawing& d);

// Minimum crossings over all cyclic spine orders, one page.  The witness
// spine is the lexicographically first optimum (first vertex of each
// component fixed, reflections identified).
std::pair<int, BookDrawing> cr1_exact(const Graph& g, int max_n = 11);

// Minimum crossings over spine orders and 2-page edge assignments.  Per
// order, the optimal assignment minimizes monochromatic conflict pairs,
// solved as an exact max-cut on the conflict graph.
std::pair<int, BookDrawing> cr2_exact(const Graph& g, int max_n = 9);

// True iff some spine order yields a bipartite conflict graph; equivalent
// to cr2_exact(g).first == 0 but cheaper.
bool is_2page_planar(const Graph& g, int max_n = 9);

std::string emit_drawing(const BookDrawing& d);
BookDrawing parse_drawing(const std::string& text, const Graph& g);

}  // namespace bookcross
