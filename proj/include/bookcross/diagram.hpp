#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bookcross/graph.hpp"

namespace bookcross {

// A crossing diagram: points on a circle joined by chords (segments),
// optionally 2-colored by page.  Two segments cross iff they are on the
// same page and their endpoints cyclically interleave; segments sharing an
// endpoint never cross.
struct CrossingDiagram {
  int points = 0;
  std::vector<std::pair<int, int>> segments;  // point pairs, first < second
  std::vector<int> colors;                    // page per segment; empty for 1-page

  int crossing_count() const;
  // every point covered; no segment uncrossed (same-page for 2-page)
  bool well_formed() const;
  // rotation-minimal serialization; reflections are NOT identified
  std::string canonical_key() const;
};

// All diagrams on at most 4k circle points with exactly k crossings
// (or at most k when exactly=false), deduplicated under rotation.
// pages=2 additionally enumerates page colorings.
std::vector<CrossingDiagram> enumerate_crossing_diagrams(int k, int pages, bool exactly = true,
                                                         int max_k = 2);

// The 1-page diagrams above extended with uncrossed chords: exactly k
// crossings, every point incident to at least one crossed chord, and any
// further mutually uncrossed chords between those points.  These describe
// the full set of edges induced on the crossing-edge endpoints, not just
// the crossing edges themselves.
std::vector<CrossingDiagram> enumerate_relaxed_diagrams(int k, int max_k = 2);

}  // namespace bookcross
