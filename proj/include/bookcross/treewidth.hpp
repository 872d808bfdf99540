#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bookcross/graph.hpp"

namespace bookcross {

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree;  // edges between bag indices

  int width() const {
    int w = -1;
    for (const VertexSet& b : bags) w = std::max(w, b.count() - 1);
    return w;
  }
};

// Rooted normal form: leaf (empty bag), introduce(v), forget(v), join.
// Join children carry identical bags; the root bag is empty.
struct NiceNode {
  enum class Kind { Leaf, Introduce, Forget, Join };
  Kind kind;
  int vertex = -1;       // for Introduce/Forget
  int child = -1;        // -1 for Leaf
  int child2 = -1;       // second child of Join
  VertexSet bag;
};

struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
  int width() const {
    int w = -1;
    for (const NiceNode& n : nodes) w = std::max(w, n.bag.count() - 1);
    return w;
  }
};

bool validate_decomposition(const Graph& g, const TreeDecomposition& td);
bool validate_nice(const Graph& g, const NiceTreeDecomposition& nd);

// Exact treewidth by memoized search over elimination orders, bounded from
// above by the min-fill heuristic.  Guarded at `max_n` vertices.
std::pair<int, TreeDecomposition> treewidth_exact(const Graph& g, int max_n = 20);

// Min-fill heuristic; always a valid decomposition, width >= exact.
std::pair<int, TreeDecomposition> treewidth_upperbound(const Graph& g);

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

std::string emit_decomposition(const TreeDecomposition& td);
TreeDecomposition parse_decomposition(const std::string& text, int n);

}  // namespace bookcross
