#pragma once

#include <string>
#include <vector>

#include "bookcross/diagram.hpp"
#include "bookcross/formula.hpp"
#include "bookcross/graph.hpp"

namespace bookcross {

// --- basic building blocks ---
// Parameterized builders take the names of their free variables; the
// returned formulas are otherwise closed.

FormulaPtr vertex_partition_f(const std::vector<std::string>& us);
FormulaPtr edge_partition_f(const std::vector<std::string>& es);
// the us partition the vertices other than the named ones
FormulaPtr partition_excluding_f(const std::vector<std::string>& vs,
                                 const std::vector<std::string>& us);
// every member of x is in y
FormulaPtr subset_f(const std::string& x, const std::string& y, Sort set_sort);
FormulaPtr disjoint_f(const std::string& x, const std::string& y, Sort set_sort);
FormulaPtr color_f(int k);
FormulaPtr disconnected_f();
FormulaPtr connected_f();
FormulaPtr connected_vertices_f(const std::string& u);
FormulaPtr connected_edges_f(const std::string& f);
FormulaPtr minor_f(const Graph& h);  // h at most 6 vertices
FormulaPtr planar_f();
FormulaPtr outerplanar_f();
FormulaPtr cycle_set_f(const std::string& f);  // union of vertex-disjoint cycles
FormulaPtr cycle_f(const std::string& f);      // a single cycle
FormulaPtr span_f(const std::string& f);
FormulaPtr hamiltonian_f();
// the edge set f is a path with endpoints x and y
FormulaPtr path_between_f(const std::string& f, const std::string& x, const std::string& y);
// every vertex has even degree (expanded up to degree 6) within the edge set
FormulaPtr even_degrees_f(const std::string& f);

// named registry used by the CLI `formula` command and the tests;
// parameterized entries: color-<k>, minor-<K3|K4|K5|K23|K33>,
// vertex-partition-<k>, edge-partition-<k>; throws Error for unknown names
FormulaPtr build_basic(const std::string& name);
std::vector<std::string> basic_formula_names();

// --- the paper-level constructions ---

// i=1: every vertex of W is covered by F; i=2: F contains all edges induced
// on W; i=3: no edge between the two sets; i=4: the subgraph induced on
// args[0] plus the identified vertices args[1], args[2] is outerplanar.
FormulaPtr build_theta_1page(int i, const std::vector<std::string>& args);

// vertex/edge variables realize the configuration of diagram d: pairwise
// distinct vertices, and each segment's edge joins its two endpoints
FormulaPtr build_alpha(const CrossingDiagram& d, const std::vector<std::string>& vertex_vars,
                       const std::vector<std::string>& edge_vars);

FormulaPtr build_onepage(int k, int max_k = 2);  // 1-page crossing number <= k
FormulaPtr build_twopage();                      // 2-page planarity
FormulaPtr build_zeta(int k, int max_k = 1);     // 2-page crossing number <= k

}  // namespace bookcross
