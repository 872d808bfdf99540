#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bookcross/graph.hpp"

namespace bookcross {

enum class Sort { Vertex, Edge, VertexSet, EdgeSet };

inline bool is_set_sort(Sort s) { return s == Sort::VertexSet || s == Sort::EdgeSet; }
inline Sort element_sort(Sort s) { return s == Sort::VertexSet ? Sort::Vertex : Sort::Edge; }
std::string sort_name(Sort s);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable MSO2 formula node.  Quantifiers bind one variable of one of the
// four sorts; atoms are =, set membership, and edge-vertex incidence.  The
// one extension node, Interpreted, evaluates its body on a transformed
// graph; its `outs` name the elements created by the transform.
struct Formula {
  enum class Kind { Forall, Exists, Not, And, Or, Implies, Equal, In, Inc, Interpreted };

  Kind kind;
  Sort sort = Sort::Vertex;            // binder sort for quantifiers
  std::string var, var2;               // binder name, or atom arguments
  std::vector<FormulaPtr> children;    // body / operands
  std::string transform_id;            // Interpreted only
  std::vector<std::string> args;       // Interpreted inputs
  std::vector<std::string> outs;       // Interpreted created elements
};

FormulaPtr quantifier(Formula::Kind k, Sort s, std::string var, FormulaPtr body);
FormulaPtr forall(Sort s, std::string var, FormulaPtr body);
FormulaPtr exists(Sort s, std::string var, FormulaPtr body);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(std::vector<FormulaPtr> fs);
FormulaPtr f_or(std::vector<FormulaPtr> fs);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_equal(std::string a, std::string b);
FormulaPtr f_in(std::string elem, std::string set);
FormulaPtr f_inc(std::string edge, std::string vertex);
FormulaPtr f_interpreted(std::string id, std::vector<std::string> args,
                         std::vector<std::string> outs, FormulaPtr body);
FormulaPtr f_true();   // empty conjunction
FormulaPtr f_false();  // empty disjunction

bool equal_formulas(const FormulaPtr& a, const FormulaPtr& b);

// name -> sort of every free variable; throws on inconsistent use
std::map<std::string, Sort> free_variables(const FormulaPtr& f);

// validates binder/use sort agreement and transform arities; throws ParseError
void check_sorts(const FormulaPtr& f);

// S-expression text; free variables are printed with a "!" prefix
std::string print_formula(const FormulaPtr& f);
FormulaPtr parse_formula(const std::string& text);

// Guard every quantifier of f to range over the vertices in the set
// variable `vs` plus the listed extra vertices (and the edges/sets among
// them).  f's bound variables must not collide with vs/extra.
FormulaPtr relativize(const FormulaPtr& f, const std::string& vs,
                      const std::vector<std::string>& extra);

// Guard every edge and edge-set quantifier of f to range within the edge
// set variable `es`; vertex quantifiers are left unrestricted.
FormulaPtr relativize_edges(const FormulaPtr& f, const std::string& es);

// Expected argument/output sorts of the three registered transforms.
struct TransformSignature {
  std::vector<Sort> arg_sorts;
  std::vector<Sort> out_sorts;
};
const TransformSignature& transform_signature(const std::string& id);

}  // namespace bookcross
