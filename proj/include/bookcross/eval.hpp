#pragma once

#include <functional>
#include <map>
#include <variant>

#include "bookcross/formula.hpp"
#include "bookcross/graph.hpp"
#include "bookcross/treewidth.hpp"

namespace bookcross {

// A variable binding: vertex/edge id, or a vertex/edge set.
using Value = std::variant<int, Bitset>;
using Assignment = std::map<std::string, Value>;

struct EvalBudget {
  long long max_steps = -1;  // quantifier expansions; -1 = unlimited
  bool use_shortcuts = true; // allow registered native predicates and caches
};

// Direct recursive semantics.  Set quantifiers enumerate subsets (narrowed
// by guard atoms where possible); Interpreted nodes apply the registered
// graph transform and recurse on the transformed graph.  Throws BudgetError
// when max_steps is exhausted.
bool eval_naive(const Graph& g, const FormulaPtr& f, const Assignment& a = {},
                const EvalBudget& budget = {});

enum class CheckResult { True, False, Unsupported };

// Courcelle-style dynamic program over a nice tree decomposition.  Returns
// Unsupported for formulas containing Interpreted nodes or exceeding the
// quantifier-rank limit.
CheckResult eval_courcelle(const Graph& g, const FormulaPtr& f, const NiceTreeDecomposition& td,
                           int max_rank = 3);
// convenience overload: builds a decomposition first; Unsupported when the
// width limit is exceeded
CheckResult eval_courcelle(const Graph& g, const FormulaPtr& f, int max_rank = 3,
                           int max_width = 4);

// Dispatch: the Courcelle engine when it supports the formula and the
// treewidth is small, otherwise the naive evaluator.
bool model_check(const Graph& g, const FormulaPtr& f, const EvalBudget& budget = {});

// --- semantic shortcut registry ---
// Builders pair generated subformulas with native predicates deciding them
// directly; eval_naive consults the registry (unless budget.use_shortcuts
// is off) whenever a node structurally equals a registered shape.  The
// native receives the values of the shape's free variables by name.
using NativeFn = std::function<bool(const Graph&, const Assignment&)>;
void register_shortcut(FormulaPtr shape, NativeFn native);

// planarity-family tests memoized across calls (exact-labelled key)
bool is_planar_cached(const Graph& g);
bool is_outerplanar_cached(const Graph& g);
bool is_minor_cached(const Graph& g, const Graph& h);

}  // namespace bookcross
