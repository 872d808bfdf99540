#include "bookcross/eval.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <unordered_map>

#include "bookcross/builders.hpp"
#include "bookcross/graph6.hpp"
#include "bookcross/transforms.hpp"

namespace bookcross {

namespace {

// --- structural hashing, memoized by node identity; the memo keeps the
// nodes alive so pointers are never reused while cached ---

struct HashCache {
  std::unordered_map<const Formula*, std::pair<FormulaPtr, size_t>> memo;
};

size_t mix(size_t a, size_t b) { return a * 1000003u ^ (b + 0x9e3779b9u + (a << 6) + (a >> 2)); }

size_t hash_formula(const FormulaPtr& f, HashCache& hc) {
  auto it = hc.memo.find(f.get());
  if (it != hc.memo.end()) return it->second.second;
  std::hash<std::string> hs;
  size_t h = mix((size_t)f->kind * 31 + (size_t)f->sort, hs(f->var));
  h = mix(h, hs(f->var2));
  h = mix(h, hs(f->transform_id));
  for (const std::string& s : f->args) h = mix(h, hs(s));
  for (const std::string& s : f->outs) h = mix(h, hs(s));
  for (const FormulaPtr& c : f->children) h = mix(h, hash_formula(c, hc));
  hc.memo.emplace(f.get(), std::make_pair(f, h));
  return h;
}

struct Registry {
  HashCache hashes;
  std::unordered_map<size_t, std::vector<std::pair<FormulaPtr, NativeFn>>> buckets;
};

Registry& registry() {
  static Registry r;
  return r;
}

// free-variable names memoized per evaluation (nodes outlive the call);
// collected without sort inference, which can be ambiguous on subformulas
using FreeVars = std::set<std::string>;

void collect_free_names(const Formula* f, std::map<std::string, int>& bound, FreeVars& out) {
  auto use = [&](const std::string& n) {
    auto it = bound.find(n);
    if (it == bound.end() || it->second == 0) out.insert(n);
  };
  switch (f->kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      bound[f->var]++;
      collect_free_names(f->children[0].get(), bound, out);
      bound[f->var]--;
      break;
    case Formula::Kind::Equal:
    case Formula::Kind::In:
    case Formula::Kind::Inc:
      use(f->var);
      use(f->var2);
      break;
    case Formula::Kind::Interpreted:
      for (const std::string& a : f->args) use(a);
      for (const std::string& o : f->outs) bound[o]++;
      collect_free_names(f->children[0].get(), bound, out);
      for (const std::string& o : f->outs) bound[o]--;
      break;
    default:
      for (const FormulaPtr& c : f->children) collect_free_names(c.get(), bound, out);
  }
}

struct FvCache {
  std::unordered_map<const Formula*, FreeVars> memo;
  std::unordered_map<const Formula*, std::map<std::string, Sort>> sorted_memo;
  const FreeVars& get(const FormulaPtr& f) {
    auto it = memo.find(f.get());
    if (it != memo.end()) return it->second;
    FreeVars names;
    std::map<std::string, int> bound;
    collect_free_names(f.get(), bound, names);
    return memo.emplace(f.get(), std::move(names)).first->second;
  }
  // sorts are only resolvable on nodes whose atoms pin them down; used for
  // transform remapping, where the transform signature anchors the inference
  const std::map<std::string, Sort>& get_sorted(const FormulaPtr& f) {
    auto it = sorted_memo.find(f.get());
    if (it != sorted_memo.end()) return it->second;
    return sorted_memo.emplace(f.get(), free_variables(f)).first->second;
  }
};

// interpreted-body results for marked-canonical isomorphic transformed graphs
struct BodyCache {
  std::map<std::pair<const Formula*, std::string>, bool> results;
  std::vector<FormulaPtr> keep_alive;
};
BodyCache& body_cache() {
  static BodyCache c;
  return c;
}

struct Binding {
  Assignment& a;
  std::string name;
  std::optional<Value> old;
  Binding(Assignment& asg, const std::string& n, Value v) : a(asg), name(n) {
    auto it = a.find(n);
    if (it != a.end()) old = it->second;
    a[n] = std::move(v);
  }
  ~Binding() {
    if (old) a[name] = *old;
    else a.erase(name);
  }
};

struct Evaluator {
  const Graph& g;
  const EvalBudget& budget;
  long long* steps;
  Assignment& asg;
  FvCache& fv;
  // per-graph memo of quantifier subformulas keyed by their free bindings;
  // purely logical, so valid with and without shortcuts
  std::map<std::pair<const Formula*, std::string>, bool> memo;

  std::optional<std::string> binding_key(const FormulaPtr& f) {
    const FreeVars& frees = fv.get(f);
    if (frees.size() > 4) return std::nullopt;
    std::string key;
    for (const std::string& name : frees) {
      auto it = asg.find(name);
      if (it == asg.end()) return std::nullopt;
      key += name;
      key += '=';
      if (std::holds_alternative<int>(it->second))
        key += std::to_string(std::get<int>(it->second));
      else
        key += std::get<Bitset>(it->second).to_string();
      key += ';';
    }
    return key;
  }

  void tick() {
    if (budget.max_steps >= 0 && ++*steps > budget.max_steps)
      throw BudgetError("evaluation budget exhausted");
  }

  int elem_value(const std::string& name) const {
    auto it = asg.find(name);
    if (it == asg.end()) throw Error("unbound variable '" + name + "'");
    return std::get<int>(it->second);
  }
  const Bitset& set_value(const std::string& name) const {
    auto it = asg.find(name);
    if (it == asg.end()) throw Error("unbound variable '" + name + "'");
    return std::get<Bitset>(it->second);
  }
  bool bound_elem(const std::string& name) const {
    auto it = asg.find(name);
    return it != asg.end() && std::holds_alternative<int>(it->second);
  }
  bool bound_set(const std::string& name) const {
    auto it = asg.find(name);
    return it != asg.end() && std::holds_alternative<Bitset>(it->second);
  }

  bool eval(const FormulaPtr& f) {
    if (budget.use_shortcuts && f->kind != Formula::Kind::Equal &&
        f->kind != Formula::Kind::In && f->kind != Formula::Kind::Inc) {
      Registry& r = registry();
      auto it = r.buckets.find(hash_formula(f, r.hashes));
      if (it != r.buckets.end())
        for (const auto& [shape, native] : it->second)
          if (equal_formulas(f, shape)) return native(g, asg);
    }
    switch (f->kind) {
      case Formula::Kind::Equal:
        return elem_value(f->var) == elem_value(f->var2);
      case Formula::Kind::In:
        return set_value(f->var2).test(elem_value(f->var));
      case Formula::Kind::Inc:
        return g.incident(elem_value(f->var), elem_value(f->var2));
      case Formula::Kind::Not:
        return !eval(f->children[0]);
      case Formula::Kind::And:
        for (const FormulaPtr& c : f->children)
          if (!eval(c)) return false;
        return true;
      case Formula::Kind::Or:
        for (const FormulaPtr& c : f->children)
          if (eval(c)) return true;
        return false;
      case Formula::Kind::Implies:
        return !eval(f->children[0]) || eval(f->children[1]);
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        std::optional<std::string> key = binding_key(f);
        if (key) {
          auto it = memo.find({f.get(), *key});
          if (it != memo.end()) return it->second;
        }
        bool r = is_set_sort(f->sort) ? quantify_set(f) : quantify_elem(f);
        if (key) memo.emplace(std::make_pair(f.get(), std::move(*key)), r);
        return r;
      }
      case Formula::Kind::Interpreted:
        return interpreted(f);
    }
    throw Error("eval: unknown node");
  }

  // conjuncts usable for narrowing the quantifier's domain: for exists the
  // top-level conjuncts of the body, for forall those of the antecedent
  std::vector<FormulaPtr> guard_conjuncts(const FormulaPtr& f) const {
    FormulaPtr src = f->children[0];
    if (f->kind == Formula::Kind::Forall) {
      if (src->kind != Formula::Kind::Implies) return {};
      src = src->children[0];
    }
    if (src->kind == Formula::Kind::And) return src->children;
    return {src};
  }

  bool quantify_elem(const FormulaPtr& f) {
    bool exists_mode = f->kind == Formula::Kind::Exists;
    int universe = f->sort == Sort::Vertex ? g.n() : g.m();
    std::vector<char> cand(universe, 1);
    auto restrict_to = [&](const std::vector<int>& keep) {
      std::vector<char> next(universe, 0);
      for (int i : keep)
        if (i >= 0 && i < universe && cand[i]) next[i] = 1;
      cand = std::move(next);
    };
    for (const FormulaPtr& c : guard_conjuncts(f)) {
      if (c->kind == Formula::Kind::Equal) {
        if (c->var == f->var && c->var2 != f->var && bound_elem(c->var2))
          restrict_to({elem_value(c->var2)});
        else if (c->var2 == f->var && c->var != f->var && bound_elem(c->var))
          restrict_to({elem_value(c->var)});
      } else if (c->kind == Formula::Kind::In) {
        if (c->var == f->var && bound_set(c->var2)) restrict_to(set_value(c->var2).elements());
      } else if (c->kind == Formula::Kind::Inc) {
        if (f->sort == Sort::Edge && c->var == f->var && bound_elem(c->var2))
          restrict_to(g.incident_edges(elem_value(c->var2)));
        else if (f->sort == Sort::Vertex && c->var2 == f->var && bound_elem(c->var)) {
          const Edge& e = g.edge(elem_value(c->var));
          restrict_to({e.u, e.v});
        }
      }
    }
    for (int i = 0; i < universe; i++) {
      if (!cand[i]) continue;
      tick();
      Binding b(asg, f->var, i);
      bool r = eval(f->children[0]);
      if (exists_mode && r) return true;
      if (!exists_mode && !r) return false;
    }
    return !exists_mode;
  }

  // --- set quantifiers ---

  // recognize a block of consecutive existential set quantifiers whose body
  // starts with a partition template over exactly those variables, and
  // enumerate block assignments (k^n) instead of independent subsets (2^kn)
  bool try_partition_block(const FormulaPtr& f, bool& result) {
    std::vector<std::string> chain = {f->var};
    FormulaPtr cur = f->children[0];
    while (cur->kind == Formula::Kind::Exists && cur->sort == f->sort) {
      chain.push_back(cur->var);
      cur = cur->children[0];
    }
    if (chain.size() < 2 || cur->kind != Formula::Kind::And || cur->children.empty())
      return false;
    const FormulaPtr& c0 = cur->children[0];
    if (c0->kind != Formula::Kind::Forall || c0->sort != element_sort(f->sort)) return false;
    const FormulaPtr& inner = c0->children[0];
    if (inner->kind != Formula::Kind::And || inner->children.empty()) return false;
    const FormulaPtr& cover = inner->children[0];
    if (cover->kind != Formula::Kind::Or) return false;
    std::vector<std::string> vnames, unames;
    for (const FormulaPtr& atom : cover->children) {
      if (atom->kind == Formula::Kind::Equal && atom->var == c0->var)
        vnames.push_back(atom->var2);
      else if (atom->kind == Formula::Kind::In && atom->var == c0->var)
        unames.push_back(atom->var2);
      else
        return false;
    }
    if (unames.size() != chain.size()) return false;
    {
      std::vector<std::string> a = unames, b = chain;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
    for (const std::string& v : vnames)
      if (!bound_elem(v)) return false;
    FormulaPtr rebuilt;
    if (vnames.empty())
      rebuilt = f->sort == Sort::VertexSet ? vertex_partition_f(unames)
                                           : edge_partition_f(unames);
    else if (f->sort == Sort::VertexSet)
      rebuilt = partition_excluding_f(vnames, unames);
    else
      return false;
    if (!equal_formulas(c0, rebuilt)) return false;

    int universe = f->sort == Sort::VertexSet ? g.n() : g.m();
    std::vector<char> excluded(universe, 0);
    for (const std::string& v : vnames) excluded[elem_value(v)] = 1;
    std::vector<int> free_elems;
    for (int i = 0; i < universe; i++)
      if (!excluded[i]) free_elems.push_back(i);
    int k = (int)unames.size();
    std::vector<int> block(free_elems.size(), 0);
    std::vector<FormulaPtr> rest(cur->children.begin() + 1, cur->children.end());
    while (true) {
      tick();
      std::vector<Bitset> sets(k, Bitset(universe));
      for (size_t i = 0; i < free_elems.size(); i++) sets[block[i]].set(free_elems[i]);
      {
        std::vector<std::unique_ptr<Binding>> binds;
        for (int i = 0; i < k; i++)
          binds.push_back(std::make_unique<Binding>(asg, unames[i], sets[i]));
        bool ok = true;
        for (const FormulaPtr& c : rest)
          if (!eval(c)) {
            ok = false;
            break;
          }
        if (ok) {
          result = true;
          return true;
        }
      }
      size_t pos = 0;
      while (pos < block.size() && block[pos] == k - 1) block[pos++] = 0;
      if (pos == block.size()) break;
      block[pos]++;
    }
    result = false;
    return true;
  }

  bool quantify_set(const FormulaPtr& f) {
    bool exists_mode = f->kind == Formula::Kind::Exists;
    if (exists_mode) {
      bool result;
      if (try_partition_block(f, result)) return result;
    }
    int universe = f->sort == Sort::VertexSet ? g.n() : g.m();
    Bitset allowed(universe);
    for (int i = 0; i < universe; i++) allowed.set(i);
    for (const FormulaPtr& c : guard_conjuncts(f)) {
      // relativization guard: forall x (x in VAR -> psi), psi independent of
      // VAR: only psi-satisfiers may enter the set
      if (c->kind == Formula::Kind::Forall && c->sort == element_sort(f->sort) &&
          c->children[0]->kind == Formula::Kind::Implies) {
        const FormulaPtr& ante = c->children[0]->children[0];
        const FormulaPtr& psi = c->children[0]->children[1];
        if (ante->kind == Formula::Kind::In && ante->var == c->var && ante->var2 == f->var &&
            !fv.get(psi).count(f->var)) {
          for (int i : allowed.elements()) {
            Binding b(asg, c->var, i);
            if (!eval(psi)) allowed.reset(i);
          }
        }
      }
      // clause guard: forall x (... or not (x in VAR) or ...): only elements
      // satisfying the remaining disjuncts may enter the set
      if (c->kind == Formula::Kind::Forall && c->sort == element_sort(f->sort) &&
          c->children[0]->kind == Formula::Kind::Or) {
        const auto& disj = c->children[0]->children;
        int hit = -1;
        for (size_t d = 0; d < disj.size(); d++)
          if (disj[d]->kind == Formula::Kind::Not &&
              disj[d]->children[0]->kind == Formula::Kind::In &&
              disj[d]->children[0]->var == c->var && disj[d]->children[0]->var2 == f->var)
            hit = (int)d;
        if (hit >= 0) {
          std::vector<FormulaPtr> rest;
          bool independent = true;
          for (size_t d = 0; d < disj.size(); d++) {
            if ((int)d == hit) continue;
            if (fv.get(disj[d]).count(f->var)) independent = false;
            rest.push_back(disj[d]);
          }
          if (independent) {
            for (int i : allowed.elements()) {
              Binding b(asg, c->var, i);
              bool any = false;
              for (const FormulaPtr& d : rest)
                if (eval(d)) {
                  any = true;
                  break;
                }
              if (!any) allowed.reset(i);
            }
          }
        }
      }
      // disjointness: not exists s (s in VAR and s in Z)
      if (c->kind == Formula::Kind::Not && c->children[0]->kind == Formula::Kind::Exists &&
          c->children[0]->sort == element_sort(f->sort)) {
        const FormulaPtr& ex = c->children[0];
        const FormulaPtr& body = ex->children[0];
        if (body->kind == Formula::Kind::And && body->children.size() == 2) {
          const FormulaPtr& a1 = body->children[0];
          const FormulaPtr& a2 = body->children[1];
          if (a1->kind == Formula::Kind::In && a2->kind == Formula::Kind::In &&
              a1->var == ex->var && a2->var == ex->var) {
            const std::string& x = a1->var2;
            const std::string& y = a2->var2;
            if (x == f->var && y != f->var && bound_set(y)) allowed -= set_value(y);
            else if (y == f->var && x != f->var && bound_set(x)) allowed -= set_value(x);
          }
        }
      }
    }
    std::vector<int> elems = allowed.elements();
    if (elems.size() >= 26) throw LimitError("set quantifier domain too large");
    for (uint64_t mask = 0; mask < (uint64_t(1) << elems.size()); mask++) {
      tick();
      Bitset s(universe);
      for (size_t i = 0; i < elems.size(); i++)
        if ((mask >> i) & 1) s.set(elems[i]);
      Binding b(asg, f->var, s);
      bool r = eval(f->children[0]);
      if (exists_mode && r) return true;
      if (!exists_mode && !r) return false;
    }
    return !exists_mode;
  }

  bool interpreted(const FormulaPtr& f) {
    TransformResult tr;
    if (f->transform_id == "identify")
      tr = apply_identify(g, elem_value(f->args[0]), elem_value(f->args[1]));
    else if (f->transform_id == "bridge")
      tr = apply_bridge(g, elem_value(f->args[0]), elem_value(f->args[1]));
    else if (f->transform_id == "separate")
      tr = apply_separate(g, set_value(f->args[0]), set_value(f->args[1]));
    else if (f->transform_id == "planarize")
      tr = apply_planarize_pair(g, elem_value(f->args[0]), elem_value(f->args[1]));
    else
      throw Error("unknown transform '" + f->transform_id + "'");

    const FormulaPtr& body = f->children[0];
    const FreeVars& frees = fv.get(body);
    auto is_out = [&](const std::string& name) {
      for (const std::string& o : f->outs)
        if (o == name) return true;
      return false;
    };

    // isomorphism-level memo: single created vertex, otherwise closed body
    bool cacheable = budget.use_shortcuts && tr.outs.size() == 1 && tr.graph.n() <= 8 &&
                     transform_signature(f->transform_id).out_sorts ==
                         std::vector<Sort>{Sort::Vertex};
    for (const std::string& name : frees)
      if (!is_out(name)) cacheable = false;
    std::pair<const Formula*, std::string> key;
    if (cacheable) {
      key = {body.get(), f->transform_id + "#" + canonical_key_marked(tr.graph, tr.outs[0])};
      auto it = body_cache().results.find(key);
      if (it != body_cache().results.end()) return it->second;
    }

    Assignment na;
    const std::map<std::string, Sort>& node_sorts = fv.get_sorted(f);
    for (const std::string& name : frees) {
      if (is_out(name)) continue;
      Sort sort = node_sorts.at(name);
      const Value& v = asg.at(name);
      if (sort == Sort::Vertex || sort == Sort::Edge) {
        const std::vector<int>& m = sort == Sort::Vertex ? tr.vertex_map : tr.edge_map;
        int img = m.at(std::get<int>(v));
        if (img < 0) throw Error("transform does not preserve binding '" + name + "'");
        na[name] = img;
      } else {
        const std::vector<int>& m = sort == Sort::VertexSet ? tr.vertex_map : tr.edge_map;
        Bitset s(sort == Sort::VertexSet ? tr.graph.n() : tr.graph.m());
        for (int i : std::get<Bitset>(v).elements()) {
          if (m.at(i) < 0) throw Error("transform does not preserve binding '" + name + "'");
          s.set(m.at(i));
        }
        na[name] = s;
      }
    }
    for (size_t i = 0; i < f->outs.size(); i++) na[f->outs[i]] = tr.outs[i];

    Evaluator sub{tr.graph, budget, steps, na, fv};
    bool r = sub.eval(body);
    if (cacheable) {
      body_cache().results.emplace(key, r);
      body_cache().keep_alive.push_back(body);
    }
    return r;
  }
};

}  // namespace

void register_shortcut(FormulaPtr shape, NativeFn native) {
  Registry& r = registry();
  size_t h = hash_formula(shape, r.hashes);
  for (const auto& [existing, fn] : r.buckets[h])
    if (equal_formulas(existing, shape)) return;  // first registration wins
  r.buckets[h].push_back({std::move(shape), std::move(native)});
}

bool eval_naive(const Graph& g, const FormulaPtr& f, const Assignment& a,
                const EvalBudget& budget) {
  check_sorts(f);
  Assignment asg = a;
  long long steps = 0;
  FvCache fv;
  Evaluator ev{g, budget, &steps, asg, fv};
  return ev.eval(f);
}

bool model_check(const Graph& g, const FormulaPtr& f, const EvalBudget& budget) {
  CheckResult r = eval_courcelle(g, f);
  if (r == CheckResult::True) return true;
  if (r == CheckResult::False) return false;
  return eval_naive(g, f, {}, budget);
}

bool is_planar_cached(const Graph& g) {
  static std::unordered_map<std::string, bool> cache;
  std::string key = emit_graph6(g);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  bool r = is_planar(g);
  cache.emplace(std::move(key), r);
  return r;
}

bool is_outerplanar_cached(const Graph& g) {
  static std::unordered_map<std::string, bool> cache;
  std::string key = emit_graph6(g);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  bool r = is_outerplanar(g);
  cache.emplace(std::move(key), r);
  return r;
}

bool is_minor_cached(const Graph& g, const Graph& h) {
  static std::unordered_map<std::string, bool> cache;
  std::string key = emit_graph6(g) + "|" + emit_graph6(h);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  bool r = is_minor(g, h);
  cache.emplace(std::move(key), r);
  return r;
}

}  // namespace bookcross
