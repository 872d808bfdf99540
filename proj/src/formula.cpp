#include "bookcross/formula.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>
#include <sstream>

namespace bookcross {

std::string sort_name(Sort s) {
  switch (s) {
    case Sort::Vertex: return "vertex";
    case Sort::Edge: return "edge";
    case Sort::VertexSet: return "vertex-set";
    case Sort::EdgeSet: return "edge-set";
  }
  return "?";
}

FormulaPtr quantifier(Formula::Kind k, Sort s, std::string var, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->sort = s;
  f->var = std::move(var);
  f->children = {std::move(body)};
  return f;
}
FormulaPtr forall(Sort s, std::string var, FormulaPtr body) {
  return quantifier(Formula::Kind::Forall, s, std::move(var), std::move(body));
}
FormulaPtr exists(Sort s, std::string var, FormulaPtr body) {
  return quantifier(Formula::Kind::Exists, s, std::move(var), std::move(body));
}
FormulaPtr f_not(FormulaPtr f) {
  auto r = std::make_shared<Formula>();
  r->kind = Formula::Kind::Not;
  r->children = {std::move(f)};
  return r;
}
FormulaPtr f_and(std::vector<FormulaPtr> fs) {
  auto r = std::make_shared<Formula>();
  r->kind = Formula::Kind::And;
  r->children = std::move(fs);
  return r;
}
FormulaPtr f_or(std::vector<FormulaPtr> fs) {
  auto r = std::make_shared<Formula>();
  r->kind = Formula::Kind::Or;
  r->children = std::move(fs);
  return r;
}
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  auto r = std::make_shared<Formula>();
  r->kind = Formula::Kind::Implies;
  r->children = {std::move(a), std::move(b)};
  return r;
}
static FormulaPtr atom(Formula::Kind k, std::string a, std::string b) {
  auto r = std::make_shared<Formula>();
  r->kind = k;
  r->var = std::move(a);
  r->var2 = std::move(b);
  return r;
}
FormulaPtr f_equal(std::string a, std::string b) { return atom(Formula::Kind::Equal, std::move(a), std::move(b)); }
FormulaPtr f_in(std::string elem, std::string set) { return atom(Formula::Kind::In, std::move(elem), std::move(set)); }
FormulaPtr f_inc(std::string edge, std::string vertex) { return atom(Formula::Kind::Inc, std::move(edge), std::move(vertex)); }
FormulaPtr f_interpreted(std::string id, std::vector<std::string> args,
                         std::vector<std::string> outs, FormulaPtr body) {
  auto r = std::make_shared<Formula>();
  r->kind = Formula::Kind::Interpreted;
  r->transform_id = std::move(id);
  r->args = std::move(args);
  r->outs = std::move(outs);
  r->children = {std::move(body)};
  return r;
}
FormulaPtr f_true() { return f_and({}); }
FormulaPtr f_false() { return f_or({}); }

bool equal_formulas(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->sort != b->sort || a->var != b->var || a->var2 != b->var2 ||
      a->transform_id != b->transform_id || a->args != b->args || a->outs != b->outs ||
      a->children.size() != b->children.size())
    return false;
  for (size_t i = 0; i < a->children.size(); i++)
    if (!equal_formulas(a->children[i], b->children[i])) return false;
  return true;
}

const TransformSignature& transform_signature(const std::string& id) {
  static const std::map<std::string, TransformSignature> registry = {
      {"identify", {{Sort::Vertex, Sort::Vertex}, {Sort::Vertex}}},
      {"bridge", {{Sort::Vertex, Sort::Vertex}, {Sort::Vertex}}},
      {"separate", {{Sort::EdgeSet, Sort::EdgeSet}, {}}},
      {"planarize", {{Sort::Edge, Sort::Edge}, {Sort::Vertex}}},
  };
  auto it = registry.find(id);
  if (it == registry.end()) throw ParseError("unknown transform '" + id + "'");
  return it->second;
}

namespace {

// constraints on free variables, solved by fixpoint after the walk
struct SortConstraints {
  std::map<std::string, unsigned> candidates;  // bitmask over the four sorts

  static unsigned bit(Sort s) { return 1u << (int)s; }

  void touch(const std::string& n) { candidates.try_emplace(n, 0b1111); }
  void fix(const std::string& n, Sort s) {
    touch(n);
    candidates[n] &= bit(s);
  }
  struct Link { std::string a, b; bool elem_of; };  // same sort, or a = element sort of set b
  std::vector<Link> links;

  void same(const std::string& a, const std::string& b) {
    touch(a); touch(b);
    links.push_back({a, b, false});
  }
  void elem_of(const std::string& e, const std::string& s) {
    touch(e); touch(s);
    candidates[e] &= bit(Sort::Vertex) | bit(Sort::Edge);
    candidates[s] &= bit(Sort::VertexSet) | bit(Sort::EdgeSet);
    links.push_back({e, s, true});
  }

  std::map<std::string, Sort> solve() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Link& l : links) {
        unsigned& ca = candidates[l.a];
        unsigned& cb = candidates[l.b];
        unsigned na, nb;
        if (!l.elem_of) {
          na = ca & cb;
          nb = na;
        } else {
          unsigned from_b = ((cb >> (int)Sort::VertexSet) & 1 ? bit(Sort::Vertex) : 0) |
                            ((cb >> (int)Sort::EdgeSet) & 1 ? bit(Sort::Edge) : 0);
          unsigned from_a = ((ca >> (int)Sort::Vertex) & 1 ? bit(Sort::VertexSet) : 0) |
                            ((ca >> (int)Sort::Edge) & 1 ? bit(Sort::EdgeSet) : 0);
          na = ca & from_b;
          nb = cb & from_a;
        }
        if (na != ca || nb != cb) {
          ca = na;
          cb = nb;
          changed = true;
        }
      }
    }
    std::map<std::string, Sort> out;
    for (auto& [n, mask] : candidates) {
      if (mask == 0) throw ParseError("free variable '" + n + "' used with conflicting sorts");
      if (std::popcount(mask) != 1)
        throw ParseError("cannot infer the sort of free variable '" + n + "'");
      out[n] = (Sort)std::countr_zero(mask);
    }
    return out;
  }
};

void collect_free(const FormulaPtr& f, std::map<std::string, Sort>& env, SortConstraints& cs) {
  // returns the sort if bound, otherwise records n as free
  auto bound_sort = [&](const std::string& n) -> std::optional<Sort> {
    auto it = env.find(n);
    if (it != env.end()) return it->second;
    cs.touch(n);
    return std::nullopt;
  };
  auto use_fixed = [&](const std::string& n, Sort s) {
    auto b = bound_sort(n);
    if (b) {
      if (*b != s)
        throw ParseError("variable '" + n + "' used as " + sort_name(s) + " but bound as " +
                         sort_name(*b));
    } else {
      cs.fix(n, s);
    }
  };
  switch (f->kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      auto old = env.find(f->var);
      bool had = old != env.end();
      Sort prev = had ? old->second : Sort::Vertex;
      env[f->var] = f->sort;
      collect_free(f->children[0], env, cs);
      if (had) env[f->var] = prev;
      else env.erase(f->var);
      break;
    }
    case Formula::Kind::Not:
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      for (const FormulaPtr& c : f->children) collect_free(c, env, cs);
      break;
    case Formula::Kind::Equal: {
      auto s1 = bound_sort(f->var), s2 = bound_sort(f->var2);
      if (s1 && s2) {
        if (*s1 != *s2) throw ParseError("'=' applied to different sorts");
      } else if (s1) {
        cs.fix(f->var2, *s1);
      } else if (s2) {
        cs.fix(f->var, *s2);
      } else {
        cs.same(f->var, f->var2);
      }
      break;
    }
    case Formula::Kind::In: {
      auto se = bound_sort(f->var), ss = bound_sort(f->var2);
      if (ss && !is_set_sort(*ss)) throw ParseError("'in' needs a set on the right");
      if (se && is_set_sort(*se)) throw ParseError("'in' needs an element on the left");
      if (se && ss) {
        if (element_sort(*ss) != *se) throw ParseError("'in' sorts do not match");
      } else if (ss) {
        cs.fix(f->var, element_sort(*ss));
      } else if (se) {
        cs.fix(f->var2, *se == Sort::Vertex ? Sort::VertexSet : Sort::EdgeSet);
      } else {
        cs.elem_of(f->var, f->var2);
      }
      break;
    }
    case Formula::Kind::Inc:
      use_fixed(f->var, Sort::Edge);
      use_fixed(f->var2, Sort::Vertex);
      break;
    case Formula::Kind::Interpreted: {
      const TransformSignature& sig = transform_signature(f->transform_id);
      if (f->args.size() != sig.arg_sorts.size() || f->outs.size() != sig.out_sorts.size())
        throw ParseError("transform '" + f->transform_id + "' arity mismatch");
      for (size_t i = 0; i < f->args.size(); i++) use_fixed(f->args[i], sig.arg_sorts[i]);
      std::map<std::string, Sort> saved;
      std::vector<std::string> absent;
      for (size_t i = 0; i < f->outs.size(); i++) {
        auto it = env.find(f->outs[i]);
        if (it != env.end()) saved[f->outs[i]] = it->second;
        else absent.push_back(f->outs[i]);
        env[f->outs[i]] = sig.out_sorts[i];
      }
      collect_free(f->children[0], env, cs);
      for (auto& [k, v] : saved) env[k] = v;
      for (auto& k : absent) env.erase(k);
      break;
    }
  }
}

}  // namespace

std::map<std::string, Sort> free_variables(const FormulaPtr& f) {
  std::map<std::string, Sort> env;
  SortConstraints cs;
  collect_free(f, env, cs);
  return cs.solve();
}

void check_sorts(const FormulaPtr& f) { (void)free_variables(f); }

namespace {

const char* quant_token(Formula::Kind k, Sort s) {
  bool fa = k == Formula::Kind::Forall;
  switch (s) {
    case Sort::Vertex: return fa ? "forall-v" : "exists-v";
    case Sort::Edge: return fa ? "forall-e" : "exists-e";
    case Sort::VertexSet: return fa ? "forall-V" : "exists-V";
    case Sort::EdgeSet: return fa ? "forall-E" : "exists-E";
  }
  return "?";
}

void print_rec(const FormulaPtr& f, std::set<std::string>& bound, std::ostream& out) {
  auto name = [&](const std::string& v) { return bound.count(v) ? v : "!" + v; };
  switch (f->kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      out << "(" << quant_token(f->kind, f->sort) << " " << f->var << " ";
      bool had = bound.count(f->var);
      bound.insert(f->var);
      print_rec(f->children[0], bound, out);
      if (!had) bound.erase(f->var);
      out << ")";
      break;
    }
    case Formula::Kind::Not:
      out << "(not ";
      print_rec(f->children[0], bound, out);
      out << ")";
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      out << (f->kind == Formula::Kind::And ? "(and" : "(or");
      for (const FormulaPtr& c : f->children) {
        out << " ";
        print_rec(c, bound, out);
      }
      out << ")";
      break;
    case Formula::Kind::Implies:
      out << "(-> ";
      print_rec(f->children[0], bound, out);
      out << " ";
      print_rec(f->children[1], bound, out);
      out << ")";
      break;
    case Formula::Kind::Equal:
      out << "(= " << name(f->var) << " " << name(f->var2) << ")";
      break;
    case Formula::Kind::In:
      out << "(in " << name(f->var) << " " << name(f->var2) << ")";
      break;
    case Formula::Kind::Inc:
      out << "(inc " << name(f->var) << " " << name(f->var2) << ")";
      break;
    case Formula::Kind::Interpreted: {
      out << "(interpreted " << f->transform_id << " (";
      for (size_t i = 0; i < f->args.size(); i++) out << (i ? " " : "") << name(f->args[i]);
      out << ")";
      if (!f->outs.empty()) {
        out << " (";
        for (size_t i = 0; i < f->outs.size(); i++) out << (i ? " " : "") << f->outs[i];
        out << ")";
      }
      out << " ";
      std::vector<std::string> added;
      for (const std::string& o : f->outs)
        if (bound.insert(o).second) added.push_back(o);
      print_rec(f->children[0], bound, out);
      for (const std::string& o : added) bound.erase(o);
      out << ")";
      break;
    }
  }
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::ostringstream out;
  std::set<std::string> bound;
  print_rec(f, bound, out);
  return out.str();
}

namespace {

struct Relativizer {
  std::string vs;                   // vertex-set variable, empty for edge mode
  std::string es;                   // edge-set variable for edge mode
  std::vector<std::string> extra;   // extra vertex variables (vertex mode)
  int fresh = 0;

  std::string fresh_name(const std::string& base) {
    return "_r" + std::to_string(fresh++) + base;
  }

  // v is in the restricted vertex domain
  FormulaPtr vertex_dom(const std::string& v) {
    std::vector<FormulaPtr> opts = {f_in(v, vs)};
    for (const std::string& w : extra) opts.push_back(f_equal(v, w));
    return f_or(std::move(opts));
  }

  // both endpoints of e lie in the restricted vertex domain
  FormulaPtr edge_dom_vertex_mode(const std::string& e) {
    std::string u = fresh_name("u");
    return forall(Sort::Vertex, u, f_implies(f_inc(e, u), vertex_dom(u)));
  }

  FormulaPtr edge_dom(const std::string& e) {
    if (!es.empty()) return f_in(e, es);
    return edge_dom_vertex_mode(e);
  }

  bool restricts(Sort s) const {
    if (!es.empty()) return s == Sort::Edge || s == Sort::EdgeSet;
    return true;
  }

  FormulaPtr dom(Sort s, const std::string& v) {
    switch (s) {
      case Sort::Vertex: return vertex_dom(v);
      case Sort::Edge: return edge_dom(v);
      case Sort::VertexSet: {
        std::string u = fresh_name("u");
        return forall(Sort::Vertex, u, f_implies(f_in(u, v), vertex_dom(u)));
      }
      case Sort::EdgeSet: {
        std::string e = fresh_name("e");
        return forall(Sort::Edge, e, f_implies(f_in(e, v), edge_dom(e)));
      }
    }
    return f_true();
  }

  FormulaPtr walk(const FormulaPtr& f) {
    switch (f->kind) {
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        if (f->var == vs || f->var == es ||
            std::find(extra.begin(), extra.end(), f->var) != extra.end())
          throw Error("relativize: bound variable '" + f->var + "' captures a parameter");
        FormulaPtr body = walk(f->children[0]);
        if (!restricts(f->sort)) return quantifier(f->kind, f->sort, f->var, body);
        FormulaPtr guard = dom(f->sort, f->var);
        if (f->kind == Formula::Kind::Exists)
          return exists(f->sort, f->var, f_and({guard, body}));
        return forall(f->sort, f->var, f_implies(guard, body));
      }
      case Formula::Kind::Interpreted: {
        // the body speaks about the transformed graph; restriction applies
        // to the quantifiers inside it just the same
        auto r = std::make_shared<Formula>(*f);
        r->children = {walk(f->children[0])};
        return r;
      }
      default: {
        if (f->children.empty()) return f;
        auto r = std::make_shared<Formula>(*f);
        r->children.clear();
        for (const FormulaPtr& c : f->children) r->children.push_back(walk(c));
        return r;
      }
    }
  }
};

}  // namespace

FormulaPtr relativize(const FormulaPtr& f, const std::string& vs,
                      const std::vector<std::string>& extra) {
  Relativizer r;
  r.vs = vs;
  r.extra = extra;
  return r.walk(f);
}

FormulaPtr relativize_edges(const FormulaPtr& f, const std::string& es) {
  Relativizer r;
  r.es = es;
  return r.walk(f);
}

}  // namespace bookcross
