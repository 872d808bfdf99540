#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <unordered_map>

#include "bookcross/eval.hpp"

namespace bookcross {

// Rank-q evaluation by type dynamic programming over a nice tree
// decomposition.  The type of a processed substructure is the atomic facts
// over up to q quantifier parameters and the current bag slots, plus the set
// of types reachable by extending with one more quantified object.  Element
// parameters start as unresolved placeholders ("an object elsewhere") and
// are resolved when their object is introduced; set parameters track their
// restriction to the substructure.  At joins, extension options of the two
// sides are paired when consistent on the shared bag.  All types are
// hash-consed, so equivalent substructures collapse.

namespace {

constexpr int MAXP = 3;       // parameter bound = rank bound
constexpr uint8_t NOSLOT = 0xF;
constexpr uint8_t KV = 0, KE = 1, KVS = 2, KES = 3;  // param kinds

struct Overflow {};

struct Ty {
  uint8_t np = 0, nslots = 0;
  std::array<uint8_t, MAXP> kind{}, real{}, slot{};
  std::array<uint8_t, MAXP> eq{}, inc{}, incs{}, mem{}, mems{};
  std::vector<int> exts;

  std::string key() const {
    std::string s;
    s.reserve(2 + 7 * MAXP + 4 * exts.size());
    s.push_back((char)np);
    s.push_back((char)nslots);
    for (int i = 0; i < MAXP; i++) {
      s.push_back((char)kind[i]);
      s.push_back((char)real[i]);
      s.push_back((char)slot[i]);
      s.push_back((char)eq[i]);
      s.push_back((char)inc[i]);
      s.push_back((char)incs[i]);
      s.push_back((char)mem[i]);
      s.push_back((char)mems[i]);
    }
    for (int e : exts) s.append((const char*)&e, sizeof(int));
    return s;
  }
};

struct Engine {
  int q;
  size_t max_types;
  std::vector<Ty> types;
  std::unordered_map<std::string, int> interned;
  std::map<std::tuple<int, int, int>, int> memo_iv;
  std::map<std::tuple<int, int, int, int>, int> memo_ie;
  std::map<std::pair<int, int>, int> memo_forget;
  std::map<std::pair<int, int>, int> memo_join;

  int intern(Ty t) {
    std::string k = t.key();
    auto it = interned.find(k);
    if (it != interned.end()) return it->second;
    if (types.size() >= max_types) throw Overflow{};
    types.push_back(std::move(t));
    interned.emplace(std::move(k), (int)types.size() - 1);
    return (int)types.size() - 1;
  }

  static std::vector<int> dedup(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  // a fresh parameter with no facts: placeholder element or empty local set
  int extend_fresh(const Ty& base, uint8_t k) {
    Ty t = base;
    int i = t.np++;
    t.kind[i] = k;
    t.real[i] = k == KVS || k == KES;
    t.slot[i] = NOSLOT;
    t.eq[i] = t.inc[i] = t.incs[i] = t.mem[i] = t.mems[i] = 0;
    t.exts = fresh_exts(t);
    return intern(std::move(t));
  }
  std::vector<int> fresh_exts(const Ty& t) {
    if (t.np >= q) return {};
    std::vector<int> out;
    for (uint8_t k = 0; k < 4; k++) out.push_back(extend_fresh(t, k));
    return dedup(std::move(out));
  }

  int leaf_type() {
    Ty t;
    t.exts = fresh_exts(t);
    return intern(std::move(t));
  }

  // new bag vertex at slot `pos`; ctx bit i: resolve placeholder param i to
  // the vertex (vertex-element params) / the vertex joins the set (vertex-set
  // params)
  int intro_vertex(int tid, int pos, int ctx) {
    auto mk = std::make_tuple(tid, pos, ctx);
    auto mit = memo_iv.find(mk);
    if (mit != memo_iv.end()) return mit->second;
    Ty t = types[tid];
    Ty r = t;
    r.nslots = t.nslots + 1;
    uint8_t lowmask = (uint8_t)((1 << pos) - 1);
    auto shiftup = [&](uint8_t m) { return (uint8_t)((m & lowmask) | ((m & ~lowmask) << 1)); };
    for (int i = 0; i < t.np; i++) {
      r.incs[i] = shiftup(t.incs[i]);
      r.mems[i] = shiftup(t.mems[i]);
      if (t.slot[i] != NOSLOT && t.slot[i] >= pos) r.slot[i] = t.slot[i] + 1;
    }
    for (int i = 0; i < t.np; i++) {
      if (t.kind[i] == KV && ((ctx >> i) & 1)) {
        r.real[i] = 1;
        r.slot[i] = pos;
        for (int j = 0; j < t.np; j++)
          if (j != i && t.kind[j] == KV && ((ctx >> j) & 1)) {
            r.eq[i] |= uint8_t(1) << j;
            r.eq[j] |= uint8_t(1) << i;
          }
      }
      if (t.kind[i] == KVS && ((ctx >> i) & 1)) {
        r.mems[i] |= uint8_t(1) << pos;
        for (int j = 0; j < t.np; j++)
          if (t.kind[j] == KV && ((ctx >> j) & 1)) r.mem[i] |= uint8_t(1) << j;
      }
    }
    std::vector<int> ex;
    for (int c : t.exts) {
      // snapshot before recursing: intern() may reallocate `types`
      int i = types[c].np - 1;
      uint8_t ck = types[c].kind[i], cr = types[c].real[i];
      ex.push_back(intro_vertex(c, pos, ctx));
      if (ck == KVS || (ck == KV && !cr))
        ex.push_back(intro_vertex(c, pos, ctx | (1 << i)));
    }
    r.exts = dedup(std::move(ex));
    int id = intern(std::move(r));
    memo_iv[mk] = id;
    return id;
  }

  // new edge between slot vertices sa and sb; ctx bit i: resolve placeholder
  // param i to the edge / the edge joins the set (edge-set params)
  int intro_edge(int tid, int sa, int sb, int ctx) {
    auto mk = std::make_tuple(tid, sa * 16 + sb, ctx, 0);
    auto mit = memo_ie.find(mk);
    if (mit != memo_ie.end()) return mit->second;
    Ty t = types[tid];
    Ty r = t;
    for (int i = 0; i < t.np; i++) {
      if (t.kind[i] == KE && ((ctx >> i) & 1)) {
        r.real[i] = 1;
        r.incs[i] |= (uint8_t(1) << sa) | (uint8_t(1) << sb);
        for (int j = 0; j < t.np; j++) {
          if (t.kind[j] == KV && (t.slot[j] == sa || t.slot[j] == sb))
            r.inc[i] |= uint8_t(1) << j;
          if (j != i && t.kind[j] == KE && ((ctx >> j) & 1)) {
            r.eq[i] |= uint8_t(1) << j;
            r.eq[j] |= uint8_t(1) << i;
          }
        }
      }
      if (t.kind[i] == KES && ((ctx >> i) & 1))
        for (int j = 0; j < t.np; j++)
          if (t.kind[j] == KE && ((ctx >> j) & 1)) r.mem[i] |= uint8_t(1) << j;
    }
    std::vector<int> ex;
    for (int c : t.exts) {
      // snapshot before recursing: intern() may reallocate `types`
      int i = types[c].np - 1;
      uint8_t ck = types[c].kind[i], cr = types[c].real[i];
      ex.push_back(intro_edge(c, sa, sb, ctx));
      if (ck == KES || (ck == KE && !cr))
        ex.push_back(intro_edge(c, sa, sb, ctx | (1 << i)));
    }
    r.exts = dedup(std::move(ex));
    int id = intern(std::move(r));
    memo_ie[mk] = id;
    return id;
  }

  int forget(int tid, int pos) {
    auto mk = std::make_pair(tid, pos);
    auto mit = memo_forget.find(mk);
    if (mit != memo_forget.end()) return mit->second;
    Ty t = types[tid];
    Ty r = t;
    r.nslots = t.nslots - 1;
    uint8_t lowmask = (uint8_t)((1 << pos) - 1);
    auto shiftdown = [&](uint8_t m) {
      return (uint8_t)((m & lowmask) | ((m >> 1) & ~lowmask));
    };
    for (int i = 0; i < t.np; i++) {
      r.incs[i] = shiftdown(t.incs[i]);
      r.mems[i] = shiftdown(t.mems[i]);
      if (t.slot[i] == pos) r.slot[i] = NOSLOT;
      else if (t.slot[i] != NOSLOT && t.slot[i] > pos) r.slot[i] = t.slot[i] - 1;
    }
    std::vector<int> ex;
    for (int c : t.exts) ex.push_back(forget(c, pos));
    r.exts = dedup(std::move(ex));
    int id = intern(std::move(r));
    memo_forget[mk] = id;
    return id;
  }

  int join(int t1, int t2) {
    if (t1 > t2) std::swap(t1, t2);
    auto mk = std::make_pair(t1, t2);
    auto mit = memo_join.find(mk);
    if (mit != memo_join.end()) return mit->second;
    const Ty a = types[t1];
    const Ty b = types[t2];
    Ty r = a;
    for (int i = 0; i < a.np; i++) {
      r.real[i] = a.real[i] | b.real[i];
      r.slot[i] = a.slot[i] != NOSLOT ? a.slot[i] : b.slot[i];
      r.eq[i] = a.eq[i] | b.eq[i];
      r.inc[i] = a.inc[i] | b.inc[i];
      r.incs[i] = a.incs[i] | b.incs[i];
      r.mem[i] = a.mem[i] | b.mem[i];
      r.mems[i] = a.mems[i] | b.mems[i];
    }
    std::vector<int> ex;
    for (int c1 : a.exts)
      for (int c2 : b.exts) {
        const Ty& x = types[c1];
        const Ty& y = types[c2];
        int i = x.np - 1;
        if (x.kind[i] != y.kind[i]) continue;
        if (x.kind[i] == KV || x.kind[i] == KE) {
          // one side owns the object, or it sits on a shared bag slot
          if (x.slot[i] != y.slot[i]) continue;
          if (x.slot[i] == NOSLOT && x.real[i] && y.real[i]) continue;
        } else {
          // a set's restrictions must agree on the shared bag
          if (x.mems[i] != y.mems[i]) continue;
        }
        ex.push_back(join(c1, c2));
      }
    r.exts = dedup(std::move(ex));
    int id = intern(std::move(r));
    memo_join[mk] = id;
    return id;
  }
};

bool contains_interpreted(const FormulaPtr& f) {
  if (f->kind == Formula::Kind::Interpreted) return true;
  for (const FormulaPtr& c : f->children)
    if (contains_interpreted(c)) return true;
  return false;
}

int quantifier_rank(const FormulaPtr& f) {
  int sub = 0;
  for (const FormulaPtr& c : f->children) sub = std::max(sub, quantifier_rank(c));
  if (f->kind == Formula::Kind::Forall || f->kind == Formula::Kind::Exists) sub++;
  return sub;
}

uint8_t sort_kind(Sort s) {
  switch (s) {
    case Sort::Vertex: return KV;
    case Sort::Edge: return KE;
    case Sort::VertexSet: return KVS;
    case Sort::EdgeSet: return KES;
  }
  return KV;
}

bool eval_on_type(const Engine& eng, int tid, const FormulaPtr& f,
                  std::map<std::string, int>& bind) {
  const Ty& t = eng.types[tid];
  switch (f->kind) {
    case Formula::Kind::Not:
      return !eval_on_type(eng, tid, f->children[0], bind);
    case Formula::Kind::And:
      for (const FormulaPtr& c : f->children)
        if (!eval_on_type(eng, tid, c, bind)) return false;
      return true;
    case Formula::Kind::Or:
      for (const FormulaPtr& c : f->children)
        if (eval_on_type(eng, tid, c, bind)) return true;
      return false;
    case Formula::Kind::Implies:
      return !eval_on_type(eng, tid, f->children[0], bind) ||
             eval_on_type(eng, tid, f->children[1], bind);
    case Formula::Kind::Equal: {
      int i = bind.at(f->var), j = bind.at(f->var2);
      return i == j || ((t.eq[i] >> j) & 1);
    }
    case Formula::Kind::In:
      return (t.mem[bind.at(f->var2)] >> bind.at(f->var)) & 1;
    case Formula::Kind::Inc:
      return (t.inc[bind.at(f->var)] >> bind.at(f->var2)) & 1;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool exists_mode = f->kind == Formula::Kind::Exists;
      uint8_t k = sort_kind(f->sort);
      for (int c : t.exts) {
        const Ty& ch = eng.types[c];
        int i = ch.np - 1;
        if (ch.kind[i] != k) continue;
        if ((k == KV || k == KE) && !ch.real[i]) continue;  // no object elsewhere
        auto old = bind.find(f->var) != bind.end() ? std::optional<int>(bind[f->var])
                                                   : std::nullopt;
        bind[f->var] = i;
        bool r = eval_on_type(eng, c, f->children[0], bind);
        if (old) bind[f->var] = *old;
        else bind.erase(f->var);
        if (exists_mode && r) return true;
        if (!exists_mode && !r) return false;
      }
      return !exists_mode;
    }
    default:
      throw Error("eval_on_type: unsupported node");
  }
}

}  // namespace

CheckResult eval_courcelle(const Graph& g, const FormulaPtr& f, const NiceTreeDecomposition& td,
                           int max_rank) {
  if (contains_interpreted(f)) return CheckResult::Unsupported;
  if (max_rank > MAXP) max_rank = MAXP;
  if (quantifier_rank(f) > max_rank) return CheckResult::Unsupported;
  if (!free_variables(f).empty()) return CheckResult::Unsupported;
  if (g.n() == 0) return eval_naive(g, f) ? CheckResult::True : CheckResult::False;
  if (td.root < 0) return CheckResult::Unsupported;

  // each edge is materialized at exactly one introduce node covering it
  std::vector<std::vector<int>> node_edges(td.nodes.size());
  {
    std::vector<bool> placed(g.m(), false);
    for (size_t t = 0; t < td.nodes.size(); t++) {
      const NiceNode& nd = td.nodes[t];
      if (nd.kind != NiceNode::Kind::Introduce) continue;
      for (int e : g.incident_edges(nd.vertex)) {
        if (placed[e]) continue;
        if (nd.bag.test(g.other_end(e, nd.vertex))) {
          placed[e] = true;
          node_edges[t].push_back(e);
        }
      }
    }
    for (int e = 0; e < g.m(); e++)
      if (!placed[e]) return CheckResult::Unsupported;
  }

  try {
    Engine eng;
    eng.q = quantifier_rank(f);
    eng.max_types = 4000000;
    auto slot_of = [](const VertexSet& bag, int v) {
      int pos = 0;
      for (int u : bag.elements()) {
        if (u == v) return pos;
        pos++;
      }
      return -1;
    };
    std::map<int, int> done;
    std::function<int(int)> run = [&](int nid) -> int {
      auto it = done.find(nid);
      if (it != done.end()) return it->second;
      const NiceNode& nd = td.nodes[nid];
      int out;
      switch (nd.kind) {
        case NiceNode::Kind::Leaf:
          out = eng.leaf_type();
          break;
        case NiceNode::Kind::Introduce: {
          int c = run(nd.child);
          out = eng.intro_vertex(c, slot_of(nd.bag, nd.vertex), 0);
          for (int e : node_edges[nid])
            out = eng.intro_edge(out, slot_of(nd.bag, g.edge(e).u),
                                 slot_of(nd.bag, g.edge(e).v), 0);
          break;
        }
        case NiceNode::Kind::Forget: {
          int c = run(nd.child);
          out = eng.forget(c, slot_of(td.nodes[nd.child].bag, nd.vertex));
          break;
        }
        case NiceNode::Kind::Join:
          out = eng.join(run(nd.child), run(nd.child2));
          break;
        default:
          throw Error("bad nice node");
      }
      done[nid] = out;
      return out;
    };
    int root = run(td.root);
    std::map<std::string, int> bind;
    return eval_on_type(eng, root, f, bind) ? CheckResult::True : CheckResult::False;
  } catch (const Overflow&) {
    return CheckResult::Unsupported;
  }
}

CheckResult eval_courcelle(const Graph& g, const FormulaPtr& f, int max_rank, int max_width) {
  if (g.n() == 0) return eval_courcelle(g, f, NiceTreeDecomposition{}, max_rank);
  if (g.n() > 20) return CheckResult::Unsupported;
  auto [w, td] = treewidth_exact(g);
  if (w > max_width) return CheckResult::Unsupported;
  return eval_courcelle(g, f, make_nice(g, td), max_rank);
}

}  // namespace bookcross
