#include <cctype>
#include <optional>
#include <set>
#include <vector>

#include "bookcross/formula.hpp"

namespace bookcross {

namespace {

/// parsed S-expression: either an atom or a list
struct Sexp {
  std::string atom;
  std::vector<Sexp> items;
  bool is_atom = false;
};

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> toks;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace((unsigned char)c)) {
      i++;
    } else if (c == '(' || c == ')') {
      toks.push_back(std::string(1, c));
      i++;
    } else {
      size_t j = i;
      while (j < text.size() && !std::isspace((unsigned char)text[j]) && text[j] != '(' &&
             text[j] != ')')
        j++;
      toks.push_back(text.substr(i, j - i));
      i = j;
    }
  }
  return toks;
}

Sexp parse_sexp(const std::vector<std::string>& toks, size_t& pos) {
  if (pos >= toks.size()) throw ParseError("unexpected end of formula text");
  Sexp s;
  if (toks[pos] == "(") {
    pos++;
    while (pos < toks.size() && toks[pos] != ")") s.items.push_back(parse_sexp(toks, pos));
    if (pos >= toks.size()) throw ParseError("missing ')'");
    pos++;
  } else if (toks[pos] == ")") {
    throw ParseError("unexpected ')'");
  } else {
    s.is_atom = true;
    s.atom = toks[pos++];
  }
  return s;
}

std::optional<Sort> quant_sort(const std::string& op, bool& is_forall) {
  is_forall = op.rfind("forall-", 0) == 0;
  bool is_exists = op.rfind("exists-", 0) == 0;
  if (!is_forall && !is_exists) return std::nullopt;
  std::string tail = op.substr(7);
  if (tail == "v") return Sort::Vertex;
  if (tail == "e") return Sort::Edge;
  if (tail == "V") return Sort::VertexSet;
  if (tail == "E") return Sort::EdgeSet;
  throw ParseError("unknown quantifier '" + op + "'");
}

struct Builder {
  std::set<std::string> bound;

  // an atom naming a variable: plain names must be bound, "!" names must not
  std::string var_name(const Sexp& s) {
    if (!s.is_atom) throw ParseError("expected a variable name");
    if (!s.atom.empty() && s.atom[0] == '!') {
      std::string name = s.atom.substr(1);
      if (name.empty()) throw ParseError("empty variable name after '!'");
      if (bound.count(name))
        throw ParseError("'!" + name + "' clashes with a bound variable of the same name");
      return name;
    }
    if (!bound.count(s.atom)) throw ParseError("unbound variable '" + s.atom + "'");
    return s.atom;
  }

  std::string binder_name(const Sexp& s) {
    if (!s.is_atom || s.atom.empty() || s.atom[0] == '!')
      throw ParseError("expected a binder name");
    return s.atom;
  }

  FormulaPtr build(const Sexp& s) {
    if (s.is_atom) throw ParseError("expected a formula, got '" + s.atom + "'");
    if (s.items.empty()) throw ParseError("empty '()' is not a formula");
    const Sexp& head = s.items[0];
    if (!head.is_atom) throw ParseError("operator position must be a name");
    const std::string& op = head.atom;
    size_t nargs = s.items.size() - 1;

    bool is_forall;
    if (auto qs = quant_sort(op, is_forall)) {
      if (nargs != 2) throw ParseError("'" + op + "' takes a variable and a body");
      std::string v = binder_name(s.items[1]);
      bool had = bound.count(v);
      bound.insert(v);
      FormulaPtr body = build(s.items[2]);
      if (!had) bound.erase(v);
      return quantifier(is_forall ? Formula::Kind::Forall : Formula::Kind::Exists, *qs, v, body);
    }
    if (op == "not") {
      if (nargs != 1) throw ParseError("'not' takes one formula");
      return f_not(build(s.items[1]));
    }
    if (op == "and" || op == "or") {
      std::vector<FormulaPtr> fs;
      for (size_t i = 1; i < s.items.size(); i++) fs.push_back(build(s.items[i]));
      return op == "and" ? f_and(std::move(fs)) : f_or(std::move(fs));
    }
    if (op == "->") {
      if (nargs != 2) throw ParseError("'->' takes two formulas");
      return f_implies(build(s.items[1]), build(s.items[2]));
    }
    if (op == "=" || op == "in" || op == "inc") {
      if (nargs != 2) throw ParseError("'" + op + "' takes two variables");
      std::string a = var_name(s.items[1]);
      std::string b = var_name(s.items[2]);
      if (op == "=") return f_equal(a, b);
      if (op == "in") return f_in(a, b);
      return f_inc(a, b);
    }
    if (op == "interpreted") {
      if (nargs != 3 && nargs != 4)
        throw ParseError("'interpreted' takes an id, arguments, optional outputs, and a body");
      if (!s.items[1].is_atom) throw ParseError("transform id must be a name");
      std::string id = s.items[1].atom;
      const TransformSignature& sig = transform_signature(id);
      if (s.items[2].is_atom) throw ParseError("transform arguments must be a list");
      std::vector<std::string> args;
      for (const Sexp& a : s.items[2].items) args.push_back(var_name(a));
      std::vector<std::string> outs;
      const Sexp* body_sexp;
      if (nargs == 4) {
        if (s.items[3].is_atom) throw ParseError("transform outputs must be a list");
        for (const Sexp& o : s.items[3].items) outs.push_back(binder_name(o));
        body_sexp = &s.items[4];
      } else {
        if (!sig.out_sorts.empty())
          throw ParseError("transform '" + id + "' needs an output list");
        body_sexp = &s.items[3];
      }
      std::vector<std::string> added;
      for (const std::string& o : outs)
        if (bound.insert(o).second) added.push_back(o);
      FormulaPtr body = build(*body_sexp);
      for (const std::string& o : added) bound.erase(o);
      return f_interpreted(id, args, outs, body);
    }
    throw ParseError("unknown operator '" + op + "'");
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  std::vector<std::string> toks = tokenize(text);
  size_t pos = 0;
  Sexp s = parse_sexp(toks, pos);
  if (pos != toks.size()) throw ParseError("trailing text after the formula");
  Builder b;
  FormulaPtr f = b.build(s);
  check_sorts(f);  // validates sort agreement and infers free-variable sorts
  return f;
}

}  // namespace bookcross
