#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bookcross/formula.hpp"

using namespace bookcross;

TEST_CASE("parsing infers the sorts of free variables") {
  FormulaPtr f = parse_formula("(exists-v u (inc !e u))");
  auto free = free_variables(f);
  REQUIRE(free.size() == 1);
  CHECK(free.at("e") == Sort::Edge);

  FormulaPtr g = parse_formula("(forall-v v (-> (in v !W) (exists-e e (in e !F))))");
  auto gf = free_variables(g);
  CHECK(gf.at("W") == Sort::VertexSet);
  CHECK(gf.at("F") == Sort::EdgeSet);

  // inference may need information from a later atom
  FormulaPtr h = parse_formula("(and (= !a !b) (inc !e !a))");
  auto hf = free_variables(h);
  CHECK(hf.at("a") == Sort::Vertex);
  CHECK(hf.at("b") == Sort::Vertex);
  CHECK(hf.at("e") == Sort::Edge);
}

TEST_CASE("sort errors are rejected") {
  // vertex on the left of 'in' forces a vertex set on the right
  CHECK_THROWS_AS(parse_formula("(exists-v u (exists-E F (in u F)))"), ParseError);
  CHECK_THROWS_AS(parse_formula("(exists-v u (exists-e e (= u e)))"), ParseError);
  CHECK_THROWS_AS(parse_formula("(exists-v u (exists-v v (inc u v)))"), ParseError);
  CHECK_THROWS_AS(parse_formula("(exists-V U (exists-V W (in U W)))"), ParseError);
  // a free variable used with two sorts
  CHECK_THROWS_AS(parse_formula("(and (inc !x !v) (inc !e !x))"), ParseError);
  // underdetermined free variables
  CHECK_THROWS_AS(parse_formula("(= !a !b)"), ParseError);
}

TEST_CASE("scoping errors are rejected") {
  CHECK_THROWS_AS(parse_formula("(inc e v)"), ParseError);  // unbound plain names
  CHECK_THROWS_AS(parse_formula("(exists-e e (inc !e !v))"), ParseError);  // shadow clash
  CHECK_THROWS_AS(parse_formula("(frobnicate !x)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(exists-v u (inc !e u)"), ParseError);  // missing ')'
  CHECK_THROWS_AS(parse_formula("(not (= !a !a)) junk"), ParseError);
  CHECK_THROWS_AS(parse_formula("()"), ParseError);
}

TEST_CASE("empty connectives parse and print as truth constants") {
  CHECK(equal_formulas(parse_formula("(and)"), f_true()));
  CHECK(equal_formulas(parse_formula("(or)"), f_false()));
  CHECK(print_formula(f_true()) == "(and)");
  CHECK(print_formula(f_false()) == "(or)");
}

TEST_CASE("interpreted nodes parse, bind their outputs, and round-trip") {
  std::string text =
      "(exists-v a (exists-v b (interpreted identify (a b) (w) (exists-e e (inc e w)))))";
  FormulaPtr f = parse_formula(text);
  CHECK(free_variables(f).empty());
  CHECK(print_formula(f) == text);

  // separate has no outputs, so the output list may be omitted
  FormulaPtr g = parse_formula("(exists-E A (exists-E B (interpreted separate (A B) (and))))");
  CHECK(print_formula(parse_formula(print_formula(g))) == print_formula(g));

  CHECK_THROWS_AS(parse_formula("(interpreted identify (!a) (w) (and))"), ParseError);
  CHECK_THROWS_AS(parse_formula("(interpreted planarize (!e !f) (and))"), ParseError);
  CHECK_THROWS_AS(parse_formula("(interpreted mangle (!a !b) (w) (and))"), ParseError);
}

namespace {

/// random well-scoped formula over a fixed pool of bindable names
FormulaPtr random_formula(std::mt19937& rng, int depth, std::vector<std::pair<std::string, Sort>>& scope) {
  auto pick_of_sort = [&](Sort s) -> std::string {
    std::vector<std::string> opts;
    for (auto& [n, ns] : scope)
      if (ns == s) opts.push_back(n);
    if (opts.empty()) return "";
    return opts[rng() % opts.size()];
  };
  if (depth == 0 || rng() % 4 == 0) {
    for (int attempt = 0; attempt < 8; attempt++) {
      switch (rng() % 3) {
        case 0: {
          std::string e = pick_of_sort(Sort::Edge), v = pick_of_sort(Sort::Vertex);
          if (!e.empty() && !v.empty()) return f_inc(e, v);
          break;
        }
        case 1: {
          Sort s = rng() % 2 ? Sort::Vertex : Sort::Edge;
          std::string a = pick_of_sort(s), b = pick_of_sort(s);
          if (!a.empty() && !b.empty()) return f_equal(a, b);
          break;
        }
        case 2: {
          Sort s = rng() % 2 ? Sort::Vertex : Sort::Edge;
          std::string a = pick_of_sort(s);
          std::string S = pick_of_sort(s == Sort::Vertex ? Sort::VertexSet : Sort::EdgeSet);
          if (!a.empty() && !S.empty()) return f_in(a, S);
          break;
        }
      }
    }
    return f_true();
  }
  switch (rng() % 5) {
    case 0: {
      Sort s = (Sort)(rng() % 4);
      std::string v = "q" + std::to_string(scope.size());
      scope.push_back({v, s});
      FormulaPtr body = random_formula(rng, depth - 1, scope);
      scope.pop_back();
      return quantifier(rng() % 2 ? Formula::Kind::Forall : Formula::Kind::Exists, s, v, body);
    }
    case 1:
      return f_not(random_formula(rng, depth - 1, scope));
    case 2:
    case 3: {
      std::vector<FormulaPtr> fs;
      int cnt = 1 + rng() % 3;
      for (int i = 0; i < cnt; i++) fs.push_back(random_formula(rng, depth - 1, scope));
      return rng() % 2 ? f_and(std::move(fs)) : f_or(std::move(fs));
    }
    default:
      return f_implies(random_formula(rng, depth - 1, scope),
                       random_formula(rng, depth - 1, scope));
  }
}

}  // namespace

TEST_CASE("print then parse is the identity on random formulas") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; trial++) {
    std::vector<std::pair<std::string, Sort>> scope;
    FormulaPtr f = random_formula(rng, 3, scope);
    std::string text = print_formula(f);
    FormulaPtr back;
    try {
      back = parse_formula(text);
    } catch (const ParseError&) {
      // closed random formulas never use free variables, so the only legal
      // failure is an unused truth-constant leaf; those are still parseable
      FAIL("failed to reparse: ", text);
      continue;
    }
    CHECK(equal_formulas(f, back));
    CHECK(print_formula(back) == text);
  }
}

TEST_CASE("relativization guards the quantifiers") {
  FormulaPtr ham = parse_formula(
      "(exists-v u (exists-e e (inc e u)))");
  FormulaPtr rel = relativize(ham, "W", {"w"});
  auto free = free_variables(rel);
  CHECK(free.at("W") == Sort::VertexSet);
  CHECK(free.at("w") == Sort::Vertex);
  // the original formula is untouched
  CHECK(free_variables(ham).empty());
  // guards appear in the printed form
  std::string text = print_formula(rel);
  CHECK(text.find("(in u !W)") != std::string::npos);
  CHECK(text.find("(= u !w)") != std::string::npos);

  FormulaPtr erel = relativize_edges(ham, "A");
  auto ef = free_variables(erel);
  CHECK(ef.at("A") == Sort::EdgeSet);
  CHECK(print_formula(erel).find("(in e !A)") != std::string::npos);

  // capture of the restriction variable is an error
  FormulaPtr clash = parse_formula("(exists-V W (exists-v u (in u W)))");
  CHECK_THROWS_AS(relativize(clash, "W", {}), Error);
}
