#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bookcross/builders.hpp"
#include "bookcross/diagram.hpp"
#include "bookcross/drawing.hpp"
#include "bookcross/eval.hpp"
#include "bookcross/graph6.hpp"
#include "bookcross/pagechar.hpp"
#include "bookcross/svg.hpp"
#include "bookcross/treewidth.hpp"
#include "bookcross/verify.hpp"

using namespace bookcross;

namespace {

constexpr int kExitFalse = 1;   // decision came out negative under --strict
constexpr int kExitUsage = 2;   // bad arguments or unreadable input
constexpr int kExitBudget = 3;  // evaluation budget exhausted

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

// format "auto": multi-line or space-containing input reads as an edge list
Graph read_graph(const std::string& path, const std::string& format) {
  std::string text = slurp(path);
  std::string fmt = format;
  if (fmt == "auto") {
    std::string body = text;
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
    fmt = (body.find(' ') != std::string::npos || body.find('\n') != std::string::npos)
              ? "edgelist"
              : "graph6";
  }
  if (fmt == "graph6") return parse_graph6(text);
  if (fmt == "edgelist") return parse_edge_list(text);
  throw CLI::ValidationError("--format", "expected graph6 or edgelist");
}

std::string diagram_line(const CrossingDiagram& d) {
  std::string s = "points=" + std::to_string(d.points) + " segments=";
  for (size_t i = 0; i < d.segments.size(); i++) {
    if (i) s += ",";
    s += std::to_string(d.segments[i].first) + "-" + std::to_string(d.segments[i].second);
    if (!d.colors.empty()) s += ":" + std::to_string(d.colors[i]);
  }
  if (d.segments.empty()) s += "none";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bookcross: 1- and 2-page book drawing toolkit"};
  app.require_subcommand(1);

  std::string input = "-", format = "auto", out_path, formula_path, formula_name, suite;
  bool strict = false, relaxed = false;
  int max_n = 11, max_k = 2, rank = 3, pages = 1, diag_k = 1;
  long long budget_ms = -1;

  auto add_graph_opts = [&](CLI::App* cmd, bool with_out) {
    cmd->add_option("input", input, "graph file, or - for stdin")->required();
    cmd->add_option("--format", format, "graph6|edgelist (default: auto-detect)");
    cmd->add_option("--max-n", max_n, "vertex-count guard for exact solvers");
    if (with_out) cmd->add_option("--out", out_path, "witness / output file");
  };

  CLI::App* c_cr1 = app.add_subcommand("cr1", "exact 1-page crossing number");
  add_graph_opts(c_cr1, true);
  CLI::App* c_cr2 = app.add_subcommand("cr2", "exact 2-page crossing number");
  add_graph_opts(c_cr2, true);
  CLI::App* c_p2 = app.add_subcommand("planar2", "2-page planarity (subhamiltonicity)");
  add_graph_opts(c_p2, false);
  c_p2->add_flag("--strict", strict, "exit 1 when the answer is no");
  CLI::App* c_op = app.add_subcommand("outerplanar", "outerplanarity");
  add_graph_opts(c_op, false);
  c_op->add_flag("--strict", strict, "exit 1 when the answer is no");
  CLI::App* c_tw = app.add_subcommand("treewidth", "exact treewidth");
  add_graph_opts(c_tw, true);

  CLI::App* c_mso = app.add_subcommand("mso-check", "evaluate an MSO2 formula on a graph");
  add_graph_opts(c_mso, false);
  c_mso->add_option("--formula", formula_path, "formula file (S-expression syntax)")
      ->required();
  c_mso->add_option("--rank", rank, "quantifier-rank cap for the tree-automaton engine");
  c_mso->add_option("--budget-ms", budget_ms, "time budget; exceeded -> exit 3");
  c_mso->add_flag("--strict", strict, "exit 1 when the formula is false");

  CLI::App* c_f = app.add_subcommand("formula", "emit a named builder formula");
  c_f->add_option("--name", formula_name,
                  "registry name, or onepage-<k> / twopage / zeta-<k>")
      ->required();
  c_f->add_option("--max-k", max_k, "diagram bound for the onepage/zeta families");
  c_f->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* c_d = app.add_subcommand("diagrams", "enumerate canonical crossing diagrams");
  c_d->add_option("--k", diag_k, "crossing count")->required();
  c_d->add_option("--pages", pages, "1 or 2");
  c_d->add_flag("--relaxed", relaxed, "include mutually uncrossed extra chords (1-page)");

  CLI::App* c_v = app.add_subcommand("verify", "run a named acceptance suite");
  c_v->add_option("suite", suite, "suite name, or: all, list")->required();

  CLI::App* c_r = app.add_subcommand("render", "render an optimal drawing as SVG");
  add_graph_opts(c_r, true);
  c_r->add_option("--pages", pages, "1 or 2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c_cr1 || *c_cr2) {
      Graph g = read_graph(input, format);
      auto [k, wit] = *c_cr1 ? cr1_exact(g, max_n) : cr2_exact(g, max_n);
      std::printf("k=%d\n", k);
      if (!out_path.empty()) spill(out_path, emit_drawing(wit));
      return 0;
    }
    if (*c_p2 || *c_op) {
      Graph g = read_graph(input, format);
      bool yes = *c_p2 ? is_2page_planar(g) : is_outerplanar(g);
      std::printf("%s\n", yes ? "yes" : "no");
      return !yes && strict ? kExitFalse : 0;
    }
    if (*c_tw) {
      Graph g = read_graph(input, format);
      auto [w, td] = treewidth_exact(g, 20);
      std::printf("width=%d\n", w);
      if (!out_path.empty()) spill(out_path, emit_decomposition(td));
      return 0;
    }
    if (*c_mso) {
      Graph g = read_graph(input, format);
      FormulaPtr f = parse_formula(slurp(formula_path));
      CheckResult r = eval_courcelle(g, f, rank);
      if (r != CheckResult::Unsupported) {
        std::printf("%s\nengine=courcelle\n", r == CheckResult::True ? "true" : "false");
        return r == CheckResult::False && strict ? kExitFalse : 0;
      }
      if (!free_variables(f).empty()) {
        std::printf("unsupported\nengine=none\n");
        return 0;
      }
      EvalBudget budget;
      // the naive engine counts quantifier expansions; convert the wall-time
      // budget at a fixed nominal rate so runs stay deterministic
      if (budget_ms >= 0) budget.max_steps = budget_ms * 10000;
      try {
        bool v = eval_naive(g, f, {}, budget);
        std::printf("%s\nengine=naive\n", v ? "true" : "false");
        return !v && strict ? kExitFalse : 0;
      } catch (const BudgetError&) {
        std::printf("budget exceeded\n");
        return kExitBudget;
      }
    }
    if (*c_f) {
      FormulaPtr f;
      if (formula_name == "twopage") f = build_twopage();
      else if (formula_name.rfind("onepage-", 0) == 0)
        f = build_onepage(std::stoi(formula_name.substr(8)), max_k);
      else if (formula_name.rfind("zeta-", 0) == 0)
        f = build_zeta(std::stoi(formula_name.substr(5)), std::min(max_k, 1));
      else f = build_basic(formula_name);
      std::string text = print_formula(f) + "\n";
      if (out_path.empty()) std::fputs(text.c_str(), stdout);
      else spill(out_path, text);
      return 0;
    }
    if (*c_d) {
      std::vector<CrossingDiagram> ds = relaxed ? enumerate_relaxed_diagrams(diag_k)
                                                : enumerate_crossing_diagrams(diag_k, pages);
      std::sort(ds.begin(), ds.end(), [](const CrossingDiagram& a, const CrossingDiagram& b) {
        return a.canonical_key() < b.canonical_key();
      });
      std::printf("count=%zu\n", ds.size());
      for (const CrossingDiagram& d : ds) std::printf("%s\n", diagram_line(d).c_str());
      return 0;
    }
    if (*c_v) {
      if (suite == "list") {
        for (const std::string& name : verify_suite_names()) std::printf("%s\n", name.c_str());
        return 0;
      }
      std::vector<std::string> names =
          suite == "all" ? verify_suite_names() : std::vector<std::string>{suite};
      bool all_ok = true;
      std::printf("%-18s %8s %10s %8s  %s\n", "suite", "checked", "mismatches", "time", "verdict");
      for (const std::string& name : names) {
        SuiteResult r = run_verify_suite(name);
        std::printf("%-18s %8lld %10lld %7.1fs  %s\n", r.name.c_str(), r.checked, r.mismatches,
                    r.seconds, r.passed ? "pass" : "FAIL");
        for (const std::string& line : r.lines) std::printf("  %s\n", line.c_str());
        all_ok = all_ok && r.passed;
        std::fflush(stdout);
      }
      return all_ok ? 0 : kExitFalse;
    }
    if (*c_r) {
      Graph g = read_graph(input, format);
      auto [k, wit] = pages >= 2 ? cr2_exact(g, max_n) : cr1_exact(g, max_n);
      std::printf("k=%d\n", k);
      std::string svg = render_svg(g, wit);
      if (out_path.empty()) std::fputs(svg.c_str(), stdout);
      else spill(out_path, svg);
      return 0;
    }
  } catch (const BudgetError&) {
    std::fprintf(stderr, "budget exceeded\n");
    return kExitBudget;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kExitUsage;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
