#include "bookcross/graph6.hpp"

#include <sstream>

namespace bookcross {

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw ParseError("graph6: empty input");
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("graph6: character out of range");
  if (s[0] == 126) throw ParseError("graph6: multi-byte vertex counts (n > 62) not supported");
  int n = s[0] - 63;
  size_t pos = 1;
  Graph g(n);
  int bits_needed = n * (n - 1) / 2;
  int have = 0;
  int cur = 0, curbits = 0;
  for (int j = 1; j < n; j++) {
    for (int i = 0; i < j; i++) {
      if (curbits == 0) {
        if (pos >= s.size()) throw ParseError("graph6: truncated bit vector");
        cur = s[pos++] - 63;
        curbits = 6;
      }
      if ((cur >> (curbits - 1)) & 1) g.add_edge(i, j);
      curbits--;
      have++;
    }
  }
  (void)bits_needed;
  if (pos != s.size()) throw ParseError("graph6: trailing characters");
  return g;
}

std::string emit_graph6(const Graph& g) {
  if (g.n() > 62) throw LimitError("graph6: n > 62 not supported");
  std::string out;
  out += char(g.n() + 63);
  int cur = 0, curbits = 0;
  for (int j = 1; j < g.n(); j++) {
    for (int i = 0; i < j; i++) {
      cur = (cur << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++curbits == 6) {
        out += char(cur + 63);
        cur = curbits = 0;
      }
    }
  }
  if (curbits > 0) out += char((cur << (6 - curbits)) + 63);
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> pairs;
  int header_n = -1, header_m = -1;
  auto parse_int = [](const std::string& tok) {
    size_t used = 0;
    int v;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("edge list: non-integer token '" + tok + "'");
    }
    if (used != tok.size() || v < 0)
      throw ParseError("edge list: non-integer token '" + tok + "'");
    return v;
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;  // blank line
    if (a[0] == '#') continue;
    if (!(ls >> b)) throw ParseError("edge list: expected two tokens per line");
    if (ls >> extra) throw ParseError("edge list: expected two tokens per line");
    pairs.push_back({parse_int(a), parse_int(b)});
  }
  // Header detection: first line "n m" where m equals the remaining line
  // count and every endpoint is < n.
  if (pairs.size() >= 1) {
    auto [hn, hm] = pairs[0];
    if ((int)pairs.size() - 1 == hm) {
      bool fits = true;
      for (size_t i = 1; i < pairs.size(); i++)
        if (pairs[i].first >= hn || pairs[i].second >= hn) fits = false;
      if (fits && hn > 0) {
        header_n = hn;
        header_m = hm;
      }
    }
  }
  std::vector<std::pair<int, int>> edges(pairs.begin() + (header_n >= 0 ? 1 : 0), pairs.end());
  int n = header_n;
  if (n < 0) {
    n = 0;
    for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  }
  (void)header_m;
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u == v) throw ParseError("edge list: self-loop " + std::to_string(u));
    if (g.edge_between(u, v)) throw ParseError("edge list: duplicate edge");
    g.add_edge(u, v);
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << " " << g.m() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

}  // namespace bookcross
