#include "bookcross/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bookcross/drawing.hpp"

namespace bookcross {

namespace {

bool segments_cross(const CrossingDiagram& d, size_t i, size_t j) {
  if (!d.colors.empty() && d.colors[i] != d.colors[j]) return false;
  auto [a, b] = d.segments[i];
  auto [c, e] = d.segments[j];
  if (a == c || a == e || b == c || b == e) return false;
  return cyclically_interleaved(a, b, c, e, d.points);
}

std::string key_for_rotation(const CrossingDiagram& d, int r) {
  std::vector<std::tuple<int, int, int>> segs;
  for (size_t i = 0; i < d.segments.size(); i++) {
    int a = (d.segments[i].first - r + d.points) % d.points;
    int b = (d.segments[i].second - r + d.points) % d.points;
    if (a > b) std::swap(a, b);
    segs.push_back({a, b, d.colors.empty() ? 0 : d.colors[i]});
  }
  std::sort(segs.begin(), segs.end());
  std::ostringstream out;
  out << d.points << "|";
  for (auto [a, b, c] : segs) out << a << "-" << b << ":" << c << ",";
  return out.str();
}

}  // namespace

int CrossingDiagram::crossing_count() const {
  int k = 0;
  for (size_t i = 0; i < segments.size(); i++)
    for (size_t j = i + 1; j < segments.size(); j++)
      if (segments_cross(*this, i, j)) k++;
  return k;
}

bool CrossingDiagram::well_formed() const {
  std::vector<bool> covered(points, false);
  for (auto [a, b] : segments) {
    if (a < 0 || b < 0 || a >= points || b >= points || a >= b) return false;
    covered[a] = covered[b] = true;
  }
  for (int p = 0; p < points; p++)
    if (!covered[p]) return false;
  if (!colors.empty() && colors.size() != segments.size()) return false;
  for (size_t i = 0; i < segments.size(); i++) {
    bool crossed = false;
    for (size_t j = 0; j < segments.size() && !crossed; j++)
      if (j != i && segments_cross(*this, i, j)) crossed = true;
    if (!crossed) return false;
  }
  // segments must be pairwise distinct (as colored chords)
  std::vector<std::tuple<int, int, int>> all;
  for (size_t i = 0; i < segments.size(); i++)
    all.push_back({segments[i].first, segments[i].second, colors.empty() ? 0 : colors[i]});
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

std::string CrossingDiagram::canonical_key() const {
  if (points == 0) return "0|";
  std::string best = key_for_rotation(*this, 0);
  for (int r = 1; r < points; r++) best = std::min(best, key_for_rotation(*this, r));
  return best;
}

std::vector<CrossingDiagram> enumerate_crossing_diagrams(int k, int pages, bool exactly, int max_k) {
  if (k < 0 || k > max_k) throw LimitError("enumerate_crossing_diagrams: k over limit");
  if (pages != 1 && pages != 2) throw Error("enumerate_crossing_diagrams: pages must be 1 or 2");
  std::map<std::string, CrossingDiagram> found;

  CrossingDiagram empty;
  if (k == 0 || !exactly) found[empty.canonical_key()] = empty;

  int max_segments = 2 * k;
  for (int p = 1; p <= 4 * k; p++) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < p; a++)
      for (int b = a + 1; b < p; b++) pairs.push_back({a, b});
    int np = (int)pairs.size();
    for (int s = 1; s <= max_segments && s <= np; s++) {
      // enumerate s-subsets of pairs
      std::vector<int> idx(s);
      for (int i = 0; i < s; i++) idx[i] = i;
      while (true) {
        CrossingDiagram d;
        d.points = p;
        for (int i : idx) d.segments.push_back(pairs[i]);
        int colorings = pages == 2 ? (1 << s) : 1;
        for (int mask = 0; mask < colorings; mask++) {
          if (pages == 2) {
            d.colors.assign(s, 0);
            for (int i = 0; i < s; i++) d.colors[i] = (mask >> i) & 1;
          }
          int kk = d.crossing_count();
          bool count_ok = exactly ? kk == k : kk <= k;
          if (count_ok && d.well_formed()) {
            std::string key = d.canonical_key();
            if (!found.count(key)) found[key] = d;
          }
        }
        // advance the combination
        int i = s - 1;
        while (i >= 0 && idx[i] == np - s + i) i--;
        if (i < 0) break;
        idx[i]++;
        for (int j = i + 1; j < s; j++) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  std::vector<CrossingDiagram> out;
  for (auto& [key, d] : found) out.push_back(std::move(d));
  return out;
}

std::vector<CrossingDiagram> enumerate_relaxed_diagrams(int k, int max_k) {
  if (k < 0 || k > max_k) throw LimitError("enumerate_relaxed_diagrams: k over limit");
  std::map<std::string, CrossingDiagram> found;
  if (k == 0) {
    CrossingDiagram empty;
    found[empty.canonical_key()] = empty;
  }
  auto chords_cross = [](int a, int b, int c, int d, int p) {
    if (a == c || a == d || b == c || b == d) return false;
    return cyclically_interleaved(a, b, c, d, p);
  };
  for (const CrossingDiagram& base : enumerate_crossing_diagrams(k, 1, true, max_k)) {
    if (base.points == 0) continue;
    // chords absent from the base that cross none of its segments
    std::vector<std::pair<int, int>> cand;
    for (int a = 0; a < base.points; a++)
      for (int b = a + 1; b < base.points; b++) {
        if (std::find(base.segments.begin(), base.segments.end(), std::make_pair(a, b)) !=
            base.segments.end())
          continue;
        bool ok = true;
        for (auto [c, d] : base.segments)
          if (chords_cross(a, b, c, d, base.points)) ok = false;
        if (ok) cand.push_back({a, b});
      }
    // every mutually uncrossed subset of the candidates
    int nc = (int)cand.size();
    for (int mask = 0; mask < (1 << nc); mask++) {
      bool ok = true;
      for (int i = 0; i < nc && ok; i++)
        for (int j = i + 1; j < nc && ok; j++)
          if ((mask >> i & 1) && (mask >> j & 1) &&
              chords_cross(cand[i].first, cand[i].second, cand[j].first, cand[j].second,
                           base.points))
            ok = false;
      if (!ok) continue;
      CrossingDiagram d = base;
      for (int i = 0; i < nc; i++)
        if (mask >> i & 1) d.segments.push_back(cand[i]);
      std::string key = d.canonical_key();
      if (!found.count(key)) found[key] = std::move(d);
    }
  }
  std::vector<CrossingDiagram> out;
  for (auto& [key, d] : found) out.push_back(std::move(d));
  return out;
}

}  // namespace bookcross
