#include "bookcross/svg.hpp"

#include <sstream>
#include <vector>

namespace bookcross {

std::string render_svg(const Graph& g, const BookDrawing& d) {
  (void)crossings(g, d);  // validate the drawing
  const int step = 60, margin = 50;
  int n = g.n();
  int width = 2 * margin + step * std::max(0, n - 1);
  int mid = 200, height = 400;
  std::vector<int> pos(n);
  for (int i = 0; i < n; i++) pos[d.spine[i]] = i;
  auto x_of = [&](int v) { return margin + step * pos[v]; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "  <line x1=\"" << margin - 20 << "\" y1=\"" << mid << "\" x2=\"" << width - margin + 20
      << "\" y2=\"" << mid << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  for (int e = 0; e < g.m(); e++) {
    int x1 = x_of(g.edge(e).u), x2 = x_of(g.edge(e).v);
    if (x1 > x2) std::swap(x1, x2);
    double r = (x2 - x1) / 2.0;
    int sweep = d.pages[e] == 0 ? 1 : 0;  // page 0 above the spine, page 1 below
    const char* color = d.pages[e] == 0 ? "#1f77b4" : "#d62728";
    out << "  <path d=\"M " << x1 << " " << mid << " A " << r << " " << r << " 0 0 " << sweep
        << " " << x2 << " " << mid << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
  }
  for (int i = 0; i < n; i++) {
    int v = d.spine[i];
    int x = margin + step * i;
    out << "  <circle cx=\"" << x << "\" cy=\"" << mid << "\" r=\"5\" fill=\"#000\"/>\n";
    out << "  <text x=\"" << x << "\" y=\"" << mid + 22
        << "\" font-size=\"13\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace bookcross
