#pragma once

#include <string>

#include "bookcross/drawing.hpp"

namespace bookcross {

// Render a book drawing as SVG: vertices on a horizontal spine in spine
// order, page-0 edges arced above, page-1 edges arced below.
std::string render_svg(const Graph& g, const BookDrawing& d);

}  // namespace bookcross
