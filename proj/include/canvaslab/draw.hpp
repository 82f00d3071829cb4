// Drawing export: barycentric (rubber-band) layout with the outer cycle on
// a regular polygon; SVG and DOT writers. Inspection output only.
#ifndef CANVASLAB_DRAW_HPP
#define CANVASLAB_DRAW_HPP

#include <string>

#include "canvaslab/canvas.hpp"

namespace canvaslab {

struct LayoutPoint {
  double x = 0, y = 0;
};

// Outer vertices on the unit circle, internal vertices at the average of
// their neighbors (solved as a linear system). Requires 2-connectivity.
std::vector<LayoutPoint> tutte_layout(const Canvas& t);

std::string svg_drawing(const Canvas& t, const std::string& name = "");
std::string dot_drawing(const Canvas& t, const std::string& name = "");

}  // namespace canvaslab

#endif
