#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "eulermerge/render.hpp"

namespace eulermerge {

struct SvgOptions {
  double width = 900.0;
  double height = 600.0;
  bool fill = true;        // translucent curve fills
  bool show_dual = false;  // draw the dual graph under the curves
  bool legend = true;
  // Display names of the original set labels, used by the legend.
  std::map<std::string, std::string, std::less<>> names;
};

// Stroke colors, assigned to curves in label order (cycling).
const std::array<std::string_view, 12>& palette();

// Standalone SVG 1.1 document: one closed <path> per curve, its label at the
// centroid of its largest ring, and a legend listing the original sets each
// curve stands for. Coordinates are printed with two decimals, so output is
// byte-for-byte reproducible.
std::string emit_svg(const Diagram& diagram, const SvgOptions& options = {});

// Sidecar document with zone positions and curve coordinates.
std::string diagram_to_json(const Diagram& diagram, int indent = 2);

}  // namespace eulermerge
