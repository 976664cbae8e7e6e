#ifndef PLYFORGE_SVG_HPP
#define PLYFORGE_SVG_HPP

#include <string>

#include "plyforge/geometry.hpp"

namespace plyforge {

struct RenderOptions {
  bool show_ply_disks = true;
  bool show_edges = true;
  bool highlight_overlaps = false;  // shade sampled cells with depth >= 2
  double stroke_width = 0.0;        // 0 = auto from drawing extent
  double canvas_size = 800.0;       // px of the longer side
};

// One circle per ply disk (if enabled), one line per edge, one dot per
// vertex; viewBox fits all disks with a 5% margin.
std::string render_svg(const Drawing& d, const RenderOptions& opts = {});

}  // namespace plyforge

#endif
