#include "plyforge/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "plyforge/ply.hpp"

namespace plyforge {

std::string render_svg(const Drawing& d, const RenderOptions& opts) {
  const auto disk_set = ply_disks(d);
  const auto& disks = disk_set.disks;

  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const auto& p : d.positions) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  for (const auto& disk : disks) {
    lo_x = std::min(lo_x, disk.center.x - disk.radius);
    lo_y = std::min(lo_y, disk.center.y - disk.radius);
    hi_x = std::max(hi_x, disk.center.x + disk.radius);
    hi_y = std::max(hi_y, disk.center.y + disk.radius);
  }
  if (!(hi_x > lo_x)) { lo_x -= 1.0; hi_x += 1.0; }
  if (!(hi_y > lo_y)) { lo_y -= 1.0; hi_y += 1.0; }
  const double margin = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y);
  lo_x -= margin; lo_y -= margin; hi_x += margin; hi_y += margin;
  const double w = hi_x - lo_x, h = hi_y - lo_y;
  const double extent = std::max(w, h);
  const double stroke =
      opts.stroke_width > 0.0 ? opts.stroke_width : extent / 600.0;
  const double dot = extent / 250.0;

  std::ostringstream svg;
  svg.precision(17);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << opts.canvas_size * w / extent << "\" height=\""
      << opts.canvas_size * h / extent << "\" viewBox=\"" << lo_x << " "
      << lo_y << " " << w << " " << h << "\">\n";
  // y grows downward in SVG; flip so the drawing keeps its orientation.
  svg << "<g transform=\"translate(0," << (lo_y + hi_y)
      << ") scale(1,-1)\">\n";

  if (opts.highlight_overlaps && !disks.empty()) {
    // Coarse sampling pass; purely a visual aid.
    const int cells = 160;
    const double sx = w / cells, sy = h / cells;
    svg << "<g fill=\"#e53935\" fill-opacity=\"0.35\" stroke=\"none\">\n";
    for (int i = 0; i < cells; ++i) {
      for (int j = 0; j < cells; ++j) {
        Point q{lo_x + (i + 0.5) * sx, lo_y + (j + 0.5) * sy};
        if (depth_at(q, disks).count >= 2)
          svg << "<rect x=\"" << lo_x + i * sx << "\" y=\"" << lo_y + j * sy
              << "\" width=\"" << sx << "\" height=\"" << sy << "\"/>\n";
      }
    }
    svg << "</g>\n";
  }

  if (opts.show_ply_disks) {
    svg << "<g fill=\"#1e88e5\" fill-opacity=\"0.15\" stroke=\"#1e88e5\" "
           "stroke-width=\"" << stroke << "\">\n";
    for (const auto& disk : disks)
      svg << "<circle cx=\"" << disk.center.x << "\" cy=\"" << disk.center.y
          << "\" r=\"" << disk.radius << "\"/>\n";
    svg << "</g>\n";
  }

  if (opts.show_edges) {
    svg << "<g stroke=\"#212121\" stroke-width=\"" << stroke << "\">\n";
    for (const auto& [a, b] : d.edges)
      svg << "<line x1=\"" << d.positions[a].x << "\" y1=\""
          << d.positions[a].y << "\" x2=\"" << d.positions[b].x << "\" y2=\""
          << d.positions[b].y << "\"/>\n";
    svg << "</g>\n";
  }

  svg << "<g fill=\"#212121\">\n";
  for (const auto& p : d.positions)
    svg << "<circle cx=\"" << p.x << "\" cy=\"" << p.y << "\" r=\"" << dot
        << "\"/>\n";
  svg << "</g>\n</g>\n</svg>\n";
  return svg.str();
}

}  // namespace plyforge
