#include "plyforge/logply.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace plyforge {

std::vector<Point> layered_star_positions(const Point& center, double base,
                                          int child_count) {
  if (child_count < 1)
    throw std::invalid_argument("layered_star_positions: need children");
  if (base <= 0.0)
    throw std::invalid_argument("layered_star_positions: base must be > 0");
  std::vector<Point> out;
  out.reserve(child_count);
  double radius = base;
  for (int placed = 0; placed < child_count; radius *= 3.0) {
    int in_layer = std::min(6, child_count - placed);
    for (int j = 0; j < in_layer; ++j, ++placed) {
      double ang = j * (std::numbers::pi / 3.0);
      out.push_back({center.x + radius * std::cos(ang),
                     center.y + radius * std::sin(ang)});
    }
  }
  return out;
}

namespace {

void layout_layered_rec(const RootedTree& tree, int v, Point at, double base,
                        double shrink, Drawing& d) {
  d.positions[v] = at;
  const auto& children = tree.nodes[v].children;
  if (children.empty()) return;
  auto pts = layered_star_positions(at, base, static_cast<int>(children.size()));
  for (std::size_t i = 0; i < children.size(); ++i) {
    d.edges.emplace_back(v, children[i]);
    layout_layered_rec(tree, children[i], pts[i], base / shrink, shrink, d);
  }
}

}  // namespace

Drawing layout_layered(const RootedTree& tree, double base) {
  Drawing d;
  d.alpha = 0.5;
  d.positions.assign(tree.size(), Point{});
  const int delta = std::max(tree.max_degree(), 1);
  const double shrink = std::pow(3.0, std::ceil(delta / 6.0));
  layout_layered_rec(tree, tree.root, {0.0, 0.0}, base, shrink, d);
  return d;
}

double PathLayout::total_length() const {
  double total = 0.0;
  for (double l : lengths) total += l;
  return total;
}

bool PathLayout::is_two_drawing() const {
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i) {
    double ratio = lengths[i + 1] / lengths[i];
    if (ratio < 0.5 || ratio > 2.0) return false;
  }
  return true;
}

PathLayout draw_path(const std::vector<long long>& anchored_sizes) {
  const std::size_t k = anchored_sizes.size();
  if (k == 0) throw std::invalid_argument("draw_path: empty path");
  for (long long n : anchored_sizes)
    if (n < 0) throw std::invalid_argument("draw_path: negative subtree size");

  PathLayout out;
  out.anchored_sizes = anchored_sizes;
  out.anchored_total = static_cast<long long>(k);
  for (long long n : anchored_sizes) out.anchored_total += n;

  // Leaf path vertices may anchor nothing; substitute a minimum length of 1.
  auto& len = out.lengths;
  len.resize(k);
  len[0] = static_cast<double>(std::max<long long>(anchored_sizes[0], 1));
  for (std::size_t i = 1; i < k; ++i)
    len[i] = static_cast<double>(
        std::max<long long>(anchored_sizes[i - 1] + anchored_sizes[i], 1));

  // Visit edges in decreasing current length (ties by index ascending) and
  // raise both neighbors to at least half the visited length. A visited
  // edge's length is final: later visits are no longer, so their halves
  // cannot raise it further.
  std::vector<char> visited(k, 0);
  for (std::size_t round = 0; round < k; ++round) {
    std::size_t pick = k;
    for (std::size_t i = 0; i < k; ++i)
      if (!visited[i] && (pick == k || len[i] > len[pick])) pick = i;
    visited[pick] = 1;
    const double half = len[pick] / 2.0;
    if (pick > 0) len[pick - 1] = std::max(len[pick - 1], half);
    if (pick + 1 < k) len[pick + 1] = std::max(len[pick + 1], half);
  }
  return out;
}

std::vector<double> layer_offsets(long long n_i, int layer_count) {
  if (n_i < 1) throw std::invalid_argument("layer_offsets: n_i must be >= 1");
  std::vector<double> out;
  out.reserve(layer_count);
  double x = 0.0;
  for (int j = 0; j < layer_count; ++j) {
    x = 3.0 * x + 6.0 * static_cast<double>(n_i);
    out.push_back(x);
  }
  return out;
}

namespace {

struct Assembler {
  const RootedTree& tree;
  const HeavyPathDecomposition& hpd;
  double level_scale;  // 3^delta
  Drawing& d;

  // Anchored paths at a vertex, in child order.
  std::vector<std::vector<int>> anchored_paths_at;

  void place_path(int path_index, Point start, Point dir, double scale) {
    const auto& path = hpd.paths[path_index];
    std::vector<long long> sizes;
    sizes.reserve(path.size());
    for (int v : path) sizes.push_back(hpd.anchored_size[v]);
    PathLayout layout = draw_path(sizes);

    Point at = start;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i > 0) {
        at = at + dir * (layout.lengths[i] * scale);
        d.edges.emplace_back(path[i - 1], path[i]);
      }
      d.positions[path[i]] = at;

      const auto& anchored = anchored_paths_at[path[i]];
      if (anchored.empty()) continue;
      const long long n_i = hpd.anchored_size[path[i]];
      const auto offsets = layer_offsets(n_i, static_cast<int>(anchored.size()));
      const double child_scale = scale / level_scale;
      const Point perp{-dir.y, dir.x};
      for (std::size_t j = 0; j < anchored.size(); ++j) {
        // One anchored path per layer, perpendicular to this path and
        // alternating sides per layer index.
        const double side = (j % 2 == 0) ? 1.0 : -1.0;
        const Point qdir = perp * side;
        const Point qstart = at + qdir * (offsets[j] * child_scale);
        const int qpath = anchored[j];
        d.edges.emplace_back(path[i], hpd.paths[qpath].front());
        place_path(qpath, qstart, qdir, child_scale);
      }
    }
  }
};

}  // namespace

Drawing assemble_heavy_path_drawing(const RootedTree& tree) {
  std::string why;
  if (!tree.validate(&why))
    throw std::invalid_argument("assemble_heavy_path_drawing: " + why);
  Drawing d;
  d.alpha = 0.5;
  d.positions.assign(tree.size(), Point{});
  if (tree.size() == 1) return d;

  const auto hpd = heavy_path_decompose(tree);
  const int delta = tree.max_degree();
  const double level_scale = std::pow(3.0, delta);
  const double root_scale =
      std::pow(level_scale, static_cast<double>(hpd.total_height));
  if (!(root_scale < 1e300))
    throw std::runtime_error(
        "assemble_heavy_path_drawing: scale factor overflows double "
        "precision for this tree");

  // Anchored paths per vertex follow the stored child order.
  std::vector<std::vector<int>> anchored(tree.size());
  for (int v = 0; v < tree.size(); ++v) {
    for (int c : tree.nodes[v].children) {
      int cp = hpd.path_of[c];
      if (cp != hpd.path_of[v]) anchored[v].push_back(cp);
    }
  }

  Assembler a{tree, hpd, level_scale, d, std::move(anchored)};
  a.place_path(0, {0.0, 0.0}, {1.0, 0.0}, root_scale);
  return d;
}

AreaStats area_stats(const Drawing& d) {
  AreaStats s;
  if (d.edges.empty()) return s;
  double min_edge = std::numeric_limits<double>::infinity();
  double max_edge = 0.0;
  for (const auto& [a, b] : d.edges) {
    double len = dist(d.positions[a], d.positions[b]);
    min_edge = std::min(min_edge, len);
    max_edge = std::max(max_edge, len);
  }
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const auto& p : d.positions) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
    hi_x = std::max(hi_x, p.x);
    hi_y = std::max(hi_y, p.y);
  }
  s.edge_ratio = max_edge / min_edge;
  s.normalized_area = ((hi_x - lo_x) / min_edge) * ((hi_y - lo_y) / min_edge);
  return s;
}

}  // namespace plyforge
