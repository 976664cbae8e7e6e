#ifndef PLYFORGE_LOGPLY_HPP
#define PLYFORGE_LOGPLY_HPP

#include <vector>

#include "plyforge/geometry.hpp"
#include "plyforge/tree.hpp"

namespace plyforge {

// Radial star placement at alpha = 0.5: up to six children per layer at 60
// degree spacing, layer i at radius base * 3^(i-1). Disks of distinct layers
// are disjoint (3x separation) and same-layer disks are tangent.
std::vector<Point> layered_star_positions(const Point& center, double base,
                                          int child_count);

// Recursive layered drawing for (roughly) balanced trees; every level shrinks
// the innermost layer radius by 3^ceil(delta/6).
Drawing layout_layered(const RootedTree& tree, double base = 1.0);

// Edge lengths of one heavy path drawn on a segment. lengths[0] is the
// distance from the anchor to the first path vertex.
struct PathLayout {
  std::vector<long long> anchored_sizes;  // n_i per path vertex
  std::vector<double> lengths;            // size k: anchor edge + k-1 path edges
  long long anchored_total = 0;           // n = sum n_i + k

  double total_length() const;
  bool is_two_drawing() const;  // consecutive length ratios within [1/2, 2]
};

// DrawPath: initial lengths l(v,v1) = max(n_1,1),
// l(v_i,v_{i+1}) = max(n_i + n_{i+1}, 1); edges then visited in decreasing
// length (ties by index) raising both neighbors to at least half the visited
// length. Guarantees a 2-drawing with total length <= 6n.
PathLayout draw_path(const std::vector<long long>& anchored_sizes);

// Radial offsets x_j = 3 n_i (3^j - 1) for the layers of paths anchored at a
// vertex with anchored subtree size n_i; x_{j+1} >= 3 x_j.
std::vector<double> layer_offsets(long long n_i, int layer_count);

// Bottom-up heavy-path drawing at alpha = 0.5: each decomposition path drawn
// via draw_path, anchored paths placed in separate layers perpendicular to
// their parent path, each level scaled up by 3^delta. Measured ply is at most
// 3(H+1) for decomposition height H.
Drawing assemble_heavy_path_drawing(const RootedTree& tree);

struct AreaStats {
  double edge_ratio = 1.0;       // max edge length / min edge length
  double normalized_area = 0.0;  // bounding-box area with min edge = 1
};

AreaStats area_stats(const Drawing& d);

}  // namespace plyforge

#endif
