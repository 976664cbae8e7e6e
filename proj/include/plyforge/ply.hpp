#ifndef PLYFORGE_PLY_HPP
#define PLYFORGE_PLY_HPP

#include <cstddef>
#include <vector>

#include "plyforge/geometry.hpp"

namespace plyforge {

// Strict containment is tested as dist < r * (1 - kPlyTau); drawings produced
// by the layout algorithms are tangent-tight, so tangency must resolve to
// "disjoint". Intersection candidates are perturbed by kPlyDeltaRel times the
// larger of the two radii involved.
inline constexpr double kPlyTau = 1e-9;
inline constexpr double kPlyDeltaRel = 1e-6;

// One disk per vertex with at least one incident edge. Isolated vertices are
// reported separately (no disk).
struct PlyDiskSet {
  std::vector<PlyDisk> disks;
  std::vector<int> isolated;
};

PlyDiskSet ply_disks(const Drawing& d);

struct DepthResult {
  int count = 0;
  std::vector<int> covering;  // vertex ids of the containing disks
};

// Number of disks strictly containing q (open-disk semantics).
DepthResult depth_at(const Point& q, const std::vector<PlyDisk>& disks);

// Diagnostic: containment tested as dist <= r * (1 + kPlyTau). A gap between
// this and depth_at flags a tolerance-sensitive configuration.
int closed_depth_at(const Point& q, const std::vector<PlyDisk>& disks);

struct PlyResult {
  int ply = 0;
  Point witness;
  std::vector<int> covering;      // |covering| == ply
  int closed_ply = 0;             // closed-containment diagnostic at the witness
};

// Exact maximum depth of the open-disk arrangement. Candidates: disk centers
// plus all pairwise circle-circle intersection points, the latter perturbed
// along the sector bisectors of the two tangents (so every arrangement face
// meeting the point gets a sample). Deterministic: ties broken by lexicographically
// smallest witness. Honors PLYFORGE_THREADS for internal parallelism.
PlyResult ply_number_exact(const std::vector<PlyDisk>& disks);
PlyResult ply_number_exact(const Drawing& d);

// Grid-sampled maximum depth over the bounding box of all disks expanded by
// the largest radius. Lower-bounds the exact ply. Throws std::runtime_error
// when the grid exceeds cell_budget.
int ply_number_sampled(const std::vector<PlyDisk>& disks, double grid_step,
                       std::size_t cell_budget = 25'000'000);
int ply_number_sampled(const Drawing& d, double grid_step,
                       std::size_t cell_budget = 25'000'000);

// (sum of disk areas) / (area of the enclosing disk); a lower bound on the
// ply of the arrangement. Every disk must lie inside the enclosing disk.
double area_ratio_lower_bound(const std::vector<PlyDisk>& disks,
                              const Point& enclosing_center,
                              double enclosing_radius);

}  // namespace plyforge

#endif
