#include "plyforge/lowerbound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "plyforge/ply.hpp"

namespace plyforge {

LowerBoundInstance build_instance_hm(int h, int m) {
  if (h < 1 || m < 1)
    throw std::invalid_argument("build_instance: need h >= 1 and m >= 1");
  LowerBoundInstance inst;
  inst.h = h;
  inst.m = m;
  const long long per_tree = (1LL << (h + 1)) - 1;
  inst.vertex_count = static_cast<int>(m * per_tree + 1);
  inst.apex = 0;
  inst.tree_index_of.assign(inst.vertex_count, -1);
  inst.level_of.assign(inst.vertex_count, -1);
  inst.tree_parent_of.assign(inst.vertex_count, -1);

  // Tree i is stored in heap order: local index t has parent (t-1)/2 and
  // level floor(log2(t+1)).
  auto global_id = [&](int tree, long long t) {
    return static_cast<int>(1 + tree * per_tree + t);
  };
  for (int i = 0; i < m; ++i) {
    inst.tree_roots.push_back(global_id(i, 0));
    for (long long t = 0; t < per_tree; ++t) {
      int v = global_id(i, t);
      inst.tree_index_of[v] = i;
      inst.level_of[v] = static_cast<int>(std::floor(std::log2(t + 1.0) + 1e-12));
      if (t > 0) inst.tree_parent_of[v] = global_id(i, (t - 1) / 2);
    }
  }

  // 2-tree construction: edge (apex, r_0); every later root attaches to
  // {apex, r_0}; every non-root tree vertex attaches to {apex, tree parent}.
  TwoTree& g = inst.graph;
  g.vertex_count = inst.vertex_count;
  g.base_edge = {inst.apex, inst.tree_roots[0]};
  for (int i = 1; i < m; ++i)
    g.order.push_back({inst.tree_roots[i], inst.apex, inst.tree_roots[0]});
  for (int i = 0; i < m; ++i)
    for (long long t = 1; t < per_tree; ++t)
      g.order.push_back(
          {global_id(i, t), inst.apex, global_id(i, (t - 1) / 2)});
  return inst;
}

LowerBoundInstance build_instance(long long n_target) {
  if (n_target < 16)
    throw std::invalid_argument("build_instance: n_target must be >= 16");
  const double log_n = std::log2(static_cast<double>(n_target));
  const int h = static_cast<int>(std::ceil((log_n + std::log2(log_n)) / 2.0));
  const int m = static_cast<int>(
      std::ceil(std::sqrt(static_cast<double>(n_target) / log_n)));
  auto inst = build_instance_hm(h, m);
  inst.n_target = n_target;
  return inst;
}

bool lemma5_check(const Drawing& d, int v, int w1, int w2) {
  const double c = 1.0 + 1.0 / d.alpha;
  return dist(d.positions[v], d.positions[w1]) >
         c * dist(d.positions[v], d.positions[w2]);
}

namespace {

std::vector<char> tree_cover_flags(const Drawing& d,
                                   const LowerBoundInstance& inst,
                                   const std::vector<PlyDisk>& disks) {
  std::vector<char> covered(inst.m, 0);
  const Point apex = d.positions[inst.apex];
  for (const auto& disk : disks) {
    int t = inst.tree_index_of[disk.vertex];
    if (t < 0 || covered[t]) continue;
    double rr = disk.radius * (1.0 - kPlyTau);
    if (dist2(disk.center, apex) < rr * rr) covered[t] = 1;
  }
  return covered;
}

}  // namespace

Certificate certify_lower_bound(const Drawing& d,
                                const LowerBoundInstance& inst) {
  if (d.vertex_count() != inst.vertex_count)
    throw std::invalid_argument(
        "certify_lower_bound: drawing has " + std::to_string(d.vertex_count()) +
        " vertices, instance has " + std::to_string(inst.vertex_count));
  const double alpha = d.alpha;
  const auto disk_set = ply_disks(d);
  const auto& disks = disk_set.disks;
  const Point apex = d.positions[inst.apex];

  const auto covered = tree_cover_flags(d, inst, disks);
  Certificate cert;
  cert.covering_trees =
      static_cast<int>(std::count(covered.begin(), covered.end(), 1));
  cert.bound = cert.covering_trees;
  cert.kind = Certificate::Case::apex_cover;

  const double c = 1.0 + 1.0 / alpha;
  const double log_c = std::log(c);
  for (int t = 0; t < inst.m; ++t) {
    if (covered[t]) continue;
    const double unit = dist(apex, d.positions[inst.tree_roots[t]]);
    if (unit <= 0.0) continue;  // root coincides with apex; its disk covers it

    // Count tree vertices per annulus [c^l, c^{l+1}) after normalization.
    const int h = inst.h;
    std::vector<int> count(2 * h, 0);
    for (int v = 0; v < inst.vertex_count; ++v) {
      if (inst.tree_index_of[v] != t) continue;
      double u = dist(apex, d.positions[v]) / unit;
      if (u <= 0.0) continue;
      int l = static_cast<int>(std::floor(std::log(u) / log_c));
      if (l < -h || l > h - 1) continue;  // outside the analysis window
      ++count[l + h];
    }
    int best_l = -h;
    for (int l = -h; l <= h - 1; ++l)
      if (count[l + h] > count[best_l + h]) best_l = l;
    if (count[best_l + h] == 0) continue;

    const double r_D = (alpha + 1.0) * std::pow(c, best_l + 1) * unit;
    const double inner = std::pow(c, best_l) * unit;
    const double outer = std::pow(c, best_l + 1) * unit;

    // Sum the areas of ply disks of S_{l-bar} vertices fully inside D;
    // excluding the rest keeps the average-depth argument sound.
    std::vector<PlyDisk> inside;
    for (const auto& disk : disks) {
      if (inst.tree_index_of[disk.vertex] != t) continue;
      double u = dist(apex, disk.center);
      if (u < inner || u >= outer) continue;
      if (u + disk.radius > r_D * (1.0 + kPlyTau)) continue;
      inside.push_back(disk);
    }
    if (inside.empty()) continue;
    double ratio = area_ratio_lower_bound(inside, apex, r_D);
    if (ratio > cert.bound) {
      cert.bound = ratio;
      cert.kind = Certificate::Case::annulus;
      cert.tree_index = t;
      cert.best_annulus = best_l;
    }
  }
  return cert;
}

std::vector<int> distance_induction_violations(const Drawing& d,
                                               const LowerBoundInstance& inst,
                                               int tree_index) {
  if (tree_index < 0 || tree_index >= inst.m)
    throw std::invalid_argument("distance_induction_violations: bad tree index");
  const Point apex = d.positions[inst.apex];
  const double unit = dist(apex, d.positions[inst.tree_roots[tree_index]]);
  const double c = 1.0 + 1.0 / d.alpha;
  std::vector<int> violations;
  if (unit <= 0.0) return violations;
  for (int v = 0; v < inst.vertex_count; ++v) {
    if (inst.tree_index_of[v] != tree_index) continue;
    int j = inst.level_of[v];
    double u = dist(apex, d.positions[v]) / unit;
    if (u < std::pow(c, -j) * (1.0 - kPlyTau) ||
        u > std::pow(c, j) * (1.0 + kPlyTau))
      violations.push_back(v);
  }
  return violations;
}

}  // namespace plyforge
