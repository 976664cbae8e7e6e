#include "plyforge/oneply.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace plyforge {

double compute_f(int delta, bool manhattan) {
  if (delta < 3) throw std::invalid_argument("compute_f: delta must be >= 3");
  if (manhattan) {
    if (delta != 4)
      throw std::invalid_argument("compute_f: manhattan requires delta == 4");
    return 0.5;
  }
  const double s = std::sin(std::numbers::pi / delta);
  return s / (1.0 + s);
}

double compute_alpha_max(int delta, bool manhattan) {
  if (manhattan) {
    compute_f(delta, true);  // parameter checks
    return 1.0 / 3.0;
  }
  const double f = compute_f(delta);
  const double theta = 2.0 * std::numbers::pi / delta;
  const double adjacent = f / (1.0 + f);
  const double ancestor =
      f * std::sqrt(1.0 - 2.0 * f * std::cos(theta) + f * f) -
      f * f * f / (1.0 - f);
  return std::min(adjacent, ancestor);
}

OnePlyParams OnePlyParams::make(int delta, bool manhattan,
                                std::optional<double> alpha) {
  OnePlyParams p;
  p.delta = delta;
  p.manhattan = manhattan;
  p.f = compute_f(delta, manhattan);
  p.theta = 2.0 * std::numbers::pi / delta;
  p.alpha = alpha.value_or(compute_alpha_max(delta, manhattan));
  return p;
}

Drawing layout_one_ply(const RootedTree& tree, const OnePlyParams& params,
                       double root_edge_length) {
  if (root_edge_length <= 0.0)
    throw std::invalid_argument("layout_one_ply: root_edge_length must be > 0");
  const int delta = params.delta;
  for (int v = 0; v < tree.size(); ++v) {
    if (tree.degree(v) > delta)
      throw std::invalid_argument("layout_one_ply: vertex " +
                                  std::to_string(v) + " has degree " +
                                  std::to_string(tree.degree(v)) +
                                  " > delta = " + std::to_string(delta));
  }

  Drawing d;
  d.alpha = params.alpha;
  d.positions.assign(tree.size(), Point{});
  const double theta = params.theta;

  struct Frame {
    int vertex;
    double incoming_angle;  // direction parent -> vertex
    double edge_length;     // length of the incoming edge
  };
  std::vector<Frame> stack;

  d.positions[tree.root] = {0.0, 0.0};
  // The root has no parent edge, so all delta wedges are available; its first
  // child sits at angle 0.
  {
    int i = 0;
    for (int c : tree.nodes[tree.root].children) {
      double ang = i * theta;
      d.positions[c] = {root_edge_length * std::cos(ang),
                        root_edge_length * std::sin(ang)};
      d.edges.emplace_back(tree.root, c);
      stack.push_back({c, ang, root_edge_length});
      ++i;
    }
  }

  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    const Point at = d.positions[fr.vertex];
    const double back = fr.incoming_angle + std::numbers::pi;  // toward parent
    const double len = fr.edge_length * params.f;
    int i = 1;  // wedge 0 holds the parent edge
    for (int c : tree.nodes[fr.vertex].children) {
      double ang = back + i * theta;
      d.positions[c] = {at.x + len * std::cos(ang), at.y + len * std::sin(ang)};
      d.edges.emplace_back(fr.vertex, c);
      stack.push_back({c, ang, len});
      ++i;
    }
  }
  return d;
}

}  // namespace plyforge
