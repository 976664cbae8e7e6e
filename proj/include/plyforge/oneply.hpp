#ifndef PLYFORGE_ONEPLY_HPP
#define PLYFORGE_ONEPLY_HPP

#include <optional>

#include "plyforge/geometry.hpp"
#include "plyforge/tree.hpp"

namespace plyforge {

// Parameters of the fractal wedge layout. f is the per-level edge shrink
// ratio, theta the wedge angle 2*pi/delta, alpha the ply ratio used when the
// resulting drawing is measured.
struct OnePlyParams {
  int delta = 3;
  bool manhattan = false;  // delta == 4 refinement with axis-parallel edges
  double f = 0.0;
  double theta = 0.0;
  double alpha = 0.0;

  static OnePlyParams make(int delta, bool manhattan = false,
                           std::optional<double> alpha = std::nullopt);
};

// Edge shrink ratio sin(pi/delta) / (1 + sin(pi/delta)); 1/2 for the
// delta = 4 Manhattan refinement. Requires delta >= 3.
double compute_f(int delta, bool manhattan = false);

// Largest alpha for which the wedge layout is 1-ply:
// min( f/(1+f), f*sqrt(1 - 2 f cos(2 pi/delta) + f^2) - f^3/(1-f) ),
// or exactly 1/3 for the delta = 4 Manhattan refinement.
double compute_alpha_max(int delta, bool manhattan = false);

// Fractal wedge layout: root at the origin, children of each vertex at angle
// increments of 2*pi/delta (skipping the wedge holding the parent edge),
// child edges shrunk by f per level. The result has ply 1 at params.alpha.
Drawing layout_one_ply(const RootedTree& tree, const OnePlyParams& params,
                       double root_edge_length = 1.0);

}  // namespace plyforge

#endif
