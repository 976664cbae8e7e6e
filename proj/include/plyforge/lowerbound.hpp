#ifndef PLYFORGE_LOWERBOUND_HPP
#define PLYFORGE_LOWERBOUND_HPP

#include <vector>

#include "plyforge/geometry.hpp"
#include "plyforge/tree.hpp"

namespace plyforge {

// m complete binary trees of height h plus an apex adjacent to every tree
// vertex, realized as a 2-tree. Vertex 0 is the apex; tree i occupies the
// contiguous id range [1 + i*(2^(h+1)-1), ...) in heap order.
struct LowerBoundInstance {
  long long n_target = 0;
  int h = 0;
  int m = 0;
  int apex = 0;
  int vertex_count = 0;
  std::vector<int> tree_roots;
  std::vector<int> tree_index_of;   // per vertex; -1 for the apex
  std::vector<int> level_of;        // depth within its tree; -1 for the apex
  std::vector<int> tree_parent_of;  // parent within its tree; -1 for roots/apex
  TwoTree graph;

  std::vector<std::pair<int, int>> edges() const { return graph.edges(); }
};

// h = ceil((log2 n + log2 log2 n) / 2), m = ceil(sqrt(n / log2 n)).
// Requires n_target >= 16.
LowerBoundInstance build_instance(long long n_target);

// Explicit parameters (h >= 1, m >= 1); used for small edge cases.
LowerBoundInstance build_instance_hm(int h, int m);

// True iff dist(v,w1) > (1 + 1/alpha) * dist(v,w2) (strict). When true, w2's
// ply disk contains v: its longest incident edge exceeds dist(v,w2)/alpha by
// the triangle inequality.
bool lemma5_check(const Drawing& d, int v, int w1, int w2);

struct Certificate {
  double bound = 0.0;
  enum class Case { apex_cover, annulus } kind = Case::apex_cover;
  int tree_index = -1;    // annulus case: which tree the ratio came from
  int best_annulus = 0;   // annulus case: index l-bar
  int covering_trees = 0; // trees with some ply disk containing the apex
};

// Sound per-drawing lower bound on the ply number. Case A counts trees with a
// disk covering the apex (witnessed depth at the apex). Case B, applied to
// each non-covering tree: normalize by the drawn apex-to-root distance,
// partition into annuli with ratio c = 1 + 1/alpha, take the fullest annulus
// and return the disk-area ratio inside the enclosing disk of radius
// (alpha+1) c^(l-bar+1). Returns the max over cases.
Certificate certify_lower_bound(const Drawing& d,
                                const LowerBoundInstance& inst);

// Diagnostic for the level-distance induction: vertices of tree i at level j
// should lie within [c^-j, c^j] of the apex after normalization whenever no
// disk of the tree covers the apex. Returns the offending vertex ids.
std::vector<int> distance_induction_violations(const Drawing& d,
                                               const LowerBoundInstance& inst,
                                               int tree_index);

}  // namespace plyforge

#endif
