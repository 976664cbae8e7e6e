#ifndef PLYFORGE_TREE_HPP
#define PLYFORGE_TREE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace plyforge {

struct TreeNode {
  int parent = -1;                 // -1 for the root
  std::vector<int> children;       // ordered; layouts consume them in order
  long long subtree_size = 1;
};

// Rooted tree with cached subtree sizes and a declared degree bound.
struct RootedTree {
  std::vector<TreeNode> nodes;
  int root = 0;
  int degree_bound = 0;

  int size() const { return static_cast<int>(nodes.size()); }

  int degree(int v) const {
    return static_cast<int>(nodes[v].children.size()) + (v == root ? 0 : 1);
  }

  int max_degree() const;
  int depth() const;  // number of edges on the longest root-to-leaf path

  void recompute_subtree_sizes();

  // Checks structural invariants: single root, consistent parent/child
  // references, connectivity, cached subtree sizes, degree bound.
  bool validate(std::string* why = nullptr) const;
};

// Generators. All reject invalid parameters with std::invalid_argument.
RootedTree complete_kary_tree(int k, int height);
RootedTree path_tree(int n);
RootedTree caterpillar_tree(int n, int delta);
RootedTree random_tree(int n, int delta, std::uint64_t seed);
RootedTree star_tree(int leaves);

struct HeavyPathDecomposition {
  std::vector<std::vector<int>> paths;  // paths[0] starts at the tree root
  std::vector<int> anchor;        // per path: anchor vertex, -1 for paths[0]
  std::vector<int> height;        // per path: level in the decomposition tree
  std::vector<int> parent_path;   // per path: index of the parent path, -1 for root
  int total_height = 0;
  std::vector<int> path_of;              // vertex -> path index
  std::vector<long long> anchored_size;  // vertex -> total size of subtrees anchored there
};

// Partitions the tree into root-to-leaf paths that follow the child with the
// largest subtree (ties broken by smallest child id).
HeavyPathDecomposition heavy_path_decompose(const RootedTree& tree);

// 2-tree represented by its construction order: a base edge, then a sequence
// of vertices each attached to both endpoints of an existing edge.
struct TwoTree {
  int vertex_count = 0;
  std::pair<int, int> base_edge{0, 1};

  struct Attachment {
    int vertex;
    int parent1;
    int parent2;
  };
  std::vector<Attachment> order;

  std::vector<std::pair<int, int>> edges() const;
};

// True iff the construction order witnesses the 2-tree property:
// every attachment joins two vertices that are adjacent at insertion time.
// Malformed references yield false, never an exception.
bool validate_two_tree(const TwoTree& g);

}  // namespace plyforge

#endif
