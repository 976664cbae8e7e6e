#include "plyforge/tree.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace plyforge {

int RootedTree::max_degree() const {
  int best = 0;
  for (int v = 0; v < size(); ++v) best = std::max(best, degree(v));
  return best;
}

int RootedTree::depth() const {
  // Iterative DFS; trees can be path-like.
  std::vector<std::pair<int, int>> stack{{root, 0}};
  int best = 0;
  while (!stack.empty()) {
    auto [v, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    for (int c : nodes[v].children) stack.emplace_back(c, d + 1);
  }
  return best;
}

void RootedTree::recompute_subtree_sizes() {
  // Children are created after parents by all generators, but do not rely on
  // that: process in reverse topological order computed by DFS.
  std::vector<int> order;
  order.reserve(nodes.size());
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : nodes[v].children) stack.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    long long s = 1;
    for (int c : nodes[*it].children) s += nodes[c].subtree_size;
    nodes[*it].subtree_size = s;
  }
}

bool RootedTree::validate(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = size();
  if (n == 0) return fail("empty tree");
  if (root < 0 || root >= n) return fail("root id out of range");
  if (nodes[root].parent != -1) return fail("root has a parent");

  int roots = 0;
  for (int v = 0; v < n; ++v) {
    const auto& node = nodes[v];
    if (node.parent == -1) {
      ++roots;
      if (v != root) return fail("node " + std::to_string(v) + " has no parent");
    } else {
      if (node.parent < 0 || node.parent >= n)
        return fail("parent id out of range at node " + std::to_string(v));
      const auto& pc = nodes[node.parent].children;
      if (std::find(pc.begin(), pc.end(), v) == pc.end())
        return fail("parent/child mismatch at node " + std::to_string(v));
    }
    for (int c : node.children) {
      if (c < 0 || c >= n) return fail("child id out of range");
      if (nodes[c].parent != v)
        return fail("child " + std::to_string(c) + " does not point back to " +
                    std::to_string(v));
    }
    if (degree_bound > 0 && degree(v) > degree_bound)
      return fail("degree bound violated at node " + std::to_string(v));
  }
  if (roots != 1) return fail("tree must have exactly one root");

  // Connectivity + acyclicity: a reachability sweep from the root must visit
  // every node exactly once.
  std::vector<char> seen(n, 0);
  std::vector<int> stack{root};
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (seen[v]) return fail("cycle detected");
    seen[v] = 1;
    ++visited;
    for (int c : nodes[v].children) stack.push_back(c);
  }
  if (visited != n) return fail("tree is not connected");

  RootedTree copy = *this;
  copy.recompute_subtree_sizes();
  for (int v = 0; v < n; ++v)
    if (copy.nodes[v].subtree_size != nodes[v].subtree_size)
      return fail("cached subtree_size wrong at node " + std::to_string(v));
  return true;
}

namespace {

int add_node(RootedTree& t, int parent) {
  int id = t.size();
  t.nodes.push_back(TreeNode{});
  if (parent >= 0) {
    t.nodes[id].parent = parent;
    t.nodes[parent].children.push_back(id);
  }
  return id;
}

}  // namespace

RootedTree complete_kary_tree(int k, int height) {
  if (k < 2) throw std::invalid_argument("complete_kary_tree: k must be >= 2");
  if (height < 0)
    throw std::invalid_argument("complete_kary_tree: height must be >= 0");
  RootedTree t;
  t.degree_bound = height == 0 ? 1 : k + 1;
  add_node(t, -1);
  std::vector<int> level{0};
  for (int d = 0; d < height; ++d) {
    std::vector<int> next;
    next.reserve(level.size() * k);
    for (int v : level)
      for (int i = 0; i < k; ++i) next.push_back(add_node(t, v));
    level = std::move(next);
  }
  t.recompute_subtree_sizes();
  return t;
}

RootedTree path_tree(int n) {
  if (n < 1) throw std::invalid_argument("path_tree: n must be >= 1");
  RootedTree t;
  t.degree_bound = n == 1 ? 0 : 2;
  add_node(t, -1);
  for (int i = 1; i < n; ++i) add_node(t, i - 1);
  t.recompute_subtree_sizes();
  return t;
}

RootedTree star_tree(int leaves) {
  if (leaves < 0) throw std::invalid_argument("star_tree: leaves must be >= 0");
  RootedTree t;
  t.degree_bound = std::max(1, leaves);
  add_node(t, -1);
  for (int i = 0; i < leaves; ++i) add_node(t, 0);
  t.recompute_subtree_sizes();
  return t;
}

RootedTree caterpillar_tree(int n, int delta) {
  if (n < 1) throw std::invalid_argument("caterpillar_tree: n must be >= 1");
  if (delta < 2 && n > 1)
    throw std::invalid_argument("caterpillar_tree: delta must be >= 2");
  RootedTree t;
  t.degree_bound = delta;
  int spine = add_node(t, -1);
  while (t.size() < n) {
    // Keep one slot on the spine vertex for the spine continuation.
    int leaf_cap = delta - t.degree(spine) - 1;
    if (leaf_cap > 0 && t.size() < n) {
      add_node(t, spine);
    } else {
      spine = add_node(t, spine);
    }
  }
  t.recompute_subtree_sizes();
  return t;
}

RootedTree random_tree(int n, int delta, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  if (delta < 2 && n > 1)
    throw std::invalid_argument("random_tree: delta must be >= 2");
  RootedTree t;
  t.degree_bound = delta;
  add_node(t, -1);
  std::mt19937_64 rng(seed);
  // Vertices that can still take a child. Explicit modulo draw so results are
  // identical across standard library implementations.
  std::vector<int> eligible{0};
  for (int i = 1; i < n; ++i) {
    std::size_t idx = static_cast<std::size_t>(rng() % eligible.size());
    int parent = eligible[idx];
    int v = add_node(t, parent);
    if (t.degree(parent) >= delta) {
      eligible[idx] = eligible.back();
      eligible.pop_back();
    }
    if (delta > 1) eligible.push_back(v);
  }
  t.recompute_subtree_sizes();
  return t;
}

HeavyPathDecomposition heavy_path_decompose(const RootedTree& tree) {
  const int n = tree.size();
  HeavyPathDecomposition hpd;
  hpd.path_of.assign(n, -1);
  hpd.anchored_size.assign(n, 0);

  auto heavy_child = [&](int v) {
    int best = -1;
    long long best_size = -1;
    for (int c : tree.nodes[v].children) {
      long long s = tree.nodes[c].subtree_size;
      if (s > best_size || (s == best_size && c < best)) {
        best = c;
        best_size = s;
      }
    }
    return best;
  };

  // BFS over path starts: (start vertex, anchor vertex, height, parent path).
  struct Pending {
    int start, anchor, height, parent;
  };
  std::vector<Pending> queue{{tree.root, -1, 0, -1}};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Pending p = queue[qi];
    int pid = static_cast<int>(hpd.paths.size());
    std::vector<int> path;
    int v = p.start;
    while (true) {
      path.push_back(v);
      hpd.path_of[v] = pid;
      int next = heavy_child(v);
      long long anchored = tree.nodes[v].subtree_size - 1;
      if (next >= 0) anchored -= tree.nodes[next].subtree_size;
      hpd.anchored_size[v] = anchored;
      for (int c : tree.nodes[v].children)
        if (c != next) queue.push_back({c, v, p.height + 1, pid});
      if (next < 0) break;
      v = next;
    }
    hpd.paths.push_back(std::move(path));
    hpd.anchor.push_back(p.anchor);
    hpd.height.push_back(p.height);
    hpd.parent_path.push_back(p.parent);
    hpd.total_height = std::max(hpd.total_height, p.height);
  }
  return hpd;
}

std::vector<std::pair<int, int>> TwoTree::edges() const {
  std::vector<std::pair<int, int>> e;
  e.reserve(1 + 2 * order.size());
  e.push_back(base_edge);
  for (const auto& a : order) {
    e.emplace_back(a.vertex, a.parent1);
    e.emplace_back(a.vertex, a.parent2);
  }
  return e;
}

bool validate_two_tree(const TwoTree& g) {
  if (g.base_edge.first == g.base_edge.second) return false;
  std::set<int> present{g.base_edge.first, g.base_edge.second};
  std::set<std::pair<int, int>> adj;
  auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  adj.insert(key(g.base_edge.first, g.base_edge.second));
  for (const auto& a : g.order) {
    if (a.parent1 == a.parent2) return false;
    if (present.count(a.vertex)) return false;
    if (!present.count(a.parent1) || !present.count(a.parent2)) return false;
    if (!adj.count(key(a.parent1, a.parent2))) return false;
    present.insert(a.vertex);
    adj.insert(key(a.vertex, a.parent1));
    adj.insert(key(a.vertex, a.parent2));
  }
  if (g.vertex_count != 0 &&
      g.vertex_count != static_cast<int>(present.size()))
    return false;
  return true;
}

}  // namespace plyforge
