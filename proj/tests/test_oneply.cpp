#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "plyforge/oneply.hpp"
#include "plyforge/ply.hpp"

using namespace plyforge;

TEST_CASE("edge shrink ratio") {
  CHECK(compute_f(3) == doctest::Approx(0.46410161513775461).epsilon(1e-12));
  CHECK(compute_f(6) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(compute_f(4, true) == 0.5);
  CHECK_THROWS_AS(compute_f(2), std::invalid_argument);
  CHECK_THROWS_AS(compute_f(3, true), std::invalid_argument);
}

TEST_CASE("alpha bound") {
  // both branches evaluated at f(3); the adjacent-disk branch is the min
  const double f = compute_f(3);
  const double adjacent = f / (1.0 + f);
  const double theta = 2.0 * std::numbers::pi / 3.0;
  const double ancestor = f * std::sqrt(1.0 - 2.0 * f * std::cos(theta) + f * f) -
                          f * f * f / (1.0 - f);
  CHECK(adjacent == doctest::Approx(0.31701).epsilon(1e-4));
  CHECK(ancestor == doctest::Approx(0.41491).epsilon(1e-4));
  CHECK(compute_alpha_max(3) == doctest::Approx(std::min(adjacent, ancestor)));

  CHECK(compute_alpha_max(4, true) == doctest::Approx(1.0 / 3.0));

  // alpha scales as pi / delta in the limit
  const int big = 1000;
  CHECK(compute_alpha_max(big) * big ==
        doctest::Approx(std::numbers::pi).epsilon(0.02));
}

TEST_CASE("single edge layout") {
  auto t = path_tree(2);
  auto d = layout_one_ply(t, OnePlyParams::make(3), 2.5);
  CHECK(dist(d.positions[0], d.positions[1]) == doctest::Approx(2.5));
  CHECK(ply_number_exact(d).ply == 1);
}

TEST_CASE("degree violations are rejected by vertex") {
  auto t = star_tree(5);
  CHECK_THROWS_WITH_AS(layout_one_ply(t, OnePlyParams::make(3)),
                       doctest::Contains("vertex 0"), std::invalid_argument);
}

TEST_CASE("edges decay geometrically with depth") {
  auto t = complete_kary_tree(2, 5);
  auto params = OnePlyParams::make(3);
  auto d = layout_one_ply(t, params, 1.0);
  // walk depths from the tree structure
  std::vector<int> depth(t.size(), 0);
  for (int v = 0; v < t.size(); ++v)
    if (v != t.root) depth[v] = depth[t.nodes[v].parent] + 1;
  for (const auto& [a, b] : d.edges) {
    int child_depth = std::max(depth[a], depth[b]);
    double expect = std::pow(params.f, child_depth - 1);
    CHECK(dist(d.positions[a], d.positions[b]) ==
          doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("subtrees stay within the wedge reach bound") {
  for (int delta : {3, 5, 8}) {
    auto t = random_tree(200, delta, 7);
    auto params = OnePlyParams::make(delta);
    auto d = layout_one_ply(t, params, 1.0);
    const double sin_bound = std::sin(std::numbers::pi / delta);
    // incoming edge length per vertex
    std::vector<double> incoming(t.size(), 0.0);
    for (int v = 0; v < t.size(); ++v)
      if (v != t.root)
        incoming[v] = dist(d.positions[v], d.positions[t.nodes[v].parent]);
    // max distance from each non-root vertex to anything in its subtree
    for (int w = 0; w < t.size(); ++w) {
      if (w == t.root) continue;
      std::vector<int> stack{w};
      double reach = 0.0;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        reach = std::max(reach, dist(d.positions[w], d.positions[u]));
        for (int c : t.nodes[u].children) stack.push_back(c);
      }
      CHECK(reach <= sin_bound * incoming[w] * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("manhattan refinement is axis-parallel and confined") {
  auto t = complete_kary_tree(3, 4);
  auto params = OnePlyParams::make(4, true);
  CHECK(params.f == 0.5);
  CHECK(params.alpha == doctest::Approx(1.0 / 3.0));
  auto d = layout_one_ply(t, params, 1.0);
  for (const auto& [a, b] : d.edges) {
    double dx = std::abs(d.positions[a].x - d.positions[b].x);
    double dy = std::abs(d.positions[a].y - d.positions[b].y);
    CHECK(std::min(dx, dy) <= 1e-12 * std::max(dx, dy));
  }
  // Manhattan reach of a subtree never exceeds the incoming edge length
  std::vector<double> incoming(t.size(), 0.0);
  for (int v = 0; v < t.size(); ++v)
    if (v != t.root)
      incoming[v] = dist(d.positions[v], d.positions[t.nodes[v].parent]);
  for (int w = 0; w < t.size(); ++w) {
    if (w == t.root) continue;
    std::vector<int> stack{w};
    double reach = 0.0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      reach = std::max(reach, std::abs(d.positions[w].x - d.positions[u].x) +
                                  std::abs(d.positions[w].y - d.positions[u].y));
      for (int c : t.nodes[u].children) stack.push_back(c);
    }
    CHECK(reach <= incoming[w] * (1.0 + 1e-9));
  }
}

TEST_CASE("complete binary tree at delta = 3 is 1-ply") {
  auto t = complete_kary_tree(2, 6);
  auto d = layout_one_ply(t, OnePlyParams::make(3), 1.0);
  CHECK(ply_number_exact(d).ply == 1);
}

TEST_CASE("random trees are 1-ply at the backed-off alpha bound") {
  for (int delta : {3, 6, 12}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto t = random_tree(150, delta, seed);
      double alpha = compute_alpha_max(delta) * (1.0 - 1e-6);
      auto d = layout_one_ply(t, OnePlyParams::make(delta, false, alpha), 1.0);
      CHECK(ply_number_exact(d).ply == 1);
    }
  }
}

TEST_CASE("parameter errors") {
  auto t = path_tree(3);
  CHECK_THROWS_AS(layout_one_ply(t, OnePlyParams::make(3), 0.0),
                  std::invalid_argument);
}
