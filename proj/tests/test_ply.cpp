#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "plyforge/ply.hpp"

using namespace plyforge;

namespace {

Drawing single_edge() {
  Drawing d;
  d.alpha = 0.5;
  d.positions = {{0.0, 0.0}, {1.0, 0.0}};
  d.edges = {{0, 1}};
  return d;
}

// Independent oracle: dense grid scan, no candidate enumeration.
int grid_oracle(const std::vector<PlyDisk>& disks, int resolution = 600) {
  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (const auto& d : disks) {
    lo_x = std::min(lo_x, d.center.x - 2 * d.radius);
    lo_y = std::min(lo_y, d.center.y - 2 * d.radius);
    hi_x = std::max(hi_x, d.center.x + 2 * d.radius);
    hi_y = std::max(hi_y, d.center.y + 2 * d.radius);
  }
  int best = 0;
  for (int i = 0; i <= resolution; ++i)
    for (int j = 0; j <= resolution; ++j) {
      Point q{lo_x + (hi_x - lo_x) * i / resolution,
              lo_y + (hi_y - lo_y) * j / resolution};
      best = std::max(best, depth_at(q, disks).count);
    }
  return best;
}

// Random disk set with all pairwise circle distances away from tangency.
std::vector<PlyDisk> random_tangency_free(std::mt19937_64& rng, int n,
                                          double margin) {
  auto uni = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1p-53);
  };
  std::vector<PlyDisk> disks;
  int guard = 0;
  while (static_cast<int>(disks.size()) < n && guard < 100000) {
    ++guard;
    PlyDisk d{static_cast<int>(disks.size()),
              {uni(0.0, 3.0), uni(0.0, 3.0)},
              uni(0.2, 0.45)};
    bool ok = true;
    for (const auto& o : disks) {
      double dd = dist(d.center, o.center);
      if (std::abs(dd - (d.radius + o.radius)) < margin ||
          std::abs(dd - std::abs(d.radius - o.radius)) < margin || dd < margin) {
        ok = false;
        break;
      }
    }
    if (ok) disks.push_back(d);
  }
  return disks;
}

}  // namespace

TEST_CASE("ply disks follow the longest incident edge") {
  auto d = single_edge();
  auto set = ply_disks(d);
  REQUIRE(set.disks.size() == 2);
  CHECK(set.disks[0].radius == doctest::Approx(0.5));
  CHECK(set.disks[1].radius == doctest::Approx(0.5));
  CHECK(set.isolated.empty());

  Drawing two;
  two.alpha = 0.5;
  two.positions = {{0.0, 0.0}, {2.0, 0.0}, {-6.0, 0.0}};
  two.edges = {{0, 1}, {0, 2}};
  auto s2 = ply_disks(two);
  CHECK(s2.disks[0].radius == doctest::Approx(3.0));  // max(2, 6) * 0.5

  Drawing star;
  star.alpha = 0.25;
  star.positions = {{0, 0}, {3, 0}, {0, 3}, {-3, 0}};
  star.edges = {{0, 1}, {0, 2}, {0, 3}};
  CHECK(ply_disks(star).disks[0].radius == doctest::Approx(0.75));
}

TEST_CASE("isolated vertices are flagged and get no disk") {
  Drawing d = single_edge();
  d.positions.push_back({5.0, 5.0});
  auto set = ply_disks(d);
  CHECK(set.disks.size() == 2);
  CHECK(set.isolated == std::vector<int>{2});
}

TEST_CASE("depth_at uses open-disk semantics") {
  CHECK(depth_at({0.0, 0.0}, {}).count == 0);
  auto disks = ply_disks(single_edge()).disks;
  // both boundaries pass exactly through the midpoint
  CHECK(depth_at({0.5, 0.0}, disks).count == 0);
  auto r = depth_at({0.25, 0.0}, disks);
  CHECK(r.count == 1);
  CHECK(r.covering == std::vector<int>{0});
}

TEST_CASE("single edge has ply number 1") {
  auto r = ply_number_exact(single_edge());
  CHECK(r.ply == 1);
  CHECK(static_cast<int>(r.covering.size()) == r.ply);
  CHECK(depth_at(r.witness, ply_disks(single_edge()).disks).count == 1);
}

TEST_CASE("equilateral K_{1,3} with unit edges is 1-ply at alpha = 0.5") {
  Drawing d;
  d.alpha = 0.5;
  d.positions = {{0, 0}};
  d.edges = {{0, 1}, {0, 2}, {0, 3}};
  for (int i = 0; i < 3; ++i) {
    double a = 2.0 * M_PI * i / 3.0;
    d.positions.push_back({std::cos(a), std::sin(a)});
  }
  auto exact = ply_number_exact(d);
  CHECK(exact.ply == 1);
  CHECK(grid_oracle(ply_disks(d).disks) == 1);
}

TEST_CASE("three nearly coincident unit disks give ply 3") {
  std::vector<PlyDisk> disks{
      {0, {0.0, 0.0}, 1.0}, {1, {0.05, 0.05}, 1.0}, {2, {-0.07, 0.02}, 1.0}};
  CHECK(ply_number_exact(disks).ply == 3);
}

TEST_CASE("coincident circles are deduplicated but still counted") {
  std::vector<PlyDisk> disks{
      {0, {0.0, 0.0}, 1.0}, {1, {0.0, 0.0}, 1.0}, {2, {0.0, 0.0}, 1.0}};
  CHECK(ply_number_exact(disks).ply == 3);

  // duplicated pair must dominate a separate triple-free region
  std::vector<PlyDisk> mixed{{0, {0.0, 0.0}, 1.0},
                             {1, {0.0, 0.0}, 1.0},
                             {2, {0.0, 0.0}, 1.0},
                             {3, {10.0, 0.0}, 1.0},
                             {4, {10.5, 0.0}, 1.0}};
  CHECK(ply_number_exact(mixed).ply == 3);
}

TEST_CASE("tangent disks stay at depth 1") {
  std::vector<PlyDisk> disks{{0, {0.0, 0.0}, 1.0}, {1, {2.0, 0.0}, 1.0}};
  CHECK(ply_number_exact(disks).ply == 1);
  CHECK(depth_at({1.0, 0.0}, disks).count == 0);
}

TEST_CASE("exact ply rejects empty and degenerate input") {
  CHECK_THROWS_AS(ply_number_exact(std::vector<PlyDisk>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ply_number_exact({{0, {0, 0}, 0.0}}), std::invalid_argument);
}

TEST_CASE("sampled ply on simple configurations") {
  CHECK(ply_number_sampled(single_edge(), 0.01) == 1);
  std::vector<PlyDisk> disjoint{{0, {0, 0}, 1.0}, {1, {5, 0}, 1.0}};
  CHECK(ply_number_sampled(disjoint, 0.05) == 1);
  CHECK_THROWS_AS(ply_number_sampled(disjoint, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(ply_number_sampled(disjoint, 1e-6, 1000), std::runtime_error);
}

TEST_CASE("adding a disk never decreases the exact ply") {
  std::mt19937_64 rng(11);
  auto disks = random_tangency_free(rng, 12, 1e-3);
  int prev = 0;
  std::vector<PlyDisk> acc;
  for (const auto& d : disks) {
    acc.push_back(d);
    int ply = ply_number_exact(acc).ply;
    CHECK(ply >= prev);
    prev = ply;
  }
}

TEST_CASE("exact ply is scale invariant") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    auto disks = random_tangency_free(rng, 10, 1e-3);
    int base = ply_number_exact(disks).ply;
    for (double s : {1e-3, 7.5, 1e4}) {
      auto scaled = disks;
      for (auto& d : scaled) {
        d.center = {d.center.x * s, d.center.y * s};
        d.radius *= s;
      }
      CHECK(ply_number_exact(scaled).ply == base);
    }
  }
}

TEST_CASE("exact agrees with the grid sample on tangency-free sets") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto disks = random_tangency_free(rng, 3 + static_cast<int>(rng() % 18), 1e-3);
    double min_r = 1e300;
    for (const auto& d : disks) min_r = std::min(min_r, d.radius);
    int exact = ply_number_exact(disks).ply;
    int sampled = ply_number_sampled(disks, min_r / 50.0);
    CHECK(exact == sampled);
  }
}

TEST_CASE("sampled never exceeds exact on tangency-rich sets") {
  std::mt19937_64 rng(31);
  auto uni = [&](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1p-53);
  };
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<PlyDisk> disks;
    int n = 3 + static_cast<int>(rng() % 10);
    disks.push_back({0, {uni(0, 2), uni(0, 2)}, uni(0.2, 0.5)});
    for (int i = 1; i < n; ++i) {
      // place tangent to a previous disk
      const auto& prev = disks[static_cast<std::size_t>(rng() % disks.size())];
      double r = uni(0.2, 0.5);
      double ang = uni(0, 2 * M_PI);
      disks.push_back({i,
                       {prev.center.x + (prev.radius + r) * std::cos(ang),
                        prev.center.y + (prev.radius + r) * std::sin(ang)},
                       r});
    }
    int exact = ply_number_exact(disks).ply;
    int sampled = ply_number_sampled(disks, 0.01);
    CHECK(sampled <= exact);
  }
}

TEST_CASE("area ratio lower bound") {
  std::vector<PlyDisk> one{{0, {0.0, 0.0}, 1.0}};
  CHECK(area_ratio_lower_bound(one, {0.0, 0.0}, 2.0) == doctest::Approx(0.25));

  std::vector<PlyDisk> outside{{0, {3.0, 0.0}, 1.0}};
  CHECK_THROWS_AS(area_ratio_lower_bound(outside, {0.0, 0.0}, 2.0),
                  std::invalid_argument);

  // ratio never exceeds the exact ply
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    auto disks = random_tangency_free(rng, 8, 1e-3);
    Point c{1.5, 1.5};
    double r_D = 0.0;
    for (const auto& d : disks)
      r_D = std::max(r_D, dist(d.center, c) + d.radius);
    r_D *= 1.0 + 1e-9;
    double ratio = area_ratio_lower_bound(disks, c, r_D);
    CHECK(ratio <= ply_number_exact(disks).ply + 1e-12);
  }
}

TEST_CASE("closed-depth diagnostic flags tangencies") {
  std::vector<PlyDisk> disks{{0, {0.0, 0.0}, 1.0}, {1, {2.0, 0.0}, 1.0}};
  CHECK(closed_depth_at({1.0, 0.0}, disks) == 2);
  CHECK(depth_at({1.0, 0.0}, disks).count == 0);
}
