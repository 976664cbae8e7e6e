#include "plyforge/ply.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace plyforge {

void Drawing::validate(bool allow_alpha_override) const {
  if (!allow_alpha_override && (alpha <= 0.0 || alpha > 0.5))
    throw std::invalid_argument("drawing: alpha must be in (0, 0.5]");
  if (alpha <= 0.0)
    throw std::invalid_argument("drawing: alpha must be positive");
  for (const auto& p : positions)
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("drawing: non-finite vertex coordinate");
  const int n = vertex_count();
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("drawing: edge endpoint out of range");
    if (dist2(positions[a], positions[b]) == 0.0)
      throw std::invalid_argument("drawing: zero-length edge (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  ")");
  }
}

PlyDiskSet ply_disks(const Drawing& d) {
  const int n = d.vertex_count();
  std::vector<double> longest(n, 0.0);
  for (const auto& [a, b] : d.edges) {
    double len = dist(d.positions[a], d.positions[b]);
    longest[a] = std::max(longest[a], len);
    longest[b] = std::max(longest[b], len);
  }
  PlyDiskSet out;
  for (int v = 0; v < n; ++v) {
    if (longest[v] > 0.0)
      out.disks.push_back({v, d.positions[v], d.alpha * longest[v]});
    else
      out.isolated.push_back(v);
  }
  return out;
}

DepthResult depth_at(const Point& q, const std::vector<PlyDisk>& disks) {
  DepthResult r;
  for (const auto& disk : disks) {
    double rr = disk.radius * (1.0 - kPlyTau);
    if (dist2(disk.center, q) < rr * rr) {
      ++r.count;
      r.covering.push_back(disk.vertex);
    }
  }
  return r;
}

int closed_depth_at(const Point& q, const std::vector<PlyDisk>& disks) {
  int count = 0;
  for (const auto& disk : disks) {
    double rr = disk.radius * (1.0 + kPlyTau);
    if (dist2(disk.center, q) <= rr * rr) ++count;
  }
  return count;
}

namespace {

int thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("PLYFORGE_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  return static_cast<int>(hw);
}

bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

struct Best {
  int depth = -1;
  Point witness;

  void consider(int d, const Point& p) {
    if (d > depth || (d == depth && lex_less(p, witness))) {
      depth = d;
      witness = p;
    }
  }
  void merge(const Best& o) {
    if (o.depth >= 0) consider(o.depth, o.witness);
  }
};

// Depth restricted to a candidate subset; the caller guarantees that every
// disk containing q is in the subset.
int depth_among(const Point& q, const std::vector<PlyDisk>& disks,
                const std::vector<int>& mult, const std::vector<int>& subset) {
  int count = 0;
  for (int i : subset) {
    double rr = disks[i].radius * (1.0 - kPlyTau);
    if (dist2(disks[i].center, q) < rr * rr) count += mult[i];
  }
  return count;
}

}  // namespace

PlyResult ply_number_exact(const std::vector<PlyDisk>& input) {
  if (input.empty())
    throw std::invalid_argument("ply_number_exact: need at least one disk");

  // Deduplicate coincident circles (same center and radius) so intersection
  // enumeration does not degenerate; duplicates keep contributing to depth
  // through a multiplicity weight.
  std::vector<PlyDisk> circles;
  std::vector<int> mult;
  for (const auto& d : input) {
    if (d.radius <= 0.0)
      throw std::invalid_argument("ply_number_exact: non-positive radius");
    bool dup = false;
    for (std::size_t c = 0; c < circles.size(); ++c)
      if (circles[c].center == d.center && circles[c].radius == d.radius) {
        ++mult[c];
        dup = true;
        break;
      }
    if (!dup) {
      circles.push_back(d);
      mult.push_back(1);
    }
  }
  const int nc = static_cast<int>(circles.size());

  // A disk containing a point on (or within the perturbation delta of) circle
  // i must intersect disk i after padding; neighbor lists therefore bound the
  // depth evaluation at candidates generated from i.
  std::vector<std::vector<int>> nbr(nc);
  std::vector<std::pair<int, int>> crossing;
  for (int i = 0; i < nc; ++i) {
    for (int j = 0; j < nc; ++j) {
      if (i == j) {
        nbr[i].push_back(j);
        continue;
      }
      double sum = circles[i].radius + circles[j].radius;
      double pad = sum * 1e-5;
      if (dist2(circles[i].center, circles[j].center) <=
          (sum + pad) * (sum + pad)) {
        nbr[i].push_back(j);
        if (i < j) {
          // Boundary circles cross only when neither disk contains the other.
          double dd = dist(circles[i].center, circles[j].center);
          if (dd + std::min(circles[i].radius, circles[j].radius) >
                  std::max(circles[i].radius, circles[j].radius) &&
              dd < sum)
            crossing.emplace_back(i, j);
        }
      }
    }
  }

  // Map deduplicated circle indices back to all input disks for the final
  // covering set (duplicates count toward depth).
  auto full_depth = [&](const Point& q) { return depth_at(q, input); };

  Best best;
  // Center candidates.
  for (int i = 0; i < nc; ++i)
    best.consider(depth_among(circles[i].center, circles, mult, nbr[i]),
                  circles[i].center);

  // Intersection candidates, perturbed in 8 compass directions.
  auto eval_pair = [&](std::size_t k, Best& local) {
    auto [i, j] = crossing[k];
    const Point &ci = circles[i].center, &cj = circles[j].center;
    const double ri = circles[i].radius, rj = circles[j].radius;
    const double d = dist(ci, cj);
    const double a = (d * d + ri * ri - rj * rj) / (2.0 * d);
    const double h2 = ri * ri - a * a;
    if (h2 < 0.0) return;  // tangent within rounding; centers already cover it
    const double h = std::sqrt(h2);
    const Point u{(cj.x - ci.x) / d, (cj.y - ci.y) / d};
    const Point mid{ci.x + a * u.x, ci.y + a * u.y};
    const Point perp{-u.y, u.x};
    const double delta = kPlyDeltaRel * std::max(ri, rj);
    const std::vector<int>& sub = nbr[i].size() <= nbr[j].size() ? nbr[i] : nbr[j];
    for (double sign : {1.0, -1.0}) {
      Point p{mid.x + sign * h * perp.x, mid.y + sign * h * perp.y};
      local.consider(depth_among(p, circles, mult, sub), p);
      // The four faces meeting at p are bounded by the two circle tangents;
      // probe along the sector bisectors so even a thin face gets a sample.
      // For unit normals the bisectors are the (orthogonal) directions
      // n_i + n_j and n_i - n_j.
      Point ni{(p.x - ci.x) / ri, (p.y - ci.y) / ri};
      Point nj{(p.x - cj.x) / rj, (p.y - cj.y) / rj};
      Point u1{ni.x + nj.x, ni.y + nj.y};
      Point u2{ni.x - nj.x, ni.y - nj.y};
      double l1 = std::sqrt(u1.x * u1.x + u1.y * u1.y);
      double l2 = std::sqrt(u2.x * u2.x + u2.y * u2.y);
      if (l1 < 1e-12) u1 = Point{-u2.y / l2, u2.x / l2};
      else u1 = Point{u1.x / l1, u1.y / l1};
      if (l2 < 1e-12) u2 = Point{-u1.y, u1.x};
      else u2 = Point{u2.x / l2, u2.y / l2};
      const Point dirs[8] = {u1,
                             {-u1.x, -u1.y},
                             u2,
                             {-u2.x, -u2.y},
                             {(u1.x + u2.x) * 0.70710678118654752,
                              (u1.y + u2.y) * 0.70710678118654752},
                             {(u1.x - u2.x) * 0.70710678118654752,
                              (u1.y - u2.y) * 0.70710678118654752},
                             {(-u1.x - u2.x) * 0.70710678118654752,
                              (-u1.y - u2.y) * 0.70710678118654752},
                             {(-u1.x + u2.x) * 0.70710678118654752,
                              (-u1.y + u2.y) * 0.70710678118654752}};
      for (const auto& dir : dirs) {
        Point q{p.x + delta * dir.x, p.y + delta * dir.y};
        local.consider(depth_among(q, circles, mult, sub), q);
      }
      if (h == 0.0) break;
    }
  };

  const int threads = std::min(
      thread_budget(),
      static_cast<int>(std::max<std::size_t>(crossing.size() / 512, 1)));
  if (threads <= 1 || crossing.size() < 1024) {
    for (std::size_t k = 0; k < crossing.size(); ++k) eval_pair(k, best);
  } else {
    std::vector<Best> locals(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t]() {
        for (std::size_t k = t; k < crossing.size(); k += threads)
          eval_pair(k, locals[t]);
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& l : locals) best.merge(l);
  }

  PlyResult result;
  DepthResult at = full_depth(best.witness);
  result.ply = at.count;
  result.witness = best.witness;
  result.covering = std::move(at.covering);
  result.closed_ply = closed_depth_at(best.witness, input);
  return result;
}

PlyResult ply_number_exact(const Drawing& d) {
  return ply_number_exact(ply_disks(d).disks);
}

int ply_number_sampled(const std::vector<PlyDisk>& disks, double grid_step,
                       std::size_t cell_budget) {
  if (grid_step <= 0.0)
    throw std::invalid_argument("ply_number_sampled: grid_step must be > 0");
  if (disks.empty()) return 0;

  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  double max_r = 0.0;
  for (const auto& d : disks) {
    lo_x = std::min(lo_x, d.center.x - d.radius);
    lo_y = std::min(lo_y, d.center.y - d.radius);
    hi_x = std::max(hi_x, d.center.x + d.radius);
    hi_y = std::max(hi_y, d.center.y + d.radius);
    max_r = std::max(max_r, d.radius);
  }
  lo_x -= max_r;
  lo_y -= max_r;
  hi_x += max_r;
  hi_y += max_r;

  const double nx_f = std::floor((hi_x - lo_x) / grid_step) + 1.0;
  const double ny_f = std::floor((hi_y - lo_y) / grid_step) + 1.0;
  if (nx_f * ny_f > static_cast<double>(cell_budget))
    throw std::runtime_error(
        "ply_number_sampled: grid of " + std::to_string(nx_f * ny_f) +
        " cells exceeds the budget; use a coarser grid_step");
  const std::int64_t nx = static_cast<std::int64_t>(nx_f);
  const std::int64_t ny = static_cast<std::int64_t>(ny_f);

  // Rasterize each disk additively instead of probing every grid point
  // against every disk.
  std::vector<std::uint16_t> depth(static_cast<std::size_t>(nx * ny), 0);
  std::uint16_t best = 0;
  for (const auto& d : disks) {
    const double rr = d.radius * (1.0 - kPlyTau);
    const double rr2 = rr * rr;
    std::int64_t ix0 = std::max<std::int64_t>(
        0, static_cast<std::int64_t>(std::ceil((d.center.x - rr - lo_x) / grid_step)));
    std::int64_t ix1 = std::min<std::int64_t>(
        nx - 1,
        static_cast<std::int64_t>(std::floor((d.center.x + rr - lo_x) / grid_step)));
    for (std::int64_t ix = ix0; ix <= ix1; ++ix) {
      const double x = lo_x + ix * grid_step;
      const double dx2 = (x - d.center.x) * (x - d.center.x);
      if (dx2 >= rr2) continue;
      const double half = std::sqrt(rr2 - dx2);
      std::int64_t iy0 = std::max<std::int64_t>(
          0,
          static_cast<std::int64_t>(std::ceil((d.center.y - half - lo_y) / grid_step)));
      std::int64_t iy1 = std::min<std::int64_t>(
          ny - 1,
          static_cast<std::int64_t>(std::floor((d.center.y + half - lo_y) / grid_step)));
      for (std::int64_t iy = iy0; iy <= iy1; ++iy) {
        const double y = lo_y + iy * grid_step;
        if (dx2 + (y - d.center.y) * (y - d.center.y) < rr2) {
          std::uint16_t v = ++depth[static_cast<std::size_t>(ix * ny + iy)];
          best = std::max(best, v);
        }
      }
    }
  }
  return best;
}

int ply_number_sampled(const Drawing& d, double grid_step,
                       std::size_t cell_budget) {
  return ply_number_sampled(ply_disks(d).disks, grid_step, cell_budget);
}

double area_ratio_lower_bound(const std::vector<PlyDisk>& disks,
                              const Point& enclosing_center,
                              double enclosing_radius) {
  if (enclosing_radius <= 0.0)
    throw std::invalid_argument("area_ratio_lower_bound: enclosing radius");
  double sum = 0.0;
  for (const auto& d : disks) {
    if (dist(d.center, enclosing_center) + d.radius >
        enclosing_radius * (1.0 + kPlyTau))
      throw std::invalid_argument(
          "area_ratio_lower_bound: disk for vertex " + std::to_string(d.vertex) +
          " is not contained in the enclosing disk");
    sum += d.radius * d.radius;
  }
  return sum / (enclosing_radius * enclosing_radius);
}

}  // namespace plyforge
