#ifndef PLYFORGE_GEOMETRY_HPP
#define PLYFORGE_GEOMETRY_HPP

#include <cmath>
#include <utility>
#include <vector>

namespace plyforge {

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

inline double dist(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double dist2(const Point& a, const Point& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Straight-line drawing: vertex ids are consecutive integers from 0.
struct Drawing {
  double alpha = 0.5;
  std::vector<Point> positions;
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return static_cast<int>(positions.size()); }

  // Throws std::invalid_argument when an invariant is violated:
  // dangling edge endpoints, zero-length edges, non-finite coordinates,
  // or alpha outside (0, 0.5] (unless allow_alpha_override).
  void validate(bool allow_alpha_override = false) const;
};

// Open disk around a vertex; radius = alpha * longest incident edge.
struct PlyDisk {
  int vertex = -1;
  Point center;
  double radius = 0.0;
};

}  // namespace plyforge

#endif
