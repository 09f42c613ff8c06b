#include "eulermerge/geometry.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

namespace eulermerge {
namespace {

int sign(double v) { return (v > 0.0) - (v < 0.0); }

bool on_segment(Point p, Point a, Point b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

int orientation(Point a, Point b, Point c) {
  // Floating-point filter; exact rational arithmetic when it is inconclusive.
  double left = (b.x - a.x) * (c.y - a.y);
  double right = (b.y - a.y) * (c.x - a.x);
  double det = left - right;
  if (std::abs(det) > 3.3306690738754716e-16 * (std::abs(left) + std::abs(right))) return sign(det);
  using boost::multiprecision::cpp_rational;
  cpp_rational ax(a.x), ay(a.y);
  cpp_rational exact = (cpp_rational(b.x) - ax) * (cpp_rational(c.y) - ay) -
                       (cpp_rational(b.y) - ay) * (cpp_rational(c.x) - ax);
  return exact.sign();
}

bool segments_intersect(Point a, Point b, Point c, Point d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(c, a, b)) return true;
  if (o2 == 0 && on_segment(d, a, b)) return true;
  if (o3 == 0 && on_segment(a, c, d)) return true;
  if (o4 == 0 && on_segment(b, c, d)) return true;
  return false;
}

bool segments_cross_properly(Point a, Point b, Point c, Point d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

double point_segment_distance(Point p, Point a, Point b) {
  Point ab = b - a;
  double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

bool point_in_triangle(Point p, Point a, Point b, Point c) {
  double d1 = orient(a, b, p);
  double d2 = orient(b, c, p);
  double d3 = orient(c, a, p);
  bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
  bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(has_neg && has_pos);
}

bool point_in_polygon(Point p, std::span<const Point> ring) {
  bool inside = false;
  const auto n = ring.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point& a = ring[i];
    const Point& b = ring[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

bool point_in_rings(Point p, std::span<const std::vector<Point>> rings) {
  bool inside = false;
  for (const auto& r : rings)
    if (point_in_polygon(p, r)) inside = !inside;
  return inside;
}

double signed_area(std::span<const Point> ring) {
  double a = 0.0;
  const auto n = ring.size();
  for (std::size_t i = 0; i < n; ++i) a += cross(ring[i], ring[(i + 1) % n]);
  return a / 2.0;
}

double perimeter(std::span<const Point> ring) {
  double total = 0.0;
  const auto n = ring.size();
  for (std::size_t i = 0; i < n; ++i) total += distance(ring[i], ring[(i + 1) % n]);
  return total;
}

Point centroid(std::span<const Point> ring) {
  double a = signed_area(ring);
  if (std::abs(a) < 1e-12) {
    Point s{};
    for (auto p : ring) s = s + p;
    return ring.empty() ? s : s * (1.0 / static_cast<double>(ring.size()));
  }
  double cx = 0.0;
  double cy = 0.0;
  const auto n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = ring[i];
    const Point& q = ring[(i + 1) % n];
    double w = cross(p, q);
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  return {cx / (6.0 * a), cy / (6.0 * a)};
}

bool ring_is_simple(std::span<const Point> ring) {
  const auto n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Point a = ring[i];
    Point b = ring[(i + 1) % n];
    if (a == b) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      Point c = ring[j];
      Point d = ring[(j + 1) % n];
      bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      if (adjacent) {
        // Adjacent edges share one endpoint; they must not fold back.
        Point shared = (j == i + 1) ? b : a;
        Point other1 = (j == i + 1) ? a : b;
        Point other2 = (j == i + 1) ? d : c;
        if (orientation(other1, shared, other2) == 0 &&
            dot(other1 - shared, other2 - shared) > 0.0)
          return false;
        continue;
      }
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

}  // namespace eulermerge
