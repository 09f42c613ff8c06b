#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace eulermerge {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }
  friend Point operator*(double s, Point a) { return {a.x * s, a.y * s}; }
  friend bool operator==(Point, Point) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline Point lerp(Point a, Point b, double t) { return a + (b - a) * t; }

// Twice the signed area of triangle abc; positive when counter-clockwise.
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }
// Exact sign of orient(a, b, c): -1, 0 or 1.
int orientation(Point a, Point b, Point c);

// True if the closed segments ab and cd share at least one point.
bool segments_intersect(Point a, Point b, Point c, Point d);
// True if ab and cd cross at a single point interior to both segments.
bool segments_cross_properly(Point a, Point b, Point c, Point d);

double point_segment_distance(Point p, Point a, Point b);
// Closed triangle test, any orientation.
bool point_in_triangle(Point p, Point a, Point b, Point c);

// Even-odd containment over a set of closed rings (holes included).
bool point_in_rings(Point p, std::span<const std::vector<Point>> rings);
bool point_in_polygon(Point p, std::span<const Point> ring);

// Positive for counter-clockwise rings.
double signed_area(std::span<const Point> ring);
double perimeter(std::span<const Point> ring);
Point centroid(std::span<const Point> ring);

// True if no two non-adjacent edges of the closed ring intersect and no two
// adjacent edges overlap.
bool ring_is_simple(std::span<const Point> ring);

}  // namespace eulermerge
