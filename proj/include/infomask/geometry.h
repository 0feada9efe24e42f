#ifndef INFOMASK_GEOMETRY_H_
#define INFOMASK_GEOMETRY_H_

#include <vector>

namespace infomask {

inline constexpr double kVertexTolerance = 1e-9;

struct Point2 {
  double x = 0.0;  // delta_x, bits
  double y = 0.0;  // delta_y, bits
  friend bool operator==(const Point2&, const Point2&) = default;
};

// Closed convex polygon in the (delta_x, delta_y) plane, vertices in
// counter-clockwise order starting from the lowest-then-leftmost point.
// Degenerate regions are allowed: no vertices (empty), one (a point) or two
// (a segment).
class Region2D {
 public:
  Region2D() = default;

  // Convex hull of the given points, with near-duplicates and collinear
  // middle vertices removed.
  static Region2D Hull(std::vector<Point2> points);
  static Region2D Box(double x_max, double y_max);

  bool empty() const { return vertices_.empty(); }
  const std::vector<Point2>& vertices() const { return vertices_; }

  double Area() const;
  Point2 Centroid() const;
  // Most negative cross product over consecutive edge pairs (0 if convex).
  double ConvexityResidual() const;

 private:
  std::vector<Point2> vertices_;
};

Region2D Intersect(const Region2D& a, const Region2D& b);

// True iff p lies in the region or within `tol` of it.
bool Contains(const Region2D& region, Point2 p, double tol);

// Every vertex of `inner` lies within `tol` of `outer`. An empty inner
// region is contained in anything.
bool ContainedIn(const Region2D& inner, const Region2D& outer, double tol);

double DistanceToSegment(Point2 p, Point2 a, Point2 b);

}  // namespace infomask

#endif  // INFOMASK_GEOMETRY_H_
