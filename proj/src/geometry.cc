#include "infomask/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace infomask {
namespace {

double Cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double Dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Drops vertices that sit within kVertexTolerance of the segment joining
// their neighbours, and coincident vertices.
std::vector<Point2> Simplify(std::vector<Point2> v) {
  bool changed = true;
  while (changed && v.size() >= 2) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() >= 2; ++i) {
      const Point2 cur = v[i];
      const Point2 next = v[(i + 1) % v.size()];
      if (Dist(cur, next) <= kVertexTolerance) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>((i + 1) % v.size()));
        changed = true;
        break;
      }
      if (v.size() >= 3) {
        const Point2 prev = v[(i + v.size() - 1) % v.size()];
        if (DistanceToSegment(cur, prev, next) <= kVertexTolerance) {
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
  }
  return v;
}

// Rotates so the lowest (then leftmost) vertex comes first.
void Canonicalize(std::vector<Point2>& v) {
  if (v.empty()) return;
  auto it = std::min_element(v.begin(), v.end(), [](Point2 a, Point2 b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  std::rotate(v.begin(), it, v.end());
}

bool Inside(Point2 p, Point2 a, Point2 b) { return Cross(a, b, p) >= -1e-12; }

Point2 LineIntersection(Point2 p, Point2 q, Point2 a, Point2 b) {
  const double d1 = Cross(a, b, p);
  const double d2 = Cross(a, b, q);
  const double t = d1 / (d1 - d2);
  return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

// Sutherland-Hodgman: clip `subject` (any convex vertex list, possibly a
// segment) against a proper convex CCW polygon.
std::vector<Point2> Clip(std::vector<Point2> subject, const std::vector<Point2>& clip) {
  for (std::size_t e = 0; e < clip.size() && !subject.empty(); ++e) {
    const Point2 a = clip[e];
    const Point2 b = clip[(e + 1) % clip.size()];
    std::vector<Point2> out;
    for (std::size_t i = 0; i < subject.size(); ++i) {
      const Point2 cur = subject[i];
      const Point2 prev = subject[(i + subject.size() - 1) % subject.size()];
      const bool in_cur = Inside(cur, a, b);
      const bool in_prev = Inside(prev, a, b);
      if (in_cur) {
        if (!in_prev) out.push_back(LineIntersection(prev, cur, a, b));
        out.push_back(cur);
      } else if (in_prev) {
        out.push_back(LineIntersection(prev, cur, a, b));
      }
    }
    subject = std::move(out);
  }
  return subject;
}

Region2D IntersectSegments(const Region2D& s1, const Region2D& s2) {
  const Point2 p = s1.vertices()[0];
  const Point2 q = s1.vertices()[1];
  const Point2 r = s2.vertices()[0];
  const Point2 t = s2.vertices()[1];
  const double dx1 = q.x - p.x, dy1 = q.y - p.y;
  const double dx2 = t.x - r.x, dy2 = t.y - r.y;
  const double denom = dx1 * dy2 - dy1 * dx2;
  const double len1 = std::hypot(dx1, dy1);
  if (std::abs(denom) > 1e-12 * len1 * std::hypot(dx2, dy2)) {
    const double u = ((r.x - p.x) * dy2 - (r.y - p.y) * dx2) / denom;
    const Point2 hit{p.x + u * dx1, p.y + u * dy1};
    if (DistanceToSegment(hit, p, q) <= kVertexTolerance &&
        DistanceToSegment(hit, r, t) <= kVertexTolerance) {
      return Region2D::Hull({hit});
    }
    return {};
  }
  // Parallel: overlap only if collinear.
  if (DistanceToSegment(r, p, q) > kVertexTolerance &&
      std::abs(Cross(p, q, r)) / len1 > kVertexTolerance) {
    return {};
  }
  auto proj = [&](Point2 z) { return ((z.x - p.x) * dx1 + (z.y - p.y) * dy1) / len1; };
  const double lo = std::max(0.0, std::min(proj(r), proj(t)));
  const double hi = std::min(len1, std::max(proj(r), proj(t)));
  if (lo > hi + kVertexTolerance) return {};
  auto at = [&](double s) { return Point2{p.x + s * dx1 / len1, p.y + s * dy1 / len1}; };
  return Region2D::Hull({at(lo), at(std::max(lo, hi))});
}

}  // namespace

double DistanceToSegment(Point2 p, Point2 a, Point2 b) {
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return Dist(p, a);
  const double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  return Dist(p, {a.x + t * dx, a.y + t * dy});
}

Region2D Region2D::Hull(std::vector<Point2> points) {
  Region2D region;
  if (points.empty()) return region;
  std::sort(points.begin(), points.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::vector<Point2> hull(2 * points.size());
  std::size_t k = 0;
  for (const Point2& p : points) {
    while (k >= 2 && Cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    const Point2 p = points[i];
    while (k >= lower && Cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  hull.resize(k > 1 ? k - 1 : k);
  hull = Simplify(std::move(hull));
  // A fully collinear input collapses to its two extreme points.
  if (hull.size() == 2 && Dist(hull[0], hull[1]) <= kVertexTolerance) hull.pop_back();
  Canonicalize(hull);
  region.vertices_ = std::move(hull);
  return region;
}

Region2D Region2D::Box(double x_max, double y_max) {
  return Hull({{0.0, 0.0}, {x_max, 0.0}, {x_max, y_max}, {0.0, y_max}});
}

double Region2D::Area() const {
  double a = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point2 p = vertices_[i];
    const Point2 q = vertices_[(i + 1) % vertices_.size()];
    a += p.x * q.y - q.x * p.y;
  }
  return 0.5 * a;
}

Point2 Region2D::Centroid() const {
  if (vertices_.empty()) return {};
  if (vertices_.size() < 3) {
    Point2 c;
    for (const auto& v : vertices_) {
      c.x += v.x / static_cast<double>(vertices_.size());
      c.y += v.y / static_cast<double>(vertices_.size());
    }
    return c;
  }
  double cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point2 p = vertices_[i];
    const Point2 q = vertices_[(i + 1) % vertices_.size()];
    const double w = p.x * q.y - q.x * p.y;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  const double a = Area();
  return {cx / (6.0 * a), cy / (6.0 * a)};
}

double Region2D::ConvexityResidual() const {
  if (vertices_.size() < 3) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point2 a = vertices_[i];
    const Point2 b = vertices_[(i + 1) % vertices_.size()];
    const Point2 c = vertices_[(i + 2) % vertices_.size()];
    worst = std::min(worst, Cross(a, b, c));
  }
  return worst;
}

Region2D Intersect(const Region2D& a, const Region2D& b) {
  if (a.empty() || b.empty()) return {};
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  if (va.size() == 1) return Contains(b, va[0], kVertexTolerance) ? a : Region2D{};
  if (vb.size() == 1) return Contains(a, vb[0], kVertexTolerance) ? b : Region2D{};
  if (va.size() == 2 && vb.size() == 2) return IntersectSegments(a, b);
  if (vb.size() >= 3) return Region2D::Hull(Clip(va, vb));
  return Region2D::Hull(Clip(vb, va));
}

bool Contains(const Region2D& region, Point2 p, double tol) {
  const auto& v = region.vertices();
  if (v.empty()) return false;
  if (v.size() == 1) return Dist(p, v[0]) <= tol;
  if (v.size() == 2) return DistanceToSegment(p, v[0], v[1]) <= tol;
  bool inside = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (Cross(v[i], v[(i + 1) % v.size()], p) < 0.0) {
      inside = false;
      break;
    }
  }
  if (inside) return true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    best = std::min(best, DistanceToSegment(p, v[i], v[(i + 1) % v.size()]));
  }
  return best <= tol;
}

bool ContainedIn(const Region2D& inner, const Region2D& outer, double tol) {
  for (const auto& p : inner.vertices()) {
    if (!Contains(outer, p, tol)) return false;
  }
  return true;
}

}  // namespace infomask
