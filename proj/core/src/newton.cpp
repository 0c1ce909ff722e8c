#include "frobkit/newton.hpp"

#include <algorithm>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace {

// Cross product sign of (b - a) x (c - a); <= 0 means b is not strictly below ac.
Rational cross(const HullPoint& a, const HullPoint& b, const HullPoint& c) {
  return Rational(b.x - a.x) * (c.y - a.y) - (b.y - a.y) * Rational(c.x - a.x);
}

}  // namespace

NewtonPolygon newton_hull(std::vector<HullPoint> points) {
  if (points.empty()) throw DomainError("Newton polygon of an empty point set");
  std::sort(points.begin(), points.end(), [](const HullPoint& a, const HullPoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  std::vector<HullPoint> uniq;
  for (const auto& pt : points) {
    if (uniq.empty() || uniq.back().x != pt.x) uniq.push_back(pt);
  }
  std::vector<HullPoint> hull;
  for (const auto& pt : uniq) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  NewtonPolygon poly;
  poly.vertices = hull;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Rational s = (hull[i + 1].y - hull[i].y) / Rational(hull[i + 1].x - hull[i].x);
    s.canonicalize();
    poly.slopes.push_back(s);
  }
  return poly;
}

}  // namespace frobkit
