#pragma once

#include <string>
#include <utility>
#include <vector>

#include "frobkit/rational.hpp"

namespace frobkit {

struct HullPoint {
  long x = 0;
  Rational y;
  bool operator==(const HullPoint&) const = default;
};

struct NewtonPolygon {
  std::vector<HullPoint> vertices;
  // slopes[i] is the slope between vertices i and i+1.
  std::vector<Rational> slopes;

  bool single_segment() const { return vertices.size() == 2; }
};

// Lower convex hull. Duplicate x keep the smallest y; collinear interior
// points are dropped. Throws DomainError on empty input.
NewtonPolygon newton_hull(std::vector<HullPoint> points);

}  // namespace frobkit
