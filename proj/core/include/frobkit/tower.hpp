#pragma once

#include <vector>

#include "frobkit/newton.hpp"
#include "frobkit/series.hpp"

namespace frobkit {

// The tower K_n = K(pi_{n-1}) cut out by iterates of f, with e0 = [K : F]
// and e = v_F(p).
struct TowerSpec {
  FrobLift f;
  int e0 = 1;
  int e = 1;
  int p() const { return f.p(); }
};

TowerSpec make_tower(const FrobLift& f, int e0);

// min { i : v_F(a_i) <= e }.
int imin(const TowerSpec& t);

// i_n = (e_n (v_F(a_imin) + floor(imin/p) e) + imin - p) / (p - 1), e_n = p^n e0.
Rational elementary_level(const TowerSpec& t, int n);

// Closed form of inf_n i_n / p^n, cross-checked against n <= 10 and for
// positivity (InternalError on failure).
Rational apf_constant(const TowerSpec& t);
// min over 1 <= n <= nmax of i_n / p^n, computed directly.
Rational apf_infimum(const TowerSpec& t, int nmax);

struct RamificationPolygon {
  int n = 1;
  // (i, v_n(b_i)) for i = 0..p-1, from the valuation min-formula.
  std::vector<HullPoint> points;
  NewtonPolygon hull;
  bool single_segment = false;
  // Two candidates attained the minimum for some b_i, so the true valuation
  // may exceed the recorded value.
  bool tie = false;
  // v_n(b_0) - p, and whether it equals i_n (p - 1).
  Rational drop;
  bool drop_matches = false;
  bool ok() const { return single_segment && drop_matches && !tie; }
};

RamificationPolygon ramification_polygon(const TowerSpec& t, int n);

}  // namespace frobkit
