#include "frobkit/tower.hpp"

#include <optional>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace {

// v_F(a_i), or nullopt for a zero coefficient.
std::optional<long> coeff_val(const TowerSpec& t, int i) {
  const OFElement& a = t.f.a(i);
  const Valuation v = a.valuation();
  if (v.exact) return v.value;
  if (v.value <= t.e) {
    throw PrecisionError("a_" + std::to_string(i) + " is 0 to only " + std::to_string(v.value) +
                         " digits; cannot compare with e");
  }
  return std::nullopt;
}

long pow_long(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TowerSpec make_tower(const FrobLift& f, int e0) {
  if (e0 < 1) throw DomainError("e0 must be >= 1");
  return TowerSpec{f, e0, f.field()->degree()};
}

int imin(const TowerSpec& t) {
  for (int i = 1; i <= t.p(); ++i) {
    const auto v = coeff_val(t, i);
    if (v && *v <= t.e) return i;
  }
  throw InternalError("no coefficient with v_F(a_i) <= e although a_p = 1");
}

Rational elementary_level(const TowerSpec& t, int n) {
  if (n < 1) throw DomainError("elementary level needs n >= 1");
  const int p = t.p();
  const int i0 = imin(t);
  const long en = pow_long(p, n) * t.e0;
  const long num = en * (*coeff_val(t, i0) + (i0 / p) * t.e) + i0 - p;
  Rational r(num, p - 1);
  r.canonicalize();
  return r;
}

Rational apf_infimum(const TowerSpec& t, int nmax) {
  Rational best;
  for (int n = 1; n <= nmax; ++n) {
    Rational q = elementary_level(t, n) / Rational(pow_long(t.p(), n));
    q.canonicalize();
    if (n == 1 || q < best) best = q;
  }
  return best;
}

Rational apf_constant(const TowerSpec& t) {
  const int p = t.p();
  const int i0 = imin(t);
  Rational c = Rational(t.e0, p - 1) * Rational(*coeff_val(t, i0) + (i0 / p) * t.e) -
               Rational(p - i0, static_cast<long>(p) * (p - 1));
  c.canonicalize();
  const Rational inf = apf_infimum(t, 10);
  if (c != inf) {
    throw InternalError("APF constant " + c.get_str() + " differs from the infimum " + inf.get_str() +
                        " over n <= 10");
  }
  if (c <= 0) throw InternalError("APF constant " + c.get_str() + " is not positive");
  return c;
}

RamificationPolygon ramification_polygon(const TowerSpec& t, int n) {
  if (n < 1) throw DomainError("ramification polygon needs n >= 1");
  const int p = t.p();
  const long en = pow_long(p, n) * t.e0;
  RamificationPolygon out;
  out.n = n;
  for (int i = 0; i <= p - 1; ++i) {
    Rational v;
    if (i == p - 1) {
      v = p;
    } else {
      // Candidate from j = p, then j = i+1 .. p-1.
      long best = en * t.e + p;
      int hits = 1;
      for (int j = i + 1; j <= p - 1; ++j) {
        const auto vj = coeff_val(t, j);
        if (!vj) continue;
        const long cand = en * *vj + j;
        if (cand < best) {
          best = cand;
          hits = 1;
        } else if (cand == best) {
          ++hits;
        }
      }
      if (hits > 1) out.tie = true;
      v = best;
    }
    out.points.push_back({i, v});
  }
  out.hull = newton_hull(out.points);
  const HullPoint first{0, out.points.front().y};
  const HullPoint last{p - 1, Rational(p)};
  out.single_segment = out.hull.vertices.size() == 2 && out.hull.vertices[0] == first && out.hull.vertices[1] == last;
  out.drop = out.points.front().y - Rational(p);
  out.drop_matches = out.drop == elementary_level(t, n) * Rational(p - 1);
  return out;
}

}  // namespace frobkit
