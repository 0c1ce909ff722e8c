#include <doctest.h>

#include "frobkit/errors.hpp"
#include "frobkit/newton.hpp"
#include "frobkit/presets.hpp"
#include "frobkit/series.hpp"
#include "generators.hpp"

using namespace frobkit;
using frobkit::testing::Rng;

namespace {

constexpr int kPrec = 20;
constexpr int kCap = 30;

USeries ints(const FieldPtr& F, std::vector<long> c, int cap = kCap) {
  return USeries::from_integers(F, c, kPrec, cap);
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("products") {
  auto F = Field::rational(3);
  Rng rng(1);
  const USeries x = frobkit::testing::random_series(rng, F, 8, kPrec, kCap);
  CHECK((USeries::one(F, kPrec, kCap) * x).congruent(x));
  CHECK((ints(F, {0, 1}) * ints(F, {0, 1})).congruent(ints(F, {0, 0, 1})));
  CHECK((ints(F, {1, 1}) * ints(F, {1, -1})).congruent(ints(F, {1, 0, -1})));
}

TEST_CASE("composition") {
  auto F = Field::rational(3);
  Rng rng(2);
  const USeries h = frobkit::testing::random_series(rng, F, 10, kPrec, kCap);
  CHECK(compose(h, ints(F, {0, 1})).congruent(h));
  CHECK(compose(ints(F, {0, 0, 1}), ints(F, {0, 1, 1})).congruent(ints(F, {0, 0, 1, 2, 1})));

  // ((1+x)^3 - 1) o ((1+x)^3 - 1) = (1+u)^9 - 1.
  const USeries f = make_preset("cyclotomic", F, kPrec).f.series(kCap);
  std::vector<long> expect(10, 0);
  for (unsigned k = 1; k <= 9; ++k) expect[k] = binom(9, k).get_si();
  CHECK(compose(f, f).congruent(ints(F, expect)));
  CHECK_THROWS_AS(compose(h, ints(F, {1, 1})), DomainError);
}

TEST_CASE("composition agrees with Horner evaluation") {
  auto F = Field::make(3, {mpz_class(-3), mpz_class(0), mpz_class(1)});
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const USeries h = frobkit::testing::random_series(rng, F, 12, kPrec, kCap);
    USeries g = frobkit::testing::random_series(rng, F, 6, kPrec, kCap);
    g.set(0, FElement::exact_zero(F));
    CHECK(compose(h, g).congruent(frobkit::testing::horner_compose(h, g)));
  }
}

TEST_CASE("frobenius") {
  auto F = Field::rational(3);
  const FrobLift f = make_preset("cyclotomic", F, kPrec).f;
  const USeries u = ints(F, {0, 1});
  CHECK(frobenius(u, f).congruent(f.series(kCap)));
  CHECK(frobenius(u, f).congruent(ints(F, {0, 3, 3, 1})));
  Rng rng(4);
  const USeries x = frobkit::testing::random_series(rng, F, 6, kPrec, kCap);
  CHECK(frobenius(x, f, 0).congruent(x));
}

TEST_CASE("Weierstrass degree") {
  auto F = Field::rational(5);
  const EisensteinE E = make_preset("classical", F, kPrec).E;
  CHECK(wdeg(E.series(kCap)) == std::optional<int>(2));
  Rng rng(5);
  CHECK(wdeg(frobkit::testing::random_unit_series(rng, F, 5, kPrec, kCap)) == std::optional<int>(0));
  CHECK_FALSE(wdeg(ints(F, {0, 5})).has_value());
}

TEST_CASE("E-order") {
  auto F = Field::rational(3);
  const EisensteinE E = make_preset("lubin-tate", F, kPrec).E;
  const USeries e = E.series(kCap);
  const EOrder two = e_order(e * e, E);
  CHECK(two.k == 2);
  CHECK(two.cofactor.congruent(USeries::one(F, kPrec, kCap)));

  Rng rng(6);
  CHECK(e_order(frobkit::testing::random_unit_series(rng, F, 4, kPrec, kCap), E).k == 0);

  const Preset cyc = make_preset("cyclotomic", F, kPrec);
  const EOrder one = e_order(cyc.f.series(kCap), cyc.E);
  CHECK(one.k == 1);
  CHECK(one.cofactor.congruent(ints(F, {0, 1})));
}

TEST_CASE("Newton hulls") {
  const NewtonPolygon one = newton_hull({{0, Rational(3)}});
  CHECK(one.vertices.size() == 1);

  const NewtonPolygon v = newton_hull({{0, Rational(2)}, {1, Rational(0)}, {2, Rational(2)}});
  REQUIRE(v.vertices.size() == 3);
  CHECK(v.slopes == std::vector<Rational>{Rational(-2), Rational(2)});

  const NewtonPolygon line = newton_hull({{0, Rational(0)}, {1, Rational(1)}, {2, Rational(2)}});
  CHECK(line.vertices == std::vector<HullPoint>{{0, Rational(0)}, {2, Rational(2)}});

  const NewtonPolygon dup = newton_hull({{0, Rational(5)}, {0, Rational(1)}, {3, Rational(1)}});
  CHECK(dup.vertices.front() == HullPoint{0, Rational(1)});
  CHECK_THROWS_AS(newton_hull({}), DomainError);
}

TEST_CASE("property: hull slopes strictly increase") {
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<HullPoint> pts;
    const int n = rng.uniform(1, 9);
    for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(0, 12), make_rational(rng.uniform(-20, 20), rng.uniform(1, 4))});
    const NewtonPolygon h = newton_hull(pts);
    for (std::size_t i = 1; i < h.slopes.size(); ++i) CHECK(h.slopes[i - 1] < h.slopes[i]);
    for (std::size_t i = 1; i < h.vertices.size(); ++i) CHECK(h.vertices[i - 1].x < h.vertices[i].x);
    // Every input point lies on or above the hull.
    for (const auto& q : pts) {
      for (std::size_t i = 0; i + 1 < h.vertices.size(); ++i) {
        const auto& a = h.vertices[i];
        const auto& b = h.vertices[i + 1];
        if (q.x < a.x || q.x > b.x) continue;
        CHECK(q.y >= a.y + h.slopes[i] * Rational(q.x - a.x));
      }
    }
  }
}

TEST_CASE("gauge") {
  auto F = Field::rational(3);
  const int e0 = 2;
  const OFElement three(F, 3L, kPrec);
  const USeries gen = USeries::monomial(divide(OFElement::one(F, kPrec), three), e0 * 3, kCap);
  CHECK(gauge_alpha(gen, e0).value == 0);
  CHECK(gauge_alpha(USeries::constant(FElement(three), kCap), e0).value == 1);
  CHECK(gauge_alpha(ints(F, {0, 1}), e0).value == 0);
  CHECK(gauge_alpha(USeries::zero(F, kCap), e0).infinite);
}

TEST_CASE("property: frobenius is a ring homomorphism") {
  Rng rng(8);
  auto F = Field::rational(3);
  for (int t = 0; t < 10; ++t) {
    const FrobLift f = frobkit::testing::random_froblift(rng, F, kPrec, 1, false);
    const USeries x = frobkit::testing::random_series(rng, F, 7, kPrec, kCap);
    const USeries y = frobkit::testing::random_series(rng, F, 7, kPrec, kCap);
    CHECK(frobenius(x * y, f).congruent(frobenius(x, f) * frobenius(y, f)));
    CHECK(frobenius(x + y, f).congruent(frobenius(x, f) + frobenius(y, f)));
    CHECK(frobenius(frobenius(x, f, 1), f, 2).congruent(frobenius(x, f, 3)));
  }
}

TEST_CASE("property: Weierstrass degree is additive") {
  Rng rng(9);
  auto F = Field::rational(5);
  for (int t = 0; t < 30; ++t) {
    USeries x = frobkit::testing::random_series(rng, F, 6, kPrec, kCap);
    USeries y = frobkit::testing::random_series(rng, F, 6, kPrec, kCap);
    const auto wx = wdeg(x);
    const auto wy = wdeg(y);
    if (!wx || !wy) continue;
    CHECK(wdeg(x * y) == std::optional<int>(*wx + *wy));
  }
}

TEST_CASE("property: e_order shifts by k") {
  Rng rng(10);
  auto F = Field::rational(3);
  for (int t = 0; t < 20; ++t) {
    const EisensteinE E = frobkit::testing::random_eisenstein(rng, F, rng.uniform(1, 3), kPrec);
    const USeries x = frobkit::testing::random_unit_series(rng, F, 4, kPrec, kCap) *
                      (rng.coin() ? E.series(kCap) : USeries::one(F, kPrec, kCap));
    const int base = e_order(x, E).k;
    const int k = rng.uniform(1, 3);
    USeries y = x;
    for (int i = 0; i < k; ++i) y = y * E.series(kCap);
    CHECK(e_order(y, E).k == base + k);
  }
}

TEST_CASE("property: gauge is superadditive") {
  Rng rng(12);
  auto F = Field::rational(3);
  const OFElement three(F, 3L, kPrec);
  for (int t = 0; t < 50; ++t) {
    // Allow denominators so the bound is tested on genuine F-series.
    const int sx = rng.uniform(0, 2);
    const int sy = rng.uniform(0, 2);
    const FElement dx = FElement::from_unit(OFElement::one(F, kPrec), -sx);
    const FElement dy = FElement::from_unit(OFElement::one(F, kPrec), -sy);
    const USeries x = dx * frobkit::testing::random_series(rng, F, 20, kPrec, kCap);
    const USeries y = dy * frobkit::testing::random_series(rng, F, 20, kPrec, kCap);
    const Gauge gx = gauge_alpha(x, 2), gy = gauge_alpha(y, 2);
    const Gauge gp = gauge_alpha(x * y, 2), gs = gauge_alpha(x + y, 2);
    if (gx.infinite || gy.infinite) continue;
    CHECK((gp.infinite || gp.value >= gx.value + gy.value));
    CHECK((gs.infinite || gs.value >= std::min(gx.value, gy.value)));
  }
}

TEST_CASE("property: iterates of f tend to 0 in the gauge when pi^(r+1) | a_1") {
  Rng rng(13);
  auto F = Field::rational(3);
  const int e0 = 1, r = 1, cap = 45, prec = 40;
  const long visible = cap / (e0 * 3);
  for (int t = 0; t < 5; ++t) {
    const FrobLift f = frobkit::testing::random_froblift(rng, F, prec, r + 1, true);
    long prev = LONG_MIN;
    for (int n = 1; n <= 6; ++n) {
      const Gauge g = gauge_alpha(f.iterate(n, cap), e0);
      REQUIRE(g.exact);
      // The unseen tail cannot lower the gauge below `visible`.
      REQUIRE(g.value < visible);
      const long cur = g.value - r * n;
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

}
