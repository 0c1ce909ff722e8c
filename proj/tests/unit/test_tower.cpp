#include <doctest.h>

#include "frobkit/presets.hpp"
#include "frobkit/tower.hpp"
#include "generators.hpp"

using namespace frobkit;
using frobkit::testing::Rng;

namespace {

constexpr int kPrec = 12;

FrobLift lift(const FieldPtr& F, std::vector<long> a) {
  std::vector<OFElement> c;
  for (long x : a) c.emplace_back(F, x, kPrec);
  return FrobLift::make(c);
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_SUITE("tower") {

TEST_CASE("imin") {
  auto F3 = Field::rational(3);
  CHECK(imin(make_tower(make_preset("classical", F3, kPrec).f, 2)) == 3);
  CHECK(imin(make_tower(make_preset("cyclotomic", F3, kPrec).f, 2)) == 1);
  CHECK(imin(make_tower(lift(F3, {9, 0, 1}), 1)) == 3);
}

TEST_CASE("cyclotomic levels are 3^n - 1") {
  const TowerSpec t = make_tower(make_preset("cyclotomic", Field::rational(3), kPrec).f, 2);
  for (int n = 1; n <= 6; ++n) CHECK(elementary_level(t, n) == Rational(ipow(3, n) - 1));
  const RamificationPolygon poly = ramification_polygon(t, 1);
  REQUIRE(poly.single_segment);
  CHECK(poly.hull.slopes.front() == -elementary_level(t, 1));
  CHECK(apf_constant(t) == make_rational(2, 3));
}

TEST_CASE("classical and Lubin-Tate levels") {
  for (int p : {3, 5, 7}) {
    auto F = Field::rational(p);
    for (int e0 : {1, 2, 3}) {
      const TowerSpec cl = make_tower(make_preset("classical", F, kPrec).f, e0);
      const TowerSpec lt = make_tower(make_preset("lubin-tate", F, kPrec).f, e0);
      for (int n = 1; n <= 4; ++n) {
        CHECK(elementary_level(cl, n) == make_rational(ipow(p, n) * e0, p - 1));
        CHECK(elementary_level(lt, n) == make_rational(ipow(p, n) * e0 + 1 - p, p - 1));
      }
      CHECK(apf_constant(cl) == make_rational(e0, p - 1));
    }
  }
  // Over a ramified base the classical levels scale with e.
  auto F = Field::make(3, {mpz_class(-3), mpz_class(0), mpz_class(1)});
  const TowerSpec cl = make_tower(make_preset("classical", F, kPrec).f, 2);
  CHECK(elementary_level(cl, 1) == Rational(6));
}

TEST_CASE("classical polygon at n = 1") {
  const TowerSpec t = make_tower(make_preset("classical", Field::rational(5), kPrec).f, 2);
  const RamificationPolygon poly = ramification_polygon(t, 1);
  // Only j = p contributes: v_1(b_i) = e_1 e + p for i < p - 1 and p at i = p - 1.
  for (int i = 0; i + 1 < 5; ++i) CHECK(poly.points[static_cast<std::size_t>(i)].y == Rational(10 + 5));
  CHECK(poly.points.back().y == Rational(5));
  CHECK(poly.ok());
}

TEST_CASE("property: apf constant is positive and is the infimum at n = 1") {
  Rng rng(1);
  for (int p : {2, 3, 5}) {
    auto F = Field::rational(p);
    for (int t = 0; t < 20; ++t) {
      const FrobLift f = frobkit::testing::random_froblift(rng, F, kPrec, rng.uniform(1, 3), rng.coin());
      const TowerSpec tw = make_tower(f, rng.uniform(1, 4));
      const Rational c = apf_constant(tw);
      CHECK(c > 0);
      CHECK(apf_infimum(tw, 10) == c);
      Rational prev = elementary_level(tw, 1) / Rational(p);
      for (int n = 2; n <= 10; ++n) {
        const Rational cur = elementary_level(tw, n) / Rational(ipow(p, n));
        CHECK(cur >= prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("property: apf constant matches the closed form when v(a_1) <= e") {
  Rng rng(2);
  auto F = Field::make(5, {mpz_class(5), mpz_class(0), mpz_class(1)});
  for (int t = 0; t < 20; ++t) {
    const int v = rng.uniform(1, F->degree());
    const FrobLift f = frobkit::testing::random_froblift(rng, F, kPrec, v, true);
    const int e0 = rng.uniform(1, 4);
    const TowerSpec tw = make_tower(f, e0);
    REQUIRE(imin(tw) == 1);
    CHECK(apf_constant(tw) == make_rational(e0 * v, 4) - make_rational(1, 5));
  }
}

TEST_CASE("property: every preset gives a single segment at n = 1..4") {
  for (int p : {3, 5}) {
    auto F = Field::rational(p);
    for (const auto& name : preset_names()) {
      const Preset pr = make_preset(name, F, kPrec);
      const TowerSpec t = make_tower(pr.f, pr.E.degree());
      for (int n = 1; n <= 4; ++n) {
        const RamificationPolygon poly = ramification_polygon(t, n);
        CHECK_MESSAGE(poly.single_segment, name << " n=" << n);
        CHECK(poly.drop_matches);
        for (std::size_t i = 1; i < poly.hull.slopes.size(); ++i) CHECK(poly.hull.slopes[i - 1] < poly.hull.slopes[i]);
      }
    }
  }
}

}
