#include <doctest.h>

#include "frobkit/errors.hpp"
#include "frobkit/intertwine.hpp"
#include "frobkit/presets.hpp"
#include "generators.hpp"

using namespace frobkit;
using frobkit::testing::Rng;

namespace {

FrobLift lift(const FieldPtr& F, std::vector<long> a, int prec) {
  std::vector<OFElement> c;
  for (long x : a) c.emplace_back(F, x, prec);
  return FrobLift::make(c);
}

USeries x_series(const FieldPtr& F, std::vector<long> c, int prec, int cap) {
  return USeries::from_integers(F, c, prec, cap);
}

}  // namespace

TEST_SUITE("intertwine") {

TEST_CASE("compatibility") {
  auto F = Field::rational(3);
  const FrobLift cyc = make_preset("cyclotomic", F, 12).f;
  const Compatibility self = check_compatible(cyc, cyc);
  CHECK(self.ok);
  CHECK(self.s == 1);

  const Compatibility c = check_compatible(cyc, lift(F, {3, 0, 1}, 12));
  CHECK(c.ok);
  CHECK(c.s == 1);

  const Compatibility bad = check_compatible(lift(F, {3, 0, 1}, 12), lift(F, {0, 3, 1}, 12));
  CHECK_FALSE(bad.ok);
  CHECK(bad.s == 1);
  CHECK(bad.s2 == 2);
}

TEST_CASE("mu0") {
  auto F = Field::rational(3);
  const FrobLift cyc = make_preset("cyclotomic", F, 12).f;
  const auto one = compute_mu0(cyc, cyc);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == OFElement::one(F, 12));

  const auto four = compute_mu0(lift(F, {0, 3, 1}, 12), lift(F, {0, 12, 1}, 12));
  REQUIRE(four.size() == 1);
  CHECK(four[0].congruent(OFElement(F, 4L, 12)));

  // s = 3 needs a square root of a'_3 / a_3 = 2, a non-square mod 5.
  auto F5 = Field::rational(5);
  CHECK_THROWS_AS(compute_mu0(lift(F5, {0, 0, 5, 0, 1}, 12), lift(F5, {0, 0, 10, 0, 1}, 12)), DomainError);
  // Ratio 4 has the two square roots 2 and 3.
  CHECK(compute_mu0(lift(F5, {0, 0, 5, 0, 1}, 12), lift(F5, {0, 0, 20, 0, 1}, 12)).size() == 2);

  CHECK_THROWS_AS(compute_mu0(lift(F, {3, 0, 1}, 12), lift(F, {6, 0, 1}, 12)), DomainError);
}

TEST_CASE("identity intertwiner") {
  auto F = Field::rational(5);
  const FrobLift f = make_preset("lubin-tate", F, 40).f;
  const IntertwineResult r = solve_intertwiner(f, f, OFElement::one(F, 40), 20, 10);
  CHECK(r.xi.congruent(x_series(F, {0, 1}, 40, 20)));
  CHECK(r.integral);
}

TEST_CASE("cyclotomic against u^3 + 3u") {
  auto F = Field::rational(3);
  const int M = 25, N = 10;
  const FrobLift f = lift(F, {3, 0, 1}, 60);
  const FrobLift f2 = make_preset("cyclotomic", F, 60).f;
  const int need = required_precision(f2, f, M, N);
  CHECK(need == 35);
  const FrobLift fa = make_preset("cyclotomic", F, need).f;
  const FrobLift fb = lift(F, {3, 0, 1}, need);
  const IntertwineResult r = solve_intertwiner(fa, fb, OFElement::one(F, need), M, N);
  CHECK(r.integral);
  CHECK(r.xi.is_integral());
  CHECK(verify_intertwine(fa, fb, r.xi, M, N));
  CHECK(r.verified_M == M);
  CHECK(r.verified_N == N);
  CHECK_THROWS_AS(solve_intertwiner(make_preset("cyclotomic", F, need - 1).f, fb, OFElement::one(F, need), M, N),
                  PrecisionError);
}

TEST_CASE("s = 2 with mu0 = 4") {
  auto F = Field::rational(3);
  const int M = 15, N = 8;
  const int need = required_lift_precision(lift(F, {0, 3, 1}, 60), lift(F, {0, 12, 1}, 60), M, N);
  CHECK(need == required_precision(lift(F, {0, 3, 1}, 60), lift(F, {0, 12, 1}, 60), M, N) + 1);
  CHECK_THROWS_AS(solve_intertwiner_all(lift(F, {0, 3, 1}, need - 1), lift(F, {0, 12, 1}, need - 1), M, N), PrecisionError);
  const FrobLift f = lift(F, {0, 3, 1}, need);
  const FrobLift f2 = lift(F, {0, 12, 1}, need);
  const auto all = solve_intertwiner_all(f, f2, M, N);
  REQUIRE(all.size() == 1);
  CHECK(all[0].mu0.congruent(OFElement(F, 4L, need)));
  CHECK(verify_intertwine(f, f2, all[0].xi, M, N));
}

TEST_CASE("verify_intertwine rejects a wrong xi") {
  auto F = Field::rational(3);
  const FrobLift f = make_preset("classical", F, 20).f;
  CHECK(verify_intertwine(f, f, x_series(F, {0, 1}, 20, 10), 10, 10));
  CHECK_FALSE(verify_intertwine(f, f, x_series(F, {0, 1, 1}, 20, 10), 5, 10));
}

TEST_CASE("property: round trip, determinism and integrality") {
  Rng rng(41);
  for (int p : {3, 5}) {
    auto F = Field::rational(p);
    for (int t = 0; t < 6; ++t) {
      // Two lifts sharing a_1 with v(a_1) = 1 differ in the higher terms.
      const FrobLift f = frobkit::testing::random_froblift(rng, F, 60, 1, true);
      std::vector<OFElement> c = f.coefficients();
      for (int i = 1; i + 1 < p; ++i) c[static_cast<std::size_t>(i)] = frobkit::testing::random_of(rng, F, 59).times_uniformizer_power(1);
      const FrobLift f2 = FrobLift::make(c);
      const OFElement mu0 = frobkit::testing::random_unit(rng, F, 60);
      const int M = 12;
      const IntertwineResult lo = solve_intertwiner(f, f2, mu0, M, 6);
      const IntertwineResult hi = solve_intertwiner(f, f2, mu0, M, 12);
      CHECK(lo.integral);
      CHECK(hi.integral);
      CHECK(verify_intertwine(f, f2, lo.xi, lo.verified_M, lo.verified_N));
      CHECK(verify_intertwine(f, f2, hi.xi, hi.verified_M, hi.verified_N));
      CHECK(hi.xi.with_abs_prec(6).congruent(lo.xi.with_abs_prec(6)));
    }
  }
}

TEST_CASE("property: s > 1 results do not depend on the working precision") {
  auto F = Field::rational(3);
  Rng rng(43);
  for (int t = 0; t < 5; ++t) {
    const OFElement a2 = frobkit::testing::random_with_valuation(rng, F, 1, 60);
    const OFElement b2 = frobkit::testing::random_with_valuation(rng, F, 1, 60);
    const FrobLift f = FrobLift::make({OFElement::zero(F, 60), a2, OFElement::one(F, 60)});
    const FrobLift f2 = FrobLift::make({OFElement::zero(F, 60), b2, OFElement::one(F, 60)});
    const auto lo = solve_intertwiner_all(f, f2, 10, 6);
    const auto hi = solve_intertwiner_all(f, f2, 10, 14);
    REQUIRE(lo.size() == 1);
    REQUIRE(hi.size() == 1);
    CHECK(hi[0].xi.with_abs_prec(6).congruent(lo[0].xi.with_abs_prec(6)));
  }
}

TEST_CASE("property: intertwiners compose") {
  auto F = Field::rational(3);
  const int M = 16, N = 8;
  const int prec = N + M;
  const FrobLift f = make_preset("cyclotomic", F, prec).f;
  const FrobLift f1 = lift(F, {3, 0, 1}, prec);
  const FrobLift f2 = lift(F, {3, 3, 1}, prec);
  const OFElement one = OFElement::one(F, prec);
  const IntertwineResult a = solve_intertwiner(f, f1, one, M, N);
  const IntertwineResult b = solve_intertwiner(f1, f2, one, M, N);
  CHECK(verify_intertwine(f, f2, compose(a.xi, b.xi), M, N));
}

}
