#include <doctest.h>

#include "frobkit/errors.hpp"
#include "frobkit/exact.hpp"
#include "frobkit/padic.hpp"
#include "generators.hpp"

using namespace frobkit;
using frobkit::testing::Rng;

namespace {

FieldPtr sqrt3() { return Field::make(3, {mpz_class(-3), mpz_class(0), mpz_class(1)}); }

// Schoolbook product in Z[x]/(g), g monic, no p-adic reduction.
std::vector<mpz_class> naive_mul(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                                 const std::vector<mpz_class>& g) {
  const std::size_t e = g.size() - 1;
  std::vector<mpz_class> r(2 * e, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (std::size_t k = r.size(); k-- > e;) {
    const mpz_class c = r[k];
    r[k] = 0;
    for (std::size_t i = 0; i < e; ++i) r[k - e + i] -= c * g[i];
  }
  r.resize(e);
  return r;
}

}  // namespace

TEST_SUITE("scalars") {

TEST_CASE("zero is the additive identity") {
  auto F = sqrt3();
  Rng rng(11);
  const OFElement x = frobkit::testing::random_of(rng, F, 10);
  CHECK(OFElement::zero(F, 10) + x == x);
}

TEST_CASE("pi squared is 3 when pi^2 = 3") {
  auto F = sqrt3();
  const OFElement pi = OFElement::uniformizer(F, 10);
  const OFElement sq = pi * pi;
  CHECK(sq.congruent(OFElement(F, 3L, 10)));
  CHECK(sq.valuation() == Valuation::of(2));
  const OFElement thrice = pi + pi + pi;
  CHECK(thrice.valuation() == Valuation::of(3));
  CHECK(thrice.congruent(OFElement::from_coefficients(F, {0, 3}, 10)));
}

TEST_CASE("products agree with schoolbook arithmetic in Z[x]/(g)") {
  Rng rng(5);
  for (auto F : {sqrt3(), Field::make(5, {mpz_class(10), mpz_class(5), mpz_class(-15), mpz_class(1)}),
                 Field::rational(7)}) {
    for (int t = 0; t < 30; ++t) {
      const OFElement a = frobkit::testing::random_of(rng, F, 12);
      const OFElement b = frobkit::testing::random_of(rng, F, 12);
      const auto expect = naive_mul(a.coefficients(), b.coefficients(), F->eisenstein());
      CHECK((a * b).congruent(OFElement::from_coefficients(F, expect, 12)));
    }
  }
}

TEST_CASE("valuations") {
  auto F = sqrt3();
  CHECK(OFElement::uniformizer(F, 8).valuation() == Valuation::of(1));
  CHECK(OFElement(F, 3L, 8).valuation() == Valuation::of(2));
  CHECK(OFElement::zero(F, 8).valuation() == Valuation::at_least(8));
}

TEST_CASE("division") {
  auto F = sqrt3();
  Rng rng(3);
  const OFElement x = frobkit::testing::random_of(rng, F, 10);
  CHECK(divide(x, OFElement::one(F, 10)).congruent(FElement(x)));

  const OFElement three(F, 3L, 10);
  const OFElement pi = OFElement::uniformizer(F, 10);
  const FElement q = divide(three, pi);
  CHECK(q.valuation() == Valuation::of(1));
  CHECK((q * FElement(pi)).congruent(FElement(three)));
  // The quotient loses v(pi) digits of absolute precision at most.
  CHECK(q.abs_prec() >= 9);

  const FElement r = divide(pi, three);
  CHECK(r.shift() == -1);
  CHECK((r * FElement(three)).congruent(FElement(pi)));

  CHECK_THROWS_AS(divide(pi, OFElement::zero(F, 10)), PrecisionError);
}

TEST_CASE("roots") {
  auto F5 = Field::rational(5);
  const RootSet one = nth_roots(OFElement::one(F5, 10), 2);
  bool has_one = false;
  for (const auto& r : one.roots) has_one = has_one || r == OFElement::one(F5, 10);
  CHECK(has_one);

  const RootSet four = nth_roots(OFElement(F5, 4L, 10), 2);
  REQUIRE(four.roots.size() == 2);
  CHECK(four.roots[0].residue() == 2);
  CHECK(four.roots[1].residue() == 3);
  for (const auto& r : four.roots) CHECK(r.pow(2) == OFElement(F5, 4L, 10));

  CHECK_THROWS_AS(nth_roots(OFElement(Field::rational(3), 2L, 10), 2), DomainError);
}

TEST_CASE("property: ring axioms on random triples") {
  Rng rng(17);
  for (auto F : {sqrt3(), Field::rational(5)}) {
    for (int t = 0; t < 50; ++t) {
      const OFElement a = frobkit::testing::random_of(rng, F, 14);
      const OFElement b = frobkit::testing::random_of(rng, F, 14);
      const OFElement c = frobkit::testing::random_of(rng, F, 14);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      // The two sides track different precisions when v(b + c) > 0.
      CHECK((a * (b + c)).congruent(a * b + a * c));
      CHECK(a * b == b * a);
      CHECK(a - a == OFElement::zero(F, 14));
    }
  }
}

TEST_CASE("property: valuation is additive when both are exact") {
  Rng rng(19);
  auto F = sqrt3();
  for (int t = 0; t < 100; ++t) {
    const int va = rng.uniform(0, 5);
    const int vb = rng.uniform(0, 5);
    const OFElement a = frobkit::testing::random_with_valuation(rng, F, va, 16);
    const OFElement b = frobkit::testing::random_with_valuation(rng, F, vb, 16);
    CHECK((a * b).valuation() == Valuation::of(va + vb));
  }
}

TEST_CASE("property: precision monotonicity") {
  Rng rng(23);
  auto F = sqrt3();
  for (int t = 0; t < 50; ++t) {
    const OFElement a = frobkit::testing::random_of(rng, F, 20);
    const OFElement b = frobkit::testing::random_unit(rng, F, 20);
    const OFElement c = frobkit::testing::random_of(rng, F, 20);
    const OFElement hi = a * b.inverse() + c;
    const OFElement lo = a.reduced(9) * b.reduced(9).inverse() + c.reduced(9);
    CHECK(lo.prec() == 9);
    CHECK(hi.reduced(9) == lo);
  }
}

TEST_CASE("property: roots raised back to the power") {
  Rng rng(29);
  auto F = Field::rational(7);
  for (int t = 0; t < 40; ++t) {
    const OFElement y = frobkit::testing::random_unit(rng, F, 12);
    for (unsigned m : {2u, 3u, 6u}) {
      const OFElement a = y.pow(m);
      const RootSet rs = nth_roots(a, m);
      CHECK(!rs.roots.empty());
      bool found = false;
      for (const auto& r : rs.roots) {
        CHECK(r.pow(m).congruent(a));
        found = found || r.congruent(y);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("exact field elements") {
  auto F = sqrt3();
  const OFExact pi = OFExact::uniformizer(F);
  CHECK(pi * pi == OFExact(F, 3));
  CHECK((pi * pi * pi).valuation() == 3);
  CHECK(OFExact(F, make_rational(1, 3)).valuation() == -2);
}

}
