#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobkit/matrix.hpp"

namespace frobkit {

// Free module over O_F[[u]] with phi(e_1..e_d) = (e_1..e_d) A and declared
// E-height r.
struct KisinModule {
  SeriesMatrix A;
  EisensteinE E;
  int r = 0;
  int d() const { return A.dim(); }
};

// Validates integral entries and r >= 0.
KisinModule make_kisin_module(SeriesMatrix A, EisensteinE E, int r);

struct HeightCheck {
  bool ok = false;
  // e_order of det A.
  int det_order = 0;
  std::string reason;
};

// E^r A^{-1} is integral iff det A = E^s * unit and E^(s-r) divides every
// entry of adj A.
HeightCheck check_height(const KisinModule& m);
bool verify_height(const KisinModule& m);

// E^k | x in O_F[[u]] at available precision.
bool divisible_by_E_power(const USeries& x, const EisensteinE& E, int k);

struct MinimalHeight {
  int m = 0;
  USeries unit_cofactor;
};
// a = E^m * unit; DomainError when the cofactor is not a unit.
MinimalHeight minimal_height_rank1(const USeries& a, const EisensteinE& E);

struct HypothesisHit {
  int n = 0;
  int k = 0;
};
// Smallest n <= N with phi^n(f/u) = E^k as polynomials, where
// k = (p - 1) p^n / e0 is forced by degrees.
std::optional<HypothesisHit> hypothesis_check(const FrobLift& f, const EisensteinE& E, int N);

// f * phi(f/u) * ... * phi^(n-1)(f/u), or u when n = 0, modulo u^cap.
USeries counterexample_series(const FrobLift& f, int n, int cap);

// Checks A E^l = phi(A) mod (u^cap, pi^N); throws DomainError on failure.
void verify_counterexample_identity(const USeries& A, const EisensteinE& E, const FrobLift& f, int l, int N);

// O_F[[u]] with phi(1) = 1 and its submodule A O_F[[u]], whose generator
// satisfies phi(A) = E^l A. Both have height l yet are not equal.
struct Counterexample {
  int n = 0;
  int l = 0;
  USeries A;
  KisinModule ambient;
  KisinModule sub;
};
Counterexample counterexample_module(const FrobLift& f, const EisensteinE& E, int n, int l, int cap, int N);

struct XiResult {
  SeriesMatrix Y;
  // g[n] = gauge(Y_{n+1} - Y_n) for n = 0..max_n, with Y_0 = I.
  std::vector<Gauge> gauges;
  // gauge(Y phi(A_0) - phi(A) phi(Y)) for the returned Y.
  Gauge residual;
};

// Y_n = phi(A) ... phi^n(A) A_0^{-n}, n = max_n. Requires pi^(r+1) | a_1 and
// A_0 = A mod u invertible over F.
XiResult xi_iterate(const KisinModule& m, const FrobLift& f, int max_n);

// e_order(det A) for a module of verified height 1.
int fil1_rank(const KisinModule& m);

}  // namespace frobkit
