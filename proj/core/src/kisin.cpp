#include "frobkit/kisin.hpp"

#include <algorithm>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace {

constexpr int kScreenCap = 64;

int field_prec(const EisensteinE& E) {
  int n = Field::kMaxPrecision;
  for (const auto& c : E.coefficients()) n = std::min(n, c.prec());
  return n;
}

bool is_unit_series(const USeries& x) {
  const auto w = wdeg(x);
  return w && *w == 0;
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

KisinModule make_kisin_module(SeriesMatrix A, EisensteinE E, int r) {
  if (r < 0) throw DomainError("height must be >= 0");
  require_same_field(A.field(), E.field());
  if (!A.is_integral()) throw DomainError("Frobenius matrix has non-integral entries");
  return KisinModule{std::move(A), std::move(E), r};
}

bool divisible_by_E_power(const USeries& x, const EisensteinE& E, int k) {
  USeries y = x;
  for (int i = 0; i < k; ++i) {
    if (y.is_exact_zero()) return true;
    const WeierstrassDivision wd = weierstrass_divide(y, E);
    int known = kExactPrecision;
    for (int j = 0; j < wd.remainder.cap(); ++j) {
      const FElement& c = wd.remainder[j];
      if (!c.is_zero()) return false;
      known = std::min(known, c.abs_prec());
    }
    if (known < 1) {
      throw PrecisionError("indeterminate: remainder modulo E vanishes only because precision is exhausted");
    }
    y = wd.quotient;
  }
  return true;
}

HeightCheck check_height(const KisinModule& m) {
  HeightCheck out;
  const USeries dt = det(m.A);
  if (dt.is_zero()) throw PrecisionError("indeterminate: det A vanishes at available precision");
  const EOrder eo = e_order(dt, m.E);
  out.det_order = eo.k;
  if (!is_unit_series(eo.cofactor)) {
    out.reason = "det A is not E^s times a unit";
    return out;
  }
  if (eo.k > m.d() * m.r) {
    out.reason = "e_order(det A) exceeds d r";
    return out;
  }
  const int need = eo.k - m.r;
  if (need > 0) {
    const SeriesMatrix adj = adjugate(m.A);
    for (int i = 0; i < m.d(); ++i) {
      for (int j = 0; j < m.d(); ++j) {
        if (!divisible_by_E_power(adj(i, j), m.E, need)) {
          out.reason = "adj A entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is not divisible by E^" +
                       std::to_string(need);
          return out;
        }
      }
    }
  }
  out.ok = true;
  return out;
}

bool verify_height(const KisinModule& m) { return check_height(m).ok; }

MinimalHeight minimal_height_rank1(const USeries& a, const EisensteinE& E) {
  const EOrder eo = e_order(a, E);
  if (!is_unit_series(eo.cofactor)) throw DomainError("cofactor of E^" + std::to_string(eo.k) + " is not a unit");
  return {eo.k, eo.cofactor};
}

std::optional<HypothesisHit> hypothesis_check(const FrobLift& f, const EisensteinE& E, int N) {
  require_same_field(f.field(), E.field());
  const int p = f.p();
  const int e0 = E.degree();
  const int prec = std::min(f.prec(), field_prec(E));
  for (int n = 0; n <= N; ++n) {
    const long deg = (p - 1) * ipow(p, n);
    if (deg % e0 != 0) continue;
    const long k = deg / e0;
    // phi^n(f/u) has constant term a_1, E^k has c_0^k.
    if (!FElement(f.a(1)).congruent(FElement(E.c0()).pow(static_cast<unsigned long>(k)))) continue;
    bool match = true;
    for (const long cap : {std::min<long>(deg + 1, kScreenCap), deg + 1}) {
      const int c = static_cast<int>(cap);
      const USeries lhs = compose(f.series_over_u(c), f.iterate(n, c));
      const USeries rhs = series_pow(E.series(c), static_cast<unsigned long>(k), prec);
      if (!lhs.congruent(rhs)) {
        match = false;
        break;
      }
      if (cap == deg + 1) break;
    }
    if (match) return HypothesisHit{n, static_cast<int>(k)};
  }
  return std::nullopt;
}

USeries counterexample_series(const FrobLift& f, int n, int cap) {
  if (n < 0) throw DomainError("n must be >= 0");
  if (n == 0) return USeries::monomial(FElement::one(f.field(), f.prec()), 1, cap);
  USeries A = f.series(cap);
  const USeries f_over_u = f.series_over_u(cap);
  for (int j = 1; j < n; ++j) A = A * compose(f_over_u, f.iterate(j, cap));
  return A;
}

void verify_counterexample_identity(const USeries& A, const EisensteinE& E, const FrobLift& f, int l, int N) {
  const int cap = A.cap();
  const int prec = std::min(f.prec(), field_prec(E));
  const USeries lhs = A * series_pow(E.series(cap), static_cast<unsigned long>(l), prec);
  const USeries rhs = frobenius(A, f);
  if (!vanishes_mod(lhs - rhs, std::min(lhs.cap(), rhs.cap()), N)) {
    throw DomainError("A E^" + std::to_string(l) + " != phi(A) modulo (u^" + std::to_string(cap) + ", pi^" +
                      std::to_string(N) + ")");
  }
}

Counterexample counterexample_module(const FrobLift& f, const EisensteinE& E, int n, int l, int cap, int N) {
  if (l < 0) throw DomainError("l must be >= 0");
  Counterexample out;
  out.n = n;
  out.l = l;
  out.A = counterexample_series(f, n, cap);
  verify_counterexample_identity(out.A, E, f, l, N);
  const int prec = std::min(f.prec(), field_prec(E));
  out.ambient = make_kisin_module(SeriesMatrix::identity(f.field(), 1, prec, cap), E, l);
  out.sub = make_kisin_module(SeriesMatrix::diagonal({series_pow(E.series(cap), static_cast<unsigned long>(l), prec)}),
                              E, l);
  if (!verify_height(out.ambient) || !verify_height(out.sub)) {
    throw InternalError("counterexample modules fail the height-" + std::to_string(l) + " check");
  }
  return out;
}

XiResult xi_iterate(const KisinModule& m, const FrobLift& f, int max_n) {
  if (max_n < 1) throw DomainError("xi iteration needs max_n >= 1");
  require_same_field(m.A.field(), f.field());
  const OFElement& a1 = f.a(1);
  if (!a1.is_zero() && a1.valuation().value < m.r + 1) {
    throw DomainError("xi iteration needs pi^(r+1) | a_1");
  }
  if (a1.is_zero() && a1.prec() < m.r + 1) {
    throw PrecisionError("a_1 known to fewer than r+1 digits");
  }
  const int e0 = m.E.degree();
  const int d = m.d();
  const int cap = m.A.cap();
  const int prec = f.prec();
  const SeriesMatrix A0 = m.A.constant_part();
  const SeriesMatrix A0inv = constant_inverse(m.A);
  const SeriesMatrix I = SeriesMatrix::identity(m.A.field(), d, prec, cap);

  XiResult out;
  SeriesMatrix phiA = m.A;
  SeriesMatrix P = I;
  SeriesMatrix A0pow = I;
  SeriesMatrix Yprev = I;
  for (int n = 1; n <= max_n + 1; ++n) {
    phiA = frobenius(phiA, f);
    P = P * phiA;
    A0pow = A0pow * A0inv;
    SeriesMatrix Y = P * A0pow;
    out.gauges.push_back(gauge_alpha(Y - Yprev, e0));
    if (n == max_n) out.Y = Y;
    Yprev = std::move(Y);
  }

  const SeriesMatrix Yc = out.Y.constant_part() - I.constant_part();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (!Yc(i, j)[0].is_zero()) throw InternalError("Y is not the identity modulo u");
    }
  }
  const SeriesMatrix lhs = out.Y * A0;
  const SeriesMatrix rhs = frobenius(m.A, f) * frobenius(out.Y, f);
  out.residual = gauge_alpha(lhs - rhs, e0);
  const Gauge bound = out.gauges.back();
  const Gauge a0 = gauge_alpha(A0, e0);
  if (!bound.infinite && out.residual.exact && !out.residual.infinite &&
      out.residual.value < bound.value + a0.value) {
    throw InternalError("Y phi(A_0) = phi(A) phi(Y) fails beyond the convergence gauge");
  }
  return out;
}

int fil1_rank(const KisinModule& m) {
  if (m.r != 1) throw DomainError("Fil^1 rank needs a module of height 1");
  const HeightCheck h = check_height(m);
  if (!h.ok) throw DomainError("module fails the height-1 check: " + h.reason);
  if (h.det_order > m.d()) throw InternalError("e_order(det A) exceeds the rank");
  return h.det_order;
}

}  // namespace frobkit
