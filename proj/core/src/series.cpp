#include "frobkit/series.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "frobkit/errors.hpp"
#include "frobkit/rational.hpp"

namespace frobkit {

// ---- USeries ----

USeries::USeries(FieldPtr field, int cap) : field_(std::move(field)) {
  if (cap < 0) throw DomainError("negative order cap");
  c_.assign(static_cast<std::size_t>(cap), FElement::exact_zero(field_));
}

USeries USeries::constant(const FElement& c, int cap) {
  USeries r(c.field(), cap);
  if (cap > 0) r.c_[0] = c;
  return r;
}

USeries USeries::one(FieldPtr field, int prec, int cap) {
  return constant(FElement::one(field, prec), cap);
}

USeries USeries::monomial(const FElement& c, int k, int cap) {
  USeries r(c.field(), cap);
  if (k < cap) r.c_[static_cast<std::size_t>(k)] = c;
  return r;
}

USeries USeries::from_coefficients(FieldPtr field, std::vector<FElement> coeffs, int cap) {
  USeries r(std::move(field), cap);
  for (std::size_t i = 0; i < coeffs.size() && i < r.c_.size(); ++i) {
    require_same_field(r.field_, coeffs[i].field());
    r.c_[i] = std::move(coeffs[i]);
  }
  return r;
}

USeries USeries::polynomial(const std::vector<OFElement>& coeffs, int cap) {
  if (coeffs.empty()) throw DomainError("polynomial needs at least one coefficient");
  USeries r(coeffs.front().field(), cap);
  for (std::size_t i = 0; i < coeffs.size() && i < r.c_.size(); ++i) {
    // Zero coefficients of an input polynomial are exact.
    if (!coeffs[i].is_zero()) r.c_[i] = FElement(coeffs[i]);
  }
  return r;
}

USeries USeries::from_integers(FieldPtr field, const std::vector<long>& coeffs, int prec, int cap) {
  std::vector<OFElement> c;
  for (long n : coeffs) c.emplace_back(field, n, prec);
  if (c.empty()) return USeries(std::move(field), cap);
  return polynomial(c, cap);
}

void USeries::set(int n, FElement c) {
  if (n < 0 || n >= cap()) throw DomainError("coefficient index beyond the order cap");
  c_[static_cast<std::size_t>(n)] = std::move(c);
}

USeries USeries::truncated(int cap) const {
  if (cap >= this->cap()) return *this;
  USeries r = *this;
  r.c_.resize(static_cast<std::size_t>(std::max(cap, 0)));
  return r;
}

USeries USeries::with_abs_prec(int n) const {
  USeries r = *this;
  for (auto& c : r.c_) c = c.with_abs_prec(n);
  return r;
}

USeries USeries::shifted(int k) const {
  if (k < 0) return unshifted(-k);
  USeries r(field_, cap() + k);
  for (int i = 0; i < cap(); ++i) r.c_[static_cast<std::size_t>(i + k)] = c_[static_cast<std::size_t>(i)];
  return r;
}

USeries USeries::unshifted(int k) const {
  if (k < 0) return shifted(-k);
  for (int i = 0; i < std::min(k, cap()); ++i) {
    if (!c_[static_cast<std::size_t>(i)].is_exact_zero()) throw DomainError("series is not divisible by u^k");
  }
  USeries r(field_, std::max(cap() - k, 0));
  for (int i = k; i < cap(); ++i) r.c_[static_cast<std::size_t>(i - k)] = c_[static_cast<std::size_t>(i)];
  return r;
}

bool USeries::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const FElement& c) { return c.is_exact_zero() || c.shift() >= 0; });
}

bool USeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FElement& c) { return c.is_zero(); });
}

bool USeries::is_exact_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FElement& c) { return c.is_exact_zero(); });
}

std::optional<int> USeries::u_valuation() const {
  for (int i = 0; i < cap(); ++i) {
    if (!c_[static_cast<std::size_t>(i)].is_exact_zero()) return i;
  }
  return std::nullopt;
}

int USeries::min_abs_prec() const {
  int m = kExactPrecision;
  for (const auto& c : c_) m = std::min(m, c.abs_prec());
  return m;
}

int USeries::min_valuation() const {
  int m = kExactPrecision;
  for (const auto& c : c_) m = std::min(m, c.valuation_floor());
  return m;
}

USeries USeries::inverse() const {
  if (cap() == 0) return *this;
  if (c_[0].is_zero()) throw PrecisionError("inverse of a series whose constant term is 0 at precision");
  USeries r(field_, cap());
  const FElement b0 = c_[0].inverse();
  r.c_[0] = b0;
  for (int n = 1; n < cap(); ++n) {
    FElement s = FElement::exact_zero(field_);
    for (int k = 1; k <= n; ++k) {
      const auto& a = c_[static_cast<std::size_t>(k)];
      const auto& b = r.c_[static_cast<std::size_t>(n - k)];
      if (a.is_exact_zero() || b.is_exact_zero()) continue;
      s += a * b;
    }
    r.c_[static_cast<std::size_t>(n)] = -(b0 * s);
  }
  return r;
}

USeries USeries::operator-() const {
  USeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

USeries operator+(const USeries& a, const USeries& b) {
  require_same_field(a.field_, b.field_);
  const int cap = std::min(a.cap(), b.cap());
  USeries r(a.field_, cap);
  for (int i = 0; i < cap; ++i) {
    r.c_[static_cast<std::size_t>(i)] = a.c_[static_cast<std::size_t>(i)] + b.c_[static_cast<std::size_t>(i)];
  }
  return r;
}

USeries operator-(const USeries& a, const USeries& b) { return a + (-b); }

USeries operator*(const USeries& a, const USeries& b) {
  require_same_field(a.field_, b.field_);
  const int cap = std::min(a.cap(), b.cap());
  USeries r(a.field_, cap);
  std::vector<int> ia, ib;
  for (int i = 0; i < cap; ++i) {
    if (!a.c_[static_cast<std::size_t>(i)].is_exact_zero()) ia.push_back(i);
    if (!b.c_[static_cast<std::size_t>(i)].is_exact_zero()) ib.push_back(i);
  }
  for (int i : ia) {
    for (int j : ib) {
      if (i + j >= cap) break;
      auto& dst = r.c_[static_cast<std::size_t>(i + j)];
      dst += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

USeries operator*(const FElement& c, const USeries& a) {
  USeries r = a;
  for (auto& x : r.c_) {
    if (!x.is_exact_zero()) x = c * x;
  }
  return r;
}

bool USeries::congruent(const USeries& other) const {
  const int cap = std::min(this->cap(), other.cap());
  for (int i = 0; i < cap; ++i) {
    if (!c_[static_cast<std::size_t>(i)].congruent(other.c_[static_cast<std::size_t>(i)])) return false;
  }
  return true;
}

bool operator==(const USeries& a, const USeries& b) { return a.c_ == b.c_; }

std::string USeries::str() const {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < cap(); ++i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c.is_exact_zero()) continue;
    if (any) os << " + ";
    os << "(" << c.str() << ")";
    if (i == 1) os << "*u";
    if (i > 1) os << "*u^" << i;
    any = true;
  }
  if (!any) os << "0";
  os << " + O(u^" << cap() << ")";
  return os.str();
}

// ---- FrobLift ----

FrobLift FrobLift::make(std::vector<OFElement> coeffs) {
  if (coeffs.empty()) throw DomainError("Frobenius lift needs coefficients a_1..a_p");
  const FieldPtr field = coeffs.front().field();
  const int p = field->p();
  if (static_cast<int>(coeffs.size()) != p) {
    throw DomainError("Frobenius lift needs exactly p = " + std::to_string(p) + " coefficients, got " +
                      std::to_string(coeffs.size()));
  }
  for (auto& a : coeffs) require_same_field(field, a.field());
  if (coeffs.back().prec() < 1 || !coeffs.back().congruent(OFElement::one(field, coeffs.back().prec()))) {
    throw DomainError("Frobenius lift must be monic (a_p = 1)");
  }
  for (int i = 0; i + 1 < p; ++i) {
    const Valuation v = coeffs[static_cast<std::size_t>(i)].valuation();
    if (v.exact && v.value < 1) {
      throw DomainError("a_" + std::to_string(i + 1) + " is not divisible by the uniformizer (f != u^p mod pi)");
    }
  }
  FrobLift f;
  f.a_ = std::move(coeffs);
  return f;
}

int FrobLift::prec() const {
  int m = kExactPrecision;
  for (const auto& a : a_) m = std::min(m, a.prec());
  return m;
}

int FrobLift::lowest_degree() const {
  for (int i = 1; i <= p(); ++i) {
    if (!a(i).is_zero()) return i;
  }
  return p();
}

USeries FrobLift::apply(const USeries& y) const {
  if (y.cap() > 0 && !y[0].is_exact_zero()) throw DomainError("f(y) needs y(0) = 0");
  const int cap = y.cap();
  auto add_const = [&](USeries s, const OFElement& c) {
    if (cap > 0 && !c.is_zero()) s.set(0, s[0] + FElement(c));
    return s;
  };
  USeries r = add_const(y, a(p() - 1));
  for (int i = p() - 1; i >= 1; --i) {
    r = r * y;
    if (i > 1) r = add_const(r, a(i - 1));
  }
  return r;
}

USeries FrobLift::series(int cap) const {
  std::vector<OFElement> c;
  c.push_back(OFElement::zero(field(), prec()));
  for (const auto& x : a_) c.push_back(x);
  return USeries::polynomial(c, cap);
}

USeries FrobLift::series_over_u(int cap) const { return USeries::polynomial(a_, cap); }

USeries FrobLift::iterate(int n, int cap) const {
  USeries y = USeries::monomial(FElement::one(field(), prec()), 1, cap);
  for (int k = 0; k < n; ++k) y = apply(y);
  return y;
}

// ---- EisensteinE ----

namespace {

std::string eisenstein_problem(const std::vector<OFElement>& c) {
  if (c.size() < 2) return "E must have degree >= 1";
  const FieldPtr& field = c.front().field();
  if (c.back().prec() < 1 || !c.back().congruent(OFElement::one(field, c.back().prec()))) return "E must be monic";
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const Valuation v = c[i].valuation();
    if (v.exact && v.value < 1) return "coefficient of u^" + std::to_string(i) + " is a unit";
  }
  const Valuation v0 = c.front().valuation();
  if (!(v0.exact && v0.value == 1)) return "E(0) must have valuation exactly 1 (got " + v0.str() + ")";
  return {};
}

}  // namespace

EisensteinE EisensteinE::make(std::vector<OFElement> coeffs) {
  if (coeffs.empty()) throw DomainError("E needs coefficients");
  for (auto& a : coeffs) require_same_field(coeffs.front().field(), a.field());
  const std::string problem = eisenstein_problem(coeffs);
  if (!problem.empty()) throw DomainError("E is not Eisenstein: " + problem);
  EisensteinE E;
  E.c_ = std::move(coeffs);
  return E;
}

EisensteinE EisensteinE::unchecked(std::vector<OFElement> coeffs) {
  if (coeffs.size() < 2) throw DomainError("E must have degree >= 1");
  EisensteinE E;
  E.c_ = std::move(coeffs);
  return E;
}

bool EisensteinE::is_eisenstein() const { return eisenstein_problem(c_).empty(); }

USeries EisensteinE::series(int cap) const { return USeries::polynomial(c_, cap); }

// ---- free functions ----

USeries compose(const USeries& h, const USeries& g) {
  require_same_field(h.field(), g.field());
  if (g.cap() > 0 && !g[0].is_exact_zero()) throw DomainError("composition needs g(0) = 0 exactly");
  const auto vg = g.u_valuation();
  int cap_out = g.cap();
  if (vg) cap_out = static_cast<int>(std::min<long>(static_cast<long>(h.cap()) * *vg, g.cap()));
  if (cap_out == 0 || h.cap() == 0) return USeries(h.field(), cap_out);
  if (!vg) return USeries::constant(h[0], cap_out);
  const USeries gt = g.truncated(cap_out);
  const int kmax = std::min(h.cap() - 1, (cap_out - 1) / *vg);
  USeries r = USeries::constant(h[kmax], cap_out);
  for (int k = kmax - 1; k >= 0; --k) {
    r = r * gt;
    r.set(0, r[0] + h[k]);
  }
  return r;
}

bool vanishes_mod(const USeries& x, int cap, int N) {
  if (x.cap() < cap) throw PrecisionError("series known only modulo u^" + std::to_string(x.cap()));
  bool indeterminate = false;
  for (int n = 0; n < cap; ++n) {
    const FElement& c = x[n];
    if (!c.is_zero() && c.shift() < N) return false;
    if (c.is_zero() && c.abs_prec() < N) indeterminate = true;
  }
  if (indeterminate) throw PrecisionError("indeterminate: coefficients known to fewer than " + std::to_string(N) + " digits");
  return true;
}

USeries series_pow(const USeries& x, unsigned long k, int prec) {
  USeries r = USeries::one(x.field(), prec, x.cap());
  USeries b = x;
  while (k > 0) {
    if (k & 1UL) r = r * b;
    k >>= 1;
    if (k > 0) b = b * b;
  }
  return r;
}

USeries frobenius(const USeries& x, const FrobLift& f, int n) {
  if (n < 0) throw DomainError("negative Frobenius power");
  if (n == 0) return x;
  return compose(x, f.iterate(n, x.cap()));
}

std::optional<int> wdeg(const USeries& x) {
  for (int n = 0; n < x.cap(); ++n) {
    const FElement& c = x[n];
    if (c.is_exact_zero()) continue;
    if (c.is_zero()) {
      if (c.abs_prec() >= 1) continue;
      throw PrecisionError("Weierstrass degree undetermined: coefficient of u^" + std::to_string(n) +
                           " has no known digits");
    }
    if (c.shift() < 0) throw DomainError("Weierstrass degree of a non-integral series");
    if (c.shift() == 0) return n;
  }
  return std::nullopt;
}

WeierstrassDivision weierstrass_divide(const USeries& x, const EisensteinE& E) {
  require_same_field(x.field(), E.field());
  const FieldPtr& field = x.field();
  const int e0 = E.degree();
  const int M = x.cap();
  // u^e0 = E + P with P = -(c_0 + ... + c_{e0-1} u^(e0-1)).
  std::vector<FElement> P;
  for (int i = 0; i < e0; ++i) {
    const auto& c = E.coefficients()[static_cast<std::size_t>(i)];
    P.push_back(c.is_zero() ? FElement::exact_zero(field) : -FElement(c));
  }
  // The unknown tail of x is assumed to lie in pi^w0 O_F[[u]].
  const int w0 = std::min(0, x.min_valuation());

  std::vector<FElement> y = x.coefficients();
  std::vector<FElement> q(static_cast<std::size_t>(std::max(M - e0, 0)), FElement::exact_zero(field));
  int cap_y = M;
  while (cap_y > e0) {
    const int L = cap_y - e0;
    std::vector<FElement> next(static_cast<std::size_t>(L), FElement::exact_zero(field));
    for (int n = 0; n < L; ++n) {
      const FElement& h = y[static_cast<std::size_t>(n + e0)];
      if (h.is_exact_zero()) continue;
      q[static_cast<std::size_t>(n)] += h;
      for (int i = 0; i < e0 && n + i < L; ++i) {
        if (P[static_cast<std::size_t>(i)].is_exact_zero()) continue;
        next[static_cast<std::size_t>(n + i)] += P[static_cast<std::size_t>(i)] * h;
      }
    }
    for (int i = 0; i < e0 && i < L; ++i) next[static_cast<std::size_t>(i)] += y[static_cast<std::size_t>(i)];
    y = std::move(next);
    cap_y = L;
  }

  WeierstrassDivision out;
  out.quotient = USeries(field, static_cast<int>(q.size()));
  for (int n = 0; n < static_cast<int>(q.size()); ++n) {
    const int J = static_cast<int>(ceil_div(M - n, e0)) - 1;
    out.quotient.set(n, q[static_cast<std::size_t>(n)].with_abs_prec(w0 + std::max(J, 0)));
  }
  const int tail = w0 + M / e0;
  out.remainder = USeries(field, e0);
  for (int i = 0; i < e0; ++i) {
    FElement r = i < cap_y ? y[static_cast<std::size_t>(i)] : FElement::zero(field, tail);
    out.remainder.set(i, r.with_abs_prec(tail));
  }
  return out;
}

EOrder e_order(const USeries& x, const EisensteinE& E) {
  if (x.is_zero()) throw PrecisionError("indeterminate: series vanishes at available precision");
  EOrder out{0, x};
  while (true) {
    const WeierstrassDivision wd = weierstrass_divide(out.cofactor, E);
    bool all_zero = true;
    int known = kExactPrecision;
    for (int i = 0; i < wd.remainder.cap(); ++i) {
      const FElement& r = wd.remainder[i];
      if (!r.is_zero()) {
        all_zero = false;
        break;
      }
      known = std::min(known, r.abs_prec());
    }
    if (!all_zero) return out;
    if (known < 1) {
      throw PrecisionError("indeterminate: remainder modulo E^" + std::to_string(out.k + 1) +
                           " vanishes only because precision is exhausted");
    }
    if (wd.quotient.is_zero()) {
      throw PrecisionError("indeterminate: quotient by E^" + std::to_string(out.k + 1) + " vanishes at precision");
    }
    out.cofactor = wd.quotient;
    ++out.k;
  }
}

std::string Gauge::str() const {
  if (infinite) return "inf";
  return exact ? std::to_string(value) : ">= " + std::to_string(value);
}

Gauge gauge_alpha(const USeries& x, int e0) {
  if (e0 < 1) throw DomainError("gauge needs e0 >= 1");
  const long step = static_cast<long>(e0) * x.field()->p();
  Gauge g;
  g.infinite = true;
  long best_exact = LONG_MAX;
  long best_bound = LONG_MAX;
  for (int n = 0; n < x.cap(); ++n) {
    const FElement& c = x[n];
    if (c.is_exact_zero()) continue;
    const long w = static_cast<long>(c.valuation_floor()) + n / step;
    if (c.is_zero()) {
      best_bound = std::min(best_bound, w);
    } else {
      best_exact = std::min(best_exact, w);
    }
  }
  if (best_exact == LONG_MAX && best_bound == LONG_MAX) return g;
  g.infinite = false;
  if (best_exact <= best_bound) {
    g.value = best_exact;
    g.exact = true;
  } else {
    g.value = best_bound;
    g.exact = false;
  }
  return g;
}

}  // namespace frobkit
