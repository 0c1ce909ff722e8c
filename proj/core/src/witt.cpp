#include "frobkit/witt.hpp"

#include <mutex>
#include <sstream>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace {

// A Witt polynomial reduced mod pi, grouped by its x-part:
// sum over x-monomials X of X * (sum of c * Y).
struct Grouped {
  struct Group {
    Monomial x;
    std::vector<std::pair<Monomial, int>> ys;
  };
  std::vector<Group> groups;
};

struct Prepared {
  std::vector<Grouped> sum;
  std::vector<Grouped> prod;
};

Grouped group_poly(const WittPoly& poly) {
  std::map<Monomial, std::vector<std::pair<Monomial, int>>> by_x;
  for (const auto& [mono, c] : poly) {
    const int r = c.residue();
    if (r == 0) continue;
    Monomial x{}, y{};
    for (int s = 0; s < kMaxWittLength; ++s) {
      x[static_cast<std::size_t>(s)] = mono[static_cast<std::size_t>(s)];
      y[static_cast<std::size_t>(kMaxWittLength + s)] = mono[static_cast<std::size_t>(kMaxWittLength + s)];
    }
    by_x[x].emplace_back(y, r);
  }
  Grouped g;
  for (auto& [x, ys] : by_x) g.groups.push_back({x, std::move(ys)});
  return g;
}

std::shared_ptr<const Prepared> prepared(const std::shared_ptr<const WittPolySet>& set) {
  static std::mutex mu;
  static std::map<const WittPolySet*, std::shared_ptr<const Prepared>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(set.get()); it != cache.end()) return it->second;
  auto p = std::make_shared<Prepared>();
  for (const auto& s : set->sum) p->sum.push_back(group_poly(s));
  for (const auto& q : set->prod) p->prod.push_back(group_poly(q));
  cache.emplace(set.get(), p);
  return p;
}

// Evaluates grouped polynomials at (a, b) with shared power caches.
class Evaluator {
 public:
  Evaluator(const WittVec& a, const WittVec& b) : a_(a), b_(b) {}

  PerfSeries eval(const Grouped& g) {
    PerfSeries result(a_[0].p(), a_.budget());
    for (const auto& grp : g.groups) {
      const PerfSeries* X = monomial_value(grp.x);
      if (X == nullptr) continue;
      PerfSeries inner(a_[0].p(), a_.budget());
      for (const auto& [y, c] : grp.ys) {
        const PerfSeries* Y = monomial_value(y);
        if (Y == nullptr) continue;
        inner = inner + Y->scaled(c);
      }
      if (inner.is_zero() && !inner.truncated()) continue;
      result = result + (*X) * inner;
    }
    return result;
  }

 private:
  const PerfSeries& var(int slot) const {
    return slot < kMaxWittLength ? a_[slot] : b_[slot - kMaxWittLength];
  }

  // nullptr encodes an exact zero.
  const PerfSeries* power(int slot, unsigned e) {
    const auto key = std::make_pair(slot, e);
    if (auto it = powers_.find(key); it != powers_.end()) return it->second ? &*it->second : nullptr;
    const PerfSeries& v = var(slot);
    std::optional<PerfSeries> val;
    if (!(v.is_zero() && !v.truncated())) val = v.pow(e);
    auto [it, _] = powers_.emplace(key, std::move(val));
    return it->second ? &*it->second : nullptr;
  }

  const PerfSeries* monomial_value(const Monomial& m) {
    if (auto it = monos_.find(m); it != monos_.end()) return it->second ? &*it->second : nullptr;
    std::optional<PerfSeries> acc;
    bool zero = false;
    for (int s = 0; s < 2 * kMaxWittLength && !zero; ++s) {
      const unsigned e = m[static_cast<std::size_t>(s)];
      if (e == 0) continue;
      const PerfSeries* pw = power(s, e);
      if (pw == nullptr) {
        zero = true;
        break;
      }
      acc = acc ? *acc * *pw : *pw;
    }
    if (!zero && !acc) acc = PerfSeries::constant(a_[0].p(), a_.budget(), 1);
    if (zero) acc.reset();
    auto [it, _] = monos_.emplace(m, std::move(acc));
    return it->second ? &*it->second : nullptr;
  }

  const WittVec& a_;
  const WittVec& b_;
  std::map<std::pair<int, unsigned>, std::optional<PerfSeries>> powers_;
  std::map<Monomial, std::optional<PerfSeries>> monos_;
};

void require_compatible(const WittVec& a, const WittVec& b) {
  if (a.length() != b.length()) throw DomainError("Witt vectors of different lengths");
  require_same_field(a.field(), b.field());
}

WittVec apply_law(const WittVec& a, const WittVec& b, bool product) {
  require_compatible(a, b);
  const auto set = witt_polys(a.field(), a.length());
  const auto prep = prepared(set);
  Evaluator ev(a, b);
  std::vector<PerfSeries> out;
  for (int m = 0; m < a.length(); ++m) {
    out.push_back(ev.eval(product ? prep->prod[static_cast<std::size_t>(m)] : prep->sum[static_cast<std::size_t>(m)]));
  }
  return WittVec(a.field(), std::move(out));
}

}  // namespace

WittVec::WittVec(FieldPtr field, std::vector<PerfSeries> components) : field_(std::move(field)), c_(std::move(components)) {
  if (c_.empty() || static_cast<int>(c_.size()) > kMaxWittLength) {
    throw DomainError("Witt length must be in [1, " + std::to_string(kMaxWittLength) + "]");
  }
  for (const auto& c : c_) {
    if (c.p() != field_->p() || !(c.budget() == c_.front().budget())) {
      throw DomainError("Witt components must share p and budget");
    }
  }
}

WittVec WittVec::zero(const FieldPtr& field, int n, PerfBudget budget) {
  return WittVec(field, std::vector<PerfSeries>(static_cast<std::size_t>(n), PerfSeries(field->p(), budget)));
}

WittVec WittVec::one(const FieldPtr& field, int n, PerfBudget budget) {
  return teich(field, PerfSeries::constant(field->p(), budget, 1), n);
}

bool WittVec::truncated() const {
  for (const auto& c : c_) {
    if (c.truncated()) return true;
  }
  return false;
}

std::string WittVec::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].str();
  os << ")";
  return os.str();
}

WittVec teich(const FieldPtr& field, const PerfSeries& r, int n) {
  std::vector<PerfSeries> c(static_cast<std::size_t>(n), PerfSeries(r.p(), r.budget()));
  c[0] = r;
  return WittVec(field, std::move(c));
}

std::vector<int> witt_scalar_digits(const OFElement& c, int n) {
  if (c.prec() < n) {
    throw PrecisionError("Witt image of a scalar of length " + std::to_string(n) + " needs " + std::to_string(n) +
                         " known digits");
  }
  const FieldPtr& field = c.field();
  const unsigned long p = static_cast<unsigned long>(field->p());
  const OFExact a = OFExact::from_of(c.reduced(n));
  // Components x with ghost vector (a, a, a, ...): the constant a under the
  // Frobenius-compatible section O_F -> W_pi(O_F).
  std::vector<OFExact> x;
  std::vector<int> digits;
  const OFExact pi = OFExact::uniformizer(field);
  for (int m = 0; m < n; ++m) {
    OFExact rest = a;
    OFExact pij(field, 1L);
    for (int j = 0; j < m; ++j) {
      unsigned long k = 1;
      for (int t = 0; t < m - j; ++t) k *= p;
      rest -= pij * x[static_cast<std::size_t>(j)].pow(k);
      pij = pij * pi;
    }
    OFExact xm = rest.times_uniformizer_power(-m);
    if (!xm.is_integral()) throw InternalError("Witt components of a scalar are not integral");
    digits.push_back(xm.residue());
    x.push_back(std::move(xm));
  }
  return digits;
}

WittVec witt_scalar(const OFElement& c, int n, PerfBudget budget) {
  const auto digits = witt_scalar_digits(c, n);
  const int p = c.field()->p();
  std::vector<PerfSeries> comps;
  for (int d : digits) comps.push_back(PerfSeries::constant(p, budget, d));
  return WittVec(c.field(), std::move(comps));
}

WittVec witt_add(const WittVec& a, const WittVec& b) { return apply_law(a, b, false); }

WittVec witt_mul(const WittVec& a, const WittVec& b) { return apply_law(a, b, true); }

WittVec witt_neg(const WittVec& a) {
  const OFElement minus_one(a.field(), -1L, a.length());
  return witt_mul(witt_scalar(minus_one, a.length(), a.budget()), a);
}

WittVec witt_frob(const WittVec& a) {
  std::vector<PerfSeries> c;
  for (const auto& x : a.components()) c.push_back(x.frob());
  return WittVec(a.field(), std::move(c));
}

WittVec witt_frob_inv(const WittVec& a) {
  std::vector<PerfSeries> c;
  for (const auto& x : a.components()) c.push_back(x.frob_inv());
  return WittVec(a.field(), std::move(c));
}

namespace {

WittVec horner(const std::vector<OFElement>& coeffs, const WittVec& x) {
  // coeffs low degree first; evaluates sum coeffs[i] x^i.
  const int n = x.length();
  auto scalar = [&](const OFElement& c) { return witt_scalar(c, n, x.budget()); };
  WittVec r = scalar(coeffs.back());
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    r = witt_mul(r, x);
    if (!coeffs[i].is_zero()) r = witt_add(r, scalar(coeffs[i]));
  }
  return r;
}

}  // namespace

WittVec witt_apply(const FrobLift& f, const WittVec& x) {
  require_same_field(f.field(), x.field());
  std::vector<OFElement> c;
  c.push_back(OFElement::zero(f.field(), f.prec()));
  for (const auto& a : f.coefficients()) c.push_back(a);
  return horner(c, x);
}

WittVec witt_apply(const EisensteinE& E, const WittVec& x) {
  require_same_field(E.field(), x.field());
  return horner(E.coefficients(), x);
}

FixedPointResult f_fixed_point(const FrobLift& f, int n, PerfBudget budget, const std::optional<WittVec>& start) {
  const FieldPtr& field = f.field();
  WittVec x = start ? *start : teich(field, PerfSeries::monomial(field->p(), budget, Rational(1)), n);
  if (x.length() != n) throw DomainError("start vector has the wrong length");
  for (int it = 1; it <= 2 * n; ++it) {
    WittVec y = witt_apply(f, witt_frob_inv(x));
    if (y == x) return {x, it};
    x = std::move(y);
  }
  throw InternalError("fixed-point iteration did not stabilize within " + std::to_string(2 * n) + " steps");
}

EReduction check_E_reduction(const EisensteinE& E, const WittVec& u) {
  EReduction out;
  const int eF = E.field()->degree();
  out.v_pi = Rational(1, eF);
  out.v_pi.canonicalize();
  const PerfSeries c0 = witt_apply(E, u)[0];
  if (c0.is_zero()) return out;
  Rational v = c0.order() / Rational(static_cast<long>(E.degree()) * eF);
  v.canonicalize();
  out.v_R = v;
  out.ok = c0.order() == E.degree() && v == out.v_pi;
  return out;
}

}  // namespace frobkit
