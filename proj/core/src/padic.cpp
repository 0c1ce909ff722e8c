#include "frobkit/padic.hpp"

#include <algorithm>
#include <sstream>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace {

int vp(const mpz_class& n, unsigned long p) {
  mpz_class t = n;
  int v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

void check_prec(int prec) {
  if (prec < 0) throw PrecisionError("negative precision");
  if (prec > Field::kMaxPrecision) {
    throw PrecisionError("precision " + std::to_string(prec) + " exceeds supported maximum " +
                         std::to_string(Field::kMaxPrecision));
  }
}

// Reduce a polynomial of arbitrary length modulo g, in place.
void reduce_mod_g(std::vector<mpz_class>& r, const Field& F) {
  const int e = F.degree();
  const auto& g = F.eisenstein();
  for (std::size_t k = r.size(); k-- > static_cast<std::size_t>(e);) {
    if (r[k] == 0) continue;
    mpz_class t = r[k];
    r[k] = 0;
    for (int i = 0; i < e; ++i) {
      if (g[static_cast<std::size_t>(i)] != 0) r[k - static_cast<std::size_t>(e - i)] -= t * g[static_cast<std::size_t>(i)];
    }
  }
  r.resize(static_cast<std::size_t>(e));
}

}  // namespace

std::string Valuation::str() const { return exact ? std::to_string(value) : ">= " + std::to_string(value); }

// ---- OFElement ----

OFElement::OFElement(FieldPtr field, const mpz_class& n, int prec) : field_(std::move(field)), prec_(prec) {
  if (!field_) throw DomainError("element without a field");
  check_prec(prec);
  c_.assign(static_cast<std::size_t>(field_->degree()), mpz_class(0));
  c_[0] = n;
  normalize();
}

OFElement::OFElement(FieldPtr field, std::vector<mpz_class> coeffs, int prec, bool do_normalize)
    : field_(std::move(field)), c_(std::move(coeffs)), prec_(prec) {
  check_prec(prec);
  if (c_.size() != static_cast<std::size_t>(field_->degree())) reduce_mod_g(c_, *field_);
  if (do_normalize) normalize();
}

void OFElement::normalize() {
  const int e = field_->degree();
  if (static_cast<int>(c_.size()) < e) c_.resize(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    auto& c = c_[static_cast<std::size_t>(i)];
    const int d = field_->coefficient_digits(i, prec_);
    if (d == 0) {
      c = 0;
    } else {
      const mpz_class& m = field_->p_power(d);
      if (c < 0 || c >= m) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
  }
}

OFElement OFElement::uniformizer(FieldPtr field, int prec) {
  std::vector<mpz_class> c(static_cast<std::size_t>(field->degree() + 1), mpz_class(0));
  c[1] = 1;
  return from_coefficients(std::move(field), std::move(c), prec);
}

OFElement OFElement::from_coefficients(FieldPtr field, std::vector<mpz_class> coeffs, int prec) {
  if (!field) throw DomainError("element without a field");
  if (coeffs.empty()) coeffs.push_back(0);
  if (coeffs.size() < static_cast<std::size_t>(field->degree())) coeffs.resize(static_cast<std::size_t>(field->degree()));
  return OFElement(std::move(field), std::move(coeffs), prec, true);
}

OFElement OFElement::from_digits(FieldPtr field, std::span<const int> digits, int prec) {
  const int p = field->p();
  OFElement acc = zero(field, prec);
  OFElement pi = uniformizer(field, prec);
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (digits[k] < 0 || digits[k] >= p) throw DomainError("digit out of range [0, p)");
    acc = acc * pi + OFElement(field, static_cast<long>(digits[k]), prec);
    acc = acc.reduced(prec);
  }
  return acc.reduced(prec);
}

Valuation OFElement::valuation() const {
  const int e = field_->degree();
  const auto p = static_cast<unsigned long>(field_->p());
  int best = prec_;
  bool found = false;
  for (int i = 0; i < e; ++i) {
    const auto& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const int v = e * vp(c, p) + i;
    if (!found || v < best) best = v;
    found = true;
  }
  return found ? Valuation::of(best) : Valuation::at_least(prec_);
}

bool OFElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpz_class& c) { return c == 0; });
}

bool OFElement::is_unit() const {
  return prec_ > 0 && !mpz_divisible_ui_p(c_[0].get_mpz_t(), static_cast<unsigned long>(field_->p()));
}

int OFElement::residue() const {
  if (prec_ == 0) throw PrecisionError("residue of an element with no known digits");
  return static_cast<int>(mpz_fdiv_ui(c_[0].get_mpz_t(), static_cast<unsigned long>(field_->p())));
}

std::vector<int> OFElement::digits() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(prec_));
  OFElement a = *this;
  while (a.prec_ > 0) {
    const int d = a.residue();
    out.push_back(d);
    if (d != 0) a = a - OFElement(field_, static_cast<long>(d), a.prec_);
    a = a.divided_by_uniformizer_power(1);
  }
  return out;
}

OFElement OFElement::reduced(int n) const {
  if (n >= prec_) return *this;
  OFElement r = *this;
  r.prec_ = std::max(n, 0);
  r.normalize();
  return r;
}

OFElement OFElement::lifted(int n) const {
  OFElement r = *this;
  check_prec(n);
  r.prec_ = n;
  r.normalize();
  return r;
}

OFElement OFElement::times_uniformizer_power(int k) const {
  if (k < 0) return divided_by_uniformizer_power(-k);
  if (k == 0) return *this;
  const int e = field_->degree();
  const int n = std::min(prec_ + k, Field::kMaxPrecision);
  std::vector<mpz_class> r(static_cast<std::size_t>(e + k), mpz_class(0));
  for (int i = 0; i < e; ++i) r[static_cast<std::size_t>(i + k)] = c_[static_cast<std::size_t>(i)];
  return OFElement(field_, std::move(r), n, true);
}

OFElement OFElement::divided_by_uniformizer_power(int k) const {
  if (k < 0) return times_uniformizer_power(-k);
  if (k == 0) return *this;
  if (k > prec_) throw PrecisionError("division by a uniformizer power beyond the known digits");
  const int e = field_->degree();
  const auto p = static_cast<unsigned long>(field_->p());
  const auto& q = field_->p_over_uniformizer();
  std::vector<mpz_class> c = c_;
  for (int step = 0; step < k; ++step) {
    if (!mpz_divisible_ui_p(c[0].get_mpz_t(), p)) {
      throw DomainError("element is not divisible by the uniformizer");
    }
    mpz_class c0;
    mpz_divexact_ui(c0.get_mpz_t(), c[0].get_mpz_t(), p);
    for (int i = 0; i + 1 < e; ++i) c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i) + 1];
    c[static_cast<std::size_t>(e - 1)] = 0;
    if (c0 != 0) {
      for (int i = 0; i < e; ++i) c[static_cast<std::size_t>(i)] += c0 * q[static_cast<std::size_t>(i)];
    }
    // Keep coefficients small; the precision after this step is prec - step - 1.
    const int n = prec_ - step - 1;
    for (int i = 0; i < e; ++i) {
      const int d = field_->coefficient_digits(i, n);
      mpz_fdiv_r(c[static_cast<std::size_t>(i)].get_mpz_t(), c[static_cast<std::size_t>(i)].get_mpz_t(),
                 field_->p_power(d).get_mpz_t());
    }
  }
  return OFElement(field_, std::move(c), prec_ - k, true);
}

OFElement OFElement::inverse() const {
  if (!is_unit()) throw DomainError("inverse of a non-unit in O_F");
  const auto p = static_cast<unsigned long>(field_->p());
  mpz_class r0;
  mpz_class pm(p);
  mpz_class res(residue());
  mpz_invert(r0.get_mpz_t(), res.get_mpz_t(), pm.get_mpz_t());
  OFElement y(field_, r0, prec_);
  OFElement two(field_, 2L, prec_);
  // Newton: y <- y (2 - a y), doubling the number of correct digits.
  for (int known = 1; known < prec_; known *= 2) y = y * (two - (*this) * y);
  return y;
}

OFElement OFElement::pow(unsigned long k) const {
  OFElement result = one(field_, prec_);
  OFElement base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

OFElement OFElement::operator-() const {
  std::vector<mpz_class> c = c_;
  for (auto& x : c) x = -x;
  return OFElement(field_, std::move(c), prec_, true);
}

OFElement operator+(const OFElement& a, const OFElement& b) {
  require_same_field(a.field_, b.field_);
  std::vector<mpz_class> c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return OFElement(a.field_, std::move(c), std::min(a.prec_, b.prec_), true);
}

OFElement operator-(const OFElement& a, const OFElement& b) {
  require_same_field(a.field_, b.field_);
  std::vector<mpz_class> c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
  return OFElement(a.field_, std::move(c), std::min(a.prec_, b.prec_), true);
}

OFElement operator*(const OFElement& a, const OFElement& b) {
  require_same_field(a.field_, b.field_);
  // (a + O(x^Na))(b + O(x^Nb)) is known modulo x^min(Na + v(b), Nb + v(a)).
  auto cheap_val = [](const OFElement& z) { return z.is_unit() ? 0 : z.valuation().value; };
  const int n = std::min({a.prec_ + cheap_val(b), b.prec_ + cheap_val(a), Field::kMaxPrecision});
  const int e = a.field_->degree();
  if (e == 1) {
    std::vector<mpz_class> c(1);
    c[0] = a.c_[0] * b.c_[0];
    return OFElement(a.field_, std::move(c), n, true);
  }
  std::vector<mpz_class> r(static_cast<std::size_t>(2 * e - 1), mpz_class(0));
  for (int i = 0; i < e; ++i) {
    if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < e; ++j) {
      if (b.c_[static_cast<std::size_t>(j)] == 0) continue;
      r[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
  }
  reduce_mod_g(r, *a.field_);
  return OFElement(a.field_, std::move(r), n, true);
}

bool operator==(const OFElement& a, const OFElement& b) {
  if (!a.field_ || !b.field_) return !a.field_ && !b.field_;
  return a.prec_ == b.prec_ && a.field_->same_as(*b.field_) && a.c_ == b.c_;
}

bool OFElement::congruent(const OFElement& other) const {
  const int n = std::min(prec_, other.prec_);
  return (reduced(n) - other.reduced(n)).is_zero();
}

std::string OFElement::str() const {
  std::ostringstream os;
  const auto d = digits();
  bool any = false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (any) os << " + ";
    os << d[i];
    if (i == 1) os << "*pi";
    if (i > 1) os << "*pi^" << i;
    any = true;
  }
  if (!any) os << "0";
  os << " + O(pi^" << prec_ << ")";
  return os.str();
}

// ---- FElement ----

FElement::FElement(const OFElement& a) {
  const Valuation v = a.valuation();
  if (!v.exact) {
    unit_ = OFElement::zero(a.field(), 0);
    shift_ = a.prec();
    zero_ = true;
    return;
  }
  unit_ = a.divided_by_uniformizer_power(v.value);
  shift_ = v.value;
  zero_ = false;
}

FElement FElement::zero(FieldPtr field, int abs_prec) {
  FElement z;
  z.unit_ = OFElement::zero(std::move(field), 0);
  z.shift_ = abs_prec;
  z.zero_ = true;
  return z;
}

FElement FElement::from_unit(const OFElement& unit, int shift) {
  if (unit.prec() == 0) return zero(unit.field(), shift);
  if (!unit.is_unit()) throw DomainError("from_unit expects a unit");
  FElement r;
  r.unit_ = unit;
  r.shift_ = shift;
  r.zero_ = false;
  return r;
}

FElement FElement::scaled(const OFElement& m, int shift) {
  FElement r(m);
  if (r.is_exact_zero()) return r;
  r.shift_ += shift;
  return r;
}

OFElement FElement::to_integral(int max_prec) const {
  if (is_exact_zero()) return OFElement::zero(field(), max_prec);
  if (shift_ < 0) {
    if (zero_) throw PrecisionError("element is not known to be integral");
    throw DomainError("element is not integral (valuation " + std::to_string(shift_) + ")");
  }
  const int n = std::min(abs_prec(), max_prec);
  if (zero_ || n <= shift_) return OFElement::zero(field(), n);
  return unit_.reduced(n - shift_).times_uniformizer_power(shift_).reduced(n);
}

FElement FElement::with_abs_prec(int n) const {
  if (n >= abs_prec()) return *this;
  if (zero_ || n <= shift_) return zero(field(), n);
  FElement r = *this;
  r.unit_ = unit_.reduced(n - shift_);
  return r;
}

FElement FElement::inverse() const {
  if (zero_) throw PrecisionError("division by an element indistinguishable from 0");
  FElement r;
  r.unit_ = unit_.inverse();
  r.shift_ = -shift_;
  r.zero_ = false;
  return r;
}

FElement FElement::pow(unsigned long k) const {
  FElement result = one(field(), zero_ ? kDefaultPrecision : std::max(unit_.prec(), 1));
  if (k == 0) return result;
  if (zero_) {
    if (is_exact_zero()) return *this;
    return zero(field(), static_cast<int>(std::min<long>(static_cast<long>(shift_) * static_cast<long>(k), kExactPrecision - 1)));
  }
  result.unit_ = unit_.pow(k);
  result.shift_ = static_cast<int>(static_cast<long>(shift_) * static_cast<long>(k));
  return result;
}

FElement FElement::operator-() const {
  if (zero_) return *this;
  FElement r = *this;
  r.unit_ = -unit_;
  return r;
}

FElement operator+(const FElement& a, const FElement& b) {
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  require_same_field(a.field(), b.field());
  const int abs = std::min(a.abs_prec(), b.abs_prec());
  if (a.zero_ && b.zero_) return FElement::zero(a.field(), abs);
  if (a.zero_) return b.with_abs_prec(abs);
  if (b.zero_) return a.with_abs_prec(abs);
  const int m = std::min(a.shift_, b.shift_);
  const int rel = std::min(abs - m, Field::kMaxPrecision);
  if (rel <= 0) return FElement::zero(a.field(), abs);
  OFElement x = a.unit_.reduced(rel - (a.shift_ - m)).times_uniformizer_power(a.shift_ - m).reduced(rel);
  OFElement y = b.unit_.reduced(rel - (b.shift_ - m)).times_uniformizer_power(b.shift_ - m).reduced(rel);
  return FElement::scaled(x + y, m);
}

FElement operator-(const FElement& a, const FElement& b) { return a + (-b); }

FElement operator*(const FElement& a, const FElement& b) {
  if (a.is_exact_zero()) return a;
  if (b.is_exact_zero()) return b;
  require_same_field(a.field(), b.field());
  if (a.zero_ || b.zero_) {
    // Zero times a nonzero element: the known absolute precision shifts.
    const long s = static_cast<long>(a.shift_) + static_cast<long>(b.shift_);
    return FElement::zero(a.field(), static_cast<int>(std::min<long>(s, kExactPrecision - 1)));
  }
  FElement r;
  r.unit_ = a.unit_ * b.unit_;
  r.shift_ = a.shift_ + b.shift_;
  r.zero_ = false;
  return r;
}

FElement operator/(const FElement& a, const FElement& b) {
  if (b.zero_) throw PrecisionError("division by an element indistinguishable from 0");
  if (a.is_exact_zero()) return a;
  if (a.zero_) return FElement::zero(a.field(), a.shift_ - b.shift_);
  return a * b.inverse();
}

bool FElement::congruent(const FElement& other) const { return (*this - other).is_zero(); }

bool operator==(const FElement& a, const FElement& b) {
  if (a.zero_ != b.zero_ || a.shift_ != b.shift_) return false;
  return a.zero_ || a.unit_ == b.unit_;
}

std::string FElement::str() const {
  if (is_exact_zero()) return "0";
  if (zero_) return "O(pi^" + std::to_string(shift_) + ")";
  std::ostringstream os;
  os << "pi^" << shift_ << " * (" << unit_.str() << ")";
  return os.str();
}

// ---- free functions ----

FElement divide(const OFElement& a, const OFElement& b) {
  if (!b.valuation().exact) throw PrecisionError("precision exhausted: divisor is 0 at its precision");
  return FElement(a) / FElement(b);
}

RootSet nth_roots(const OFElement& a, unsigned m) {
  if (m == 0) throw DomainError("0-th root requested");
  if (!a.is_unit()) throw DomainError("root of a non-unit requested");
  if (m == 1) return {{a}};
  const int p = a.field()->p();
  if (m % static_cast<unsigned>(p) == 0) {
    throw DomainError("root degree divisible by p is not supported");
  }
  const int res = a.residue();
  RootSet out;
  for (int r = 1; r < p; ++r) {
    mpz_class t;
    mpz_class base(r), mod(p);
    mpz_powm_ui(t.get_mpz_t(), base.get_mpz_t(), m, mod.get_mpz_t());
    if (t != res) continue;
    // Newton for y^m = a starting from the residue root.
    OFElement y(a.field(), static_cast<long>(r), a.prec());
    OFElement mm(a.field(), static_cast<long>(m), a.prec());
    for (int known = 1; known < a.prec(); known *= 2) {
      OFElement ym1 = y.pow(m - 1);
      y = y - (ym1 * y - a) * (mm * ym1).inverse();
    }
    out.roots.push_back(y);
  }
  if (out.roots.empty()) {
    throw DomainError("no residue root: " + std::to_string(res) + " is not an " + std::to_string(m) +
                      "-th power in F_" + std::to_string(p));
  }
  return out;
}

}  // namespace frobkit
