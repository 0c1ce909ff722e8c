#include "frobkit/exact.hpp"

#include <climits>
#include <sstream>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace {

int vp_int(const mpz_class& n, unsigned long p) {
  mpz_class t = n;
  int v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++v;
  }
  return v;
}

int vp_rat(const Rational& q, unsigned long p) { return vp_int(q.get_num(), p) - vp_int(q.get_den(), p); }

void reduce(std::vector<Rational>& r, const Field& F) {
  const int e = F.degree();
  const auto& g = F.eisenstein();
  for (std::size_t k = r.size(); k-- > static_cast<std::size_t>(e);) {
    if (r[k] == 0) continue;
    Rational t = r[k];
    r[k] = 0;
    for (int i = 0; i < e; ++i) {
      if (g[static_cast<std::size_t>(i)] != 0) {
        r[k - static_cast<std::size_t>(e - i)] -= t * Rational(g[static_cast<std::size_t>(i)]);
      }
    }
  }
  r.resize(static_cast<std::size_t>(e));
}

}  // namespace

OFExact::OFExact(FieldPtr field, const Rational& q) : field_(std::move(field)) {
  c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
  c_[0] = q;
}

OFExact OFExact::uniformizer(FieldPtr field) {
  std::vector<Rational> c(static_cast<std::size_t>(field->degree() + 1), Rational(0));
  c[1] = 1;
  return from_coefficients(std::move(field), std::move(c));
}

OFExact OFExact::from_coefficients(FieldPtr field, std::vector<Rational> coeffs) {
  OFExact r;
  r.field_ = std::move(field);
  if (coeffs.size() < static_cast<std::size_t>(r.field_->degree())) {
    coeffs.resize(static_cast<std::size_t>(r.field_->degree()), Rational(0));
  }
  reduce(coeffs, *r.field_);
  r.c_ = std::move(coeffs);
  return r;
}

OFExact OFExact::from_of(const OFElement& a) {
  std::vector<Rational> c;
  for (const auto& z : a.coefficients()) c.emplace_back(z);
  return from_coefficients(a.field(), std::move(c));
}

bool OFExact::is_zero() const {
  for (const auto& q : c_) {
    if (q != 0) return false;
  }
  return true;
}

int OFExact::valuation() const {
  const int e = field_->degree();
  const auto p = static_cast<unsigned long>(field_->p());
  int best = INT_MAX;
  for (int i = 0; i < e; ++i) {
    const auto& q = c_[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    best = std::min(best, e * vp_rat(q, p) + i);
  }
  return best;
}

int OFExact::residue() const {
  if (!is_integral()) throw DomainError("residue of a non-integral element");
  const long p = field_->p();
  const Rational& q = c_[0];
  mpz_class pm(p), inv, r;
  mpz_class den = q.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t());
  r = q.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), pm.get_mpz_t());
  return static_cast<int>(r.get_si());
}

OFElement OFExact::to_of(int prec) const {
  if (!is_integral()) throw DomainError("element is not in O_F: valuation " + std::to_string(valuation()));
  const int e = field_->degree();
  std::vector<mpz_class> c(static_cast<std::size_t>(e));
  // Integral elements have p-integral coefficients (the power basis is an
  // integral basis), so denominators are units modulo p^k.
  const mpz_class& m = field_->p_power(std::min(field_->coefficient_digits(0, prec) + 1, Field::kMaxPrecision));
  for (int i = 0; i < e; ++i) {
    const auto& q = c_[static_cast<std::size_t>(i)];
    mpz_class inv;
    mpz_class den = q.get_den();
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
      throw InternalError("non p-integral coefficient in an integral element");
    }
    c[static_cast<std::size_t>(i)] = q.get_num() * inv;
  }
  return OFElement::from_coefficients(field_, std::move(c), prec);
}

OFExact OFExact::times_uniformizer_power(int k) const {
  if (k == 0) return *this;
  const int e = field_->degree();
  OFExact r = *this;
  if (k > 0) {
    std::vector<Rational> c(static_cast<std::size_t>(e + k), Rational(0));
    for (int i = 0; i < e; ++i) c[static_cast<std::size_t>(i + k)] = c_[static_cast<std::size_t>(i)];
    reduce(c, *field_);
    r.c_ = std::move(c);
    return r;
  }
  // 1/x = -(g1 + g2 x + ... + x^(e-1)) / g0
  const auto& g = field_->eisenstein();
  std::vector<Rational> inv(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) inv[static_cast<std::size_t>(i)] = -Rational(g[static_cast<std::size_t>(i) + 1]) / Rational(g[0]);
  OFExact xinv = from_coefficients(field_, inv);
  for (int s = 0; s < -k; ++s) r = r * xinv;
  return r;
}

OFExact OFExact::pow(unsigned long k) const {
  OFExact result(field_, 1L);
  OFExact base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

OFExact OFExact::operator-() const {
  OFExact r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

OFExact& OFExact::operator+=(const OFExact& b) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

OFExact& OFExact::operator-=(const OFExact& b) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

OFExact operator+(const OFExact& a, const OFExact& b) {
  OFExact r = a;
  r += b;
  return r;
}

OFExact operator-(const OFExact& a, const OFExact& b) {
  OFExact r = a;
  r -= b;
  return r;
}

OFExact operator*(const OFExact& a, const OFExact& b) {
  const int e = a.field_->degree();
  OFExact r;
  r.field_ = a.field_;
  if (e == 1) {
    r.c_ = {a.c_[0] * b.c_[0]};
    return r;
  }
  std::vector<Rational> c(static_cast<std::size_t>(2 * e - 1), Rational(0));
  for (int i = 0; i < e; ++i) {
    if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < e; ++j) {
      if (b.c_[static_cast<std::size_t>(j)] == 0) continue;
      c[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
  }
  reduce(c, *a.field_);
  r.c_ = std::move(c);
  return r;
}

std::string OFExact::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? ", " : "") << c_[i].get_str();
  os << "]";
  return os.str();
}

}  // namespace frobkit
