#include "frobkit/field.hpp"

#include <sstream>

#include "frobkit/errors.hpp"
#include "frobkit/rational.hpp"

namespace frobkit {

namespace {

int padic_valuation(const mpz_class& n, int p) {
  if (n == 0) return -1;
  mpz_class t = n;
  int v = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(p))) {
    t /= p;
    ++v;
  }
  return v;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw DomainError("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Field::Field(int p, std::vector<mpz_class> g) : p_(p), e_(static_cast<int>(g.size()) - 1), g_(std::move(g)) {
  powers_.reserve(kMaxPrecision + 2);
  mpz_class pw = 1;
  for (int k = 0; k <= kMaxPrecision + 1; ++k) {
    powers_.push_back(pw);
    pw *= p_;
  }
  // g0 = p*w with w a p-adic unit; then p/x = -(g1 + g2 x + ... + x^(e-1)) / w.
  const mpz_class& modulus = powers_[kMaxPrecision];
  mpz_class w = g_[0] / p_;
  mpz_class w_inv;
  mpz_invert(w_inv.get_mpz_t(), w.get_mpz_t(), modulus.get_mpz_t());
  p_over_pi_.resize(static_cast<std::size_t>(e_));
  for (int i = 0; i < e_; ++i) {
    mpz_class c = -g_[static_cast<std::size_t>(i) + 1] * w_inv;
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    p_over_pi_[static_cast<std::size_t>(i)] = c;
  }
}

FieldPtr Field::make(int p, std::vector<mpz_class> g) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (g.size() < 2) throw DomainError("Eisenstein polynomial must have degree >= 1");
  if (g.back() != 1) throw DomainError("Eisenstein polynomial must be monic");
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    if (g[i] != 0 && padic_valuation(g[i], p) == 0) {
      throw DomainError("polynomial is not Eisenstein: coefficient of x^" + std::to_string(i) +
                        " is a p-adic unit");
    }
  }
  if (padic_valuation(g[0], p) != 1) {
    throw DomainError("polynomial is not Eisenstein: v_p(g0) must be exactly 1");
  }
  return FieldPtr(new Field(p, std::move(g)));
}

FieldPtr Field::rational(int p) { return make(p, {mpz_class(-p), mpz_class(1)}); }

const mpz_class& Field::p_power(int k) const {
  if (k < 0 || k > kMaxPrecision + 1) {
    throw PrecisionError("requested p^" + std::to_string(k) + " beyond supported precision");
  }
  return powers_[static_cast<std::size_t>(k)];
}

int Field::coefficient_digits(int index, int prec) const {
  if (prec <= index) return 0;
  return static_cast<int>(ceil_div(prec - index, e_));
}

bool Field::same_as(const Field& other) const {
  return this == &other || (p_ == other.p_ && g_ == other.g_);
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "Q_" << p_ << "[x]/(";
  bool first = true;
  for (std::size_t i = g_.size(); i-- > 0;) {
    if (g_[i] == 0) continue;
    if (!first) os << (g_[i] > 0 ? " + " : " - ");
    else if (g_[i] < 0) os << "-";
    mpz_class a = abs(g_[i]);
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  os << ")";
  return os.str();
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b) throw DomainError("operation on an element without a field");
  if (a != b && !a->same_as(*b)) {
    throw DomainError("field mismatch: " + a->describe() + " vs " + b->describe());
  }
}

}  // namespace frobkit
