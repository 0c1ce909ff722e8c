#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frobkit/padic.hpp"

namespace frobkit {

// Default u-adic order cap.
inline constexpr int kDefaultOrderCap = 40;

// Power series c_0 + c_1 u + ... over F, known modulo u^cap. Each
// coefficient carries its own p-adic precision.
class USeries {
 public:
  USeries() = default;
  // The exact zero series.
  USeries(FieldPtr field, int cap);

  static USeries zero(FieldPtr field, int cap) { return USeries(std::move(field), cap); }
  static USeries constant(const FElement& c, int cap);
  static USeries one(FieldPtr field, int prec, int cap);
  // c * u^k.
  static USeries monomial(const FElement& c, int k, int cap);
  static USeries from_coefficients(FieldPtr field, std::vector<FElement> coeffs, int cap);
  // Polynomial with O_F coefficients (missing degrees are exact zeros).
  static USeries polynomial(const std::vector<OFElement>& coeffs, int cap);
  static USeries from_integers(FieldPtr field, const std::vector<long>& coeffs, int prec, int cap);

  const FieldPtr& field() const { return field_; }
  int cap() const { return static_cast<int>(c_.size()); }
  const FElement& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<FElement>& coefficients() const { return c_; }
  void set(int n, FElement c);

  USeries truncated(int cap) const;
  // Caps every coefficient at absolute precision n.
  USeries with_abs_prec(int n) const;
  // Multiply by u^k; the cap grows by k.
  USeries shifted(int k) const;
  // Divide by u^k; the first k coefficients must be exact zeros.
  USeries unshifted(int k) const;

  bool is_integral() const;
  // All coefficients vanish at their precision.
  bool is_zero() const;
  bool is_exact_zero() const;
  // Index of the first coefficient that is not an exact zero.
  std::optional<int> u_valuation() const;
  // Smallest absolute precision over the coefficients.
  int min_abs_prec() const;
  // Smallest coefficient valuation (lower bounds for inexact zeros).
  int min_valuation() const;

  USeries inverse() const;
  USeries operator-() const;
  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b);
  friend USeries operator*(const USeries& a, const USeries& b);
  friend USeries operator*(const FElement& c, const USeries& a);
  USeries& operator+=(const USeries& b) { return *this = *this + b; }
  USeries& operator*=(const USeries& b) { return *this = *this * b; }

  // Coefficientwise congruence up to the smaller cap.
  bool congruent(const USeries& other) const;
  friend bool operator==(const USeries& a, const USeries& b);

  std::string str() const;

 private:
  FieldPtr field_;
  std::vector<FElement> c_;
};

// f(u) = u^p + a_{p-1} u^{p-1} + ... + a_1 u with a_i = 0 mod the uniformizer.
class FrobLift {
 public:
  FrobLift() = default;
  // coeffs = a_1, ..., a_p.
  static FrobLift make(std::vector<OFElement> coeffs);

  const FieldPtr& field() const { return a_.front().field(); }
  int p() const { return static_cast<int>(a_.size()); }
  const OFElement& a(int i) const { return a_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<OFElement>& coefficients() const { return a_; }
  int prec() const;
  // Smallest i with a_i != 0.
  int lowest_degree() const;

  // f(y) for a series y with y(0) = 0.
  USeries apply(const USeries& y) const;
  USeries series(int cap) const;
  USeries series_over_u(int cap) const;
  // f^(n)(u) = f(f(...f(u))).
  USeries iterate(int n, int cap) const;

  bool operator==(const FrobLift& o) const { return a_ == o.a_; }

 private:
  std::vector<OFElement> a_;
};

// Monic E(u) = c_0 + c_1 u + ... + u^e0 with E = u^e0 mod the uniformizer.
class EisensteinE {
 public:
  EisensteinE() = default;
  // Requires monic, c_i = 0 mod pi for i < e0 and v(c_0) = 1.
  static EisensteinE make(std::vector<OFElement> coeffs);
  // No validation; used to build negative controls.
  static EisensteinE unchecked(std::vector<OFElement> coeffs);

  const FieldPtr& field() const { return c_.front().field(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const OFElement& c0() const { return c_.front(); }
  const std::vector<OFElement>& coefficients() const { return c_; }
  bool is_eisenstein() const;
  USeries series(int cap) const;

  bool operator==(const EisensteinE& o) const { return c_ == o.c_; }

 private:
  std::vector<OFElement> c_;
};

// h(g(u)); requires g(0) to be an exact zero. The result is known modulo
// u^min(cap_h * v_u(g), cap_g).
USeries compose(const USeries& h, const USeries& g);

// true iff every coefficient below `cap` is 0 mod pi^N. Throws PrecisionError
// when nothing contradicts this but some coefficient is known to fewer digits.
bool vanishes_mod(const USeries& x, int cap, int N);

// x^k by repeated squaring.
USeries series_pow(const USeries& x, unsigned long k, int prec);

// phi^n(x) = x(f^(n)(u)).
USeries frobenius(const USeries& x, const FrobLift& f, int n = 1);

// Weierstrass degree: least n with v(c_n) = 0, or nullopt when the reduction
// vanishes up to the cap.
std::optional<int> wdeg(const USeries& x);

// x = q E + r with deg r < e0, computed in O_F[[u]]. Coefficient precision
// accounts for the unknown tail of x beyond its cap.
struct WeierstrassDivision {
  USeries quotient;
  USeries remainder;
};
WeierstrassDivision weierstrass_divide(const USeries& x, const EisensteinE& E);

struct EOrder {
  int k = 0;
  USeries cofactor;
};
// Largest k with E^k | x at available precision, with x = E^k * cofactor.
// Throws PrecisionError("indeterminate") when a remainder vanishes only
// because precision ran out.
EOrder e_order(const USeries& x, const EisensteinE& E);

// w(x) = min_n (v(c_n) + floor(n / (e0 p))).
struct Gauge {
  long value = 0;
  bool exact = false;
  bool infinite = false;
  std::string str() const;
};
Gauge gauge_alpha(const USeries& x, int e0);

}  // namespace frobkit
