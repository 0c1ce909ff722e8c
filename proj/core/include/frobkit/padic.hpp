#pragma once

#include <gmpxx.h>

#include <climits>
#include <span>
#include <string>
#include <vector>

#include "frobkit/field.hpp"

namespace frobkit {

// Default absolute precision, in uniformizer digits.
inline constexpr int kDefaultPrecision = 12;

// Sentinel precision carried by structural (exact) zeros.
inline constexpr int kExactPrecision = INT_MAX / 4;

// v_F of an element; when `exact` is false the element vanishes at its
// precision and `value` is only a lower bound.
struct Valuation {
  int value = 0;
  bool exact = false;

  static Valuation of(int v) { return {v, true}; }
  static Valuation at_least(int v) { return {v, false}; }

  bool operator==(const Valuation&) const = default;
  std::string str() const;
};

// Element of O_F known modulo x^prec.
//
// Stored in the power basis 1, x, ..., x^(e-1) with the coefficient of x^i
// reduced into [0, p^ceil((prec-i)/e)), which is a canonical form for the
// class modulo x^prec.
class OFElement {
 public:
  OFElement() = default;
  OFElement(FieldPtr field, const mpz_class& n, int prec);
  OFElement(FieldPtr field, long n, int prec) : OFElement(std::move(field), mpz_class(n), prec) {}

  static OFElement zero(FieldPtr field, int prec) { return OFElement(std::move(field), 0L, prec); }
  static OFElement one(FieldPtr field, int prec) { return OFElement(std::move(field), 1L, prec); }
  static OFElement uniformizer(FieldPtr field, int prec);
  static OFElement from_coefficients(FieldPtr field, std::vector<mpz_class> coeffs, int prec);
  // Inverse of digits(): sum d_i x^i with every d_i in [0, p).
  static OFElement from_digits(FieldPtr field, std::span<const int> digits, int prec);

  const FieldPtr& field() const { return field_; }
  int prec() const { return prec_; }
  const std::vector<mpz_class>& coefficients() const { return c_; }

  Valuation valuation() const;
  bool is_zero() const;
  bool is_unit() const;
  // Image in F_p.
  int residue() const;
  // Uniformizer-adic digits d_0..d_{prec-1}, each in [0, p).
  std::vector<int> digits() const;

  // Reduce to a lower precision (no-op when n >= prec).
  OFElement reduced(int n) const;
  // Reinterpret the stored representative at precision n. Only meaningful
  // when the representative is known to be exact (e.g. small integers).
  OFElement lifted(int n) const;

  OFElement times_uniformizer_power(int k) const;
  // Exact division by x^k; requires the element to be divisible at its
  // precision. Result has precision prec - k.
  OFElement divided_by_uniformizer_power(int k) const;
  OFElement inverse() const;
  OFElement pow(unsigned long k) const;

  OFElement operator-() const;
  friend OFElement operator+(const OFElement& a, const OFElement& b);
  friend OFElement operator-(const OFElement& a, const OFElement& b);
  friend OFElement operator*(const OFElement& a, const OFElement& b);
  OFElement& operator+=(const OFElement& b) { return *this = *this + b; }
  OFElement& operator*=(const OFElement& b) { return *this = *this * b; }

  // Identical field, precision and representative.
  friend bool operator==(const OFElement& a, const OFElement& b);
  // Equal modulo x^min(prec).
  bool congruent(const OFElement& other) const;

  std::string str() const;

 private:
  OFElement(FieldPtr field, std::vector<mpz_class> coeffs, int prec, bool normalize);
  void normalize();

  FieldPtr field_;
  std::vector<mpz_class> c_;
  int prec_ = 0;
};

// Element of F = O_F[1/p] with capped relative precision: unit * x^shift
// where the unit is known modulo x^rel_prec. A zero element is only known
// modulo x^abs_prec; structural zeros carry kExactPrecision.
class FElement {
 public:
  FElement() = default;
  explicit FElement(const OFElement& a);
  FElement(FieldPtr field, long n, int prec) : FElement(OFElement(std::move(field), n, prec)) {}

  static FElement zero(FieldPtr field, int abs_prec);
  static FElement exact_zero(FieldPtr field) { return zero(std::move(field), kExactPrecision); }
  static FElement one(FieldPtr field, int prec) { return FElement(OFElement::one(std::move(field), prec)); }
  // unit * x^shift; `unit` must have valuation 0.
  static FElement from_unit(const OFElement& unit, int shift);
  // m * x^shift for an arbitrary O_F element m.
  static FElement scaled(const OFElement& m, int shift);

  const FieldPtr& field() const { return unit_.field(); }
  bool is_zero() const { return zero_; }
  bool is_exact_zero() const { return zero_ && shift_ >= kExactPrecision; }
  // Valuation if nonzero; for zeros the absolute precision.
  int shift() const { return shift_; }
  const OFElement& unit() const { return unit_; }
  int rel_prec() const { return zero_ ? 0 : unit_.prec(); }
  int abs_prec() const { return zero_ ? shift_ : shift_ + unit_.prec(); }
  Valuation valuation() const { return zero_ ? Valuation::at_least(shift_) : Valuation::of(shift_); }
  // Lower bound for the valuation that is exact for nonzero elements.
  int valuation_floor() const { return shift_; }
  bool is_integral() const { return zero_ ? shift_ >= 0 : shift_ >= 0; }

  // Integral element as an O_F element at precision min(abs_prec, max_prec).
  OFElement to_integral(int max_prec) const;
  FElement with_abs_prec(int n) const;

  FElement inverse() const;
  FElement pow(unsigned long k) const;
  FElement operator-() const;
  friend FElement operator+(const FElement& a, const FElement& b);
  friend FElement operator-(const FElement& a, const FElement& b);
  friend FElement operator*(const FElement& a, const FElement& b);
  friend FElement operator/(const FElement& a, const FElement& b);
  FElement& operator+=(const FElement& b) { return *this = *this + b; }
  FElement& operator-=(const FElement& b) { return *this = *this - b; }
  FElement& operator*=(const FElement& b) { return *this = *this * b; }

  // Equal modulo x^min(abs_prec).
  bool congruent(const FElement& other) const;
  // Identical representation.
  friend bool operator==(const FElement& a, const FElement& b);

  std::string str() const;

 private:
  OFElement unit_;
  int shift_ = 0;
  bool zero_ = true;
};

// a / b as an element of F.
// Throws PrecisionError when b is indistinguishable from 0.
FElement divide(const OFElement& a, const OFElement& b);

// m-th roots of a unit, one per residue root in F_p^x, each lifted by Newton
// iteration to the precision of `a`.
struct RootSet {
  std::vector<OFElement> roots;
  bool unique() const { return roots.size() == 1; }
};

// Throws DomainError("no residue root") if the residue of a is not an m-th
// power in F_p, and when p divides m (the residue map is then not separable).
RootSet nth_roots(const OFElement& a, unsigned m);

}  // namespace frobkit
