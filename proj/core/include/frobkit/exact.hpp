#pragma once

#include <string>
#include <vector>

#include "frobkit/padic.hpp"
#include "frobkit/rational.hpp"

namespace frobkit {

// Exact element of F = Q(x)/(g) with rational power-basis coefficients.
// Used wherever identities must hold with no precision bookkeeping at all
// (Witt polynomial recursion, ghost inversion of scalars).
class OFExact {
 public:
  OFExact() = default;
  OFExact(FieldPtr field, const Rational& q);
  OFExact(FieldPtr field, long n) : OFExact(std::move(field), Rational(n)) {}

  static OFExact uniformizer(FieldPtr field);
  static OFExact from_coefficients(FieldPtr field, std::vector<Rational> coeffs);
  // The stored representative of an O_F element, read as exact.
  static OFExact from_of(const OFElement& a);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  // v_F, or INT_MAX for zero.
  int valuation() const;
  bool is_integral() const { return valuation() >= 0; }
  // Image in F_p of an integral element.
  int residue() const;
  OFElement to_of(int prec) const;

  OFExact times_uniformizer_power(int k) const;
  OFExact pow(unsigned long k) const;

  OFExact operator-() const;
  friend OFExact operator+(const OFExact& a, const OFExact& b);
  friend OFExact operator-(const OFExact& a, const OFExact& b);
  friend OFExact operator*(const OFExact& a, const OFExact& b);
  OFExact& operator+=(const OFExact& b);
  OFExact& operator-=(const OFExact& b);
  friend bool operator==(const OFExact& a, const OFExact& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  FieldPtr field_;
  std::vector<Rational> c_;
};

}  // namespace frobkit
