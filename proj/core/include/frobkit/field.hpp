#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace frobkit {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// O_F = Z_p[x]/(g) for a monic Eisenstein polynomial g; the image of x is the
// uniformizer. The residue field is always F_p.
class Field {
 public:
  // Largest supported absolute precision, in uniformizer digits.
  static constexpr int kMaxPrecision = 1024;

  // g is given low degree first: g0, g1, ..., g_e = 1.
  static FieldPtr make(int p, std::vector<mpz_class> eisenstein);
  // F = Q_p with uniformizer p, i.e. g = x - p.
  static FieldPtr rational(int p);

  int p() const { return p_; }
  // e_F = [F : Q_p] = v_F(p).
  int degree() const { return e_; }
  const std::vector<mpz_class>& eisenstein() const { return g_; }

  const mpz_class& p_power(int k) const;
  // Modulus p^ceil((prec - i)/e) for the coefficient of x^i, i.e. the
  // coefficient exponent that makes an element exact modulo x^prec.
  int coefficient_digits(int index, int prec) const;

  // p/x written in the power basis, coefficients reduced mod p^kMaxPrecision.
  const std::vector<mpz_class>& p_over_uniformizer() const { return p_over_pi_; }

  bool same_as(const Field& other) const;
  std::string describe() const;

 private:
  Field(int p, std::vector<mpz_class> g);

  int p_;
  int e_;
  std::vector<mpz_class> g_;
  std::vector<mpz_class> powers_;
  std::vector<mpz_class> p_over_pi_;
};

bool is_prime(long n);

void require_same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace frobkit
