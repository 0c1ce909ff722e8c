#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/exact.hpp"
#include "frobkit/perf_series.hpp"
#include "frobkit/series.hpp"

namespace frobkit {

inline constexpr int kMaxWittLength = 5;

// Exponents of x_0..x_{n-1} in slots [0, kMaxWittLength) and of y_0..y_{n-1}
// in slots [kMaxWittLength, 2 kMaxWittLength).
using Monomial = std::array<std::uint16_t, 2 * kMaxWittLength>;
using WittPoly = std::map<Monomial, OFExact>;

inline constexpr int x_slot(int j) { return j; }
inline constexpr int y_slot(int j) { return kMaxWittLength + j; }

// Sum and product polynomials of the ramified Witt vectors W_pi, i.e. the
// unique laws for which w_m(a) = sum_{j<=m} pi^j a_j^(p^(m-j)) is additive
// and multiplicative.
struct WittPolySet {
  FieldPtr field;
  int length = 0;
  std::vector<WittPoly> sum;
  std::vector<WittPoly> prod;
};

// Memoized per (field, length); thread-safe. Throws DomainError for lengths
// outside [1, kMaxWittLength] and InternalError("integrality failure ...")
// if a coefficient is not divisible by pi^m.
std::shared_ptr<const WittPolySet> witt_polys(const FieldPtr& field, int n);

// w_m in the x variables (slot offset 0) or y variables (offset kMaxWittLength).
WittPoly ghost_poly(const FieldPtr& field, int m, int offset);
WittPoly poly_mul(const WittPoly& a, const WittPoly& b);
WittPoly poly_pow(const WittPoly& a, unsigned long k);
void poly_add_into(WittPoly& a, const WittPoly& b, const OFExact& scale);
std::string monomial_str(const Monomial& m);

// Recomputes sum_j pi^j S_j^(p^(m-j)) from the stored polynomials and
// compares with w_m(x) + w_m(y) (and the product analogue). Returns an empty
// string on success, else a description of the first mismatch.
std::string check_ghost_compatibility(const WittPolySet& set);

// Value of a Witt polynomial at exact points x, y (each of length >= the
// number of variables used).
OFExact eval_poly(const WittPoly& poly, const std::vector<OFExact>& x, const std::vector<OFExact>& y);
// w_m(a) = sum_{j<=m} pi^j a_j^(p^(m-j)).
OFExact ghost_component(const std::vector<OFExact>& a, int m);

struct WittSelfTest {
  int length = 0;
  // Empty when the symbolic ghost and integrality checks pass.
  std::string symbolic_failure;
  std::vector<int> sum_terms;
  std::vector<int> prod_terms;
  int samples = 0;
  int sample_failures = 0;
  bool ok() const { return symbolic_failure.empty() && sample_failures == 0; }
};

// Symbolic check of the length-n polynomials plus `samples` evaluations at
// random integral points comparing ghost components exactly.
WittSelfTest witt_selftest(const FieldPtr& field, int n, int samples, std::uint64_t seed);

// Length-n Witt vector over the perfected series ring.
class WittVec {
 public:
  WittVec() = default;
  WittVec(FieldPtr field, std::vector<PerfSeries> components);

  static WittVec zero(const FieldPtr& field, int n, PerfBudget budget);
  static WittVec one(const FieldPtr& field, int n, PerfBudget budget);

  const FieldPtr& field() const { return field_; }
  int length() const { return static_cast<int>(c_.size()); }
  const PerfSeries& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<PerfSeries>& components() const { return c_; }
  PerfBudget budget() const { return c_.front().budget(); }
  bool truncated() const;

  friend bool operator==(const WittVec& a, const WittVec& b) { return a.c_ == b.c_; }
  std::string str() const;

 private:
  FieldPtr field_;
  std::vector<PerfSeries> c_;
};

// (r, 0, ..., 0).
WittVec teich(const FieldPtr& field, const PerfSeries& r, int n);
// Image of a scalar of O_F under O_F -> W_pi(F_p) -> W_pi(R).
WittVec witt_scalar(const OFElement& c, int n, PerfBudget budget);
// The same components as exact residues (c_0, ..., c_{n-1}) in F_p.
std::vector<int> witt_scalar_digits(const OFElement& c, int n);

WittVec witt_add(const WittVec& a, const WittVec& b);
WittVec witt_mul(const WittVec& a, const WittVec& b);
WittVec witt_neg(const WittVec& a);
WittVec witt_frob(const WittVec& a);
WittVec witt_frob_inv(const WittVec& a);

// a_1 x + ... + a_p x^p evaluated with Witt arithmetic.
WittVec witt_apply(const FrobLift& f, const WittVec& x);
// E(x) evaluated with Witt arithmetic.
WittVec witt_apply(const EisensteinE& E, const WittVec& x);

struct FixedPointResult {
  WittVec u;
  int iterations = 0;
};

// Iterates x -> f(frob_inv(x)) from [t] (or `start`) until two consecutive
// iterates agree exactly. Throws InternalError after 2n iterations without
// stabilization and BudgetError when the perfected-series budget runs out.
FixedPointResult f_fixed_point(const FrobLift& f, int n, PerfBudget budget = {},
                               const std::optional<WittVec>& start = std::nullopt);

struct EReduction {
  bool ok = false;
  // v_R of component 0 of E(u), with v_R(t) = 1/(e0 e_F); nullopt if zero.
  std::optional<Rational> v_R;
  // v(pi) = 1/e_F in the same normalization.
  Rational v_pi;
};
EReduction check_E_reduction(const EisensteinE& E, const WittVec& u);

}  // namespace frobkit
