#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/rational.hpp"

namespace frobkit {

// Exponents are multiples of 1/p^root_levels and at most exp_bound.
struct PerfBudget {
  int root_levels = 6;
  long exp_bound = 32;
  bool operator==(const PerfBudget&) const = default;
};

// Truncated element of F_p[[t^(1/p^inf)]], t standing for the reduction of
// the uniformizer. Terms are (numerator, coefficient) pairs with exponent
// numerator / p^J, sorted by numerator, coefficients in [1, p).
//
// Products drop terms with exponent above exp_bound and set `truncated`:
// the value is then only known modulo t^(>exp_bound).
class PerfSeries {
 public:
  struct Term {
    long num;
    int coeff;
    bool operator==(const Term&) const = default;
  };

  PerfSeries() = default;
  PerfSeries(int p, PerfBudget budget) : p_(p), budget_(budget) {}

  static PerfSeries constant(int p, PerfBudget budget, long c);
  // c * t^alpha; alpha must be a nonnegative multiple of 1/p^J.
  static PerfSeries monomial(int p, PerfBudget budget, const Rational& alpha, long c = 1);
  // Build from (numerator over p^den_pow, coefficient) triples.
  static PerfSeries from_terms(int p, PerfBudget budget, const std::vector<std::pair<Rational, long>>& terms,
                               bool truncated = false);

  int p() const { return p_; }
  const PerfBudget& budget() const { return budget_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool truncated() const { return truncated_; }
  bool is_zero() const { return terms_.empty(); }
  // Exponent denominator of a numerator, as a rational exponent.
  Rational exponent(long num) const;
  // Lowest exponent with nonzero coefficient; throws on zero.
  Rational order() const;
  int coefficient(const Rational& alpha) const;
  // Largest k such that some exponent needs denominator p^k.
  int root_level() const;

  PerfSeries frob() const;
  // Exact p-th root; throws BudgetError when an exponent would need more
  // than J root levels or when the value is truncated.
  PerfSeries frob_inv() const;
  PerfSeries pow(unsigned long k) const;

  PerfSeries operator-() const;
  friend PerfSeries operator+(const PerfSeries& a, const PerfSeries& b);
  friend PerfSeries operator-(const PerfSeries& a, const PerfSeries& b);
  friend PerfSeries operator*(const PerfSeries& a, const PerfSeries& b);
  PerfSeries scaled(long c) const;
  friend bool operator==(const PerfSeries& a, const PerfSeries& b) {
    return a.p_ == b.p_ && a.truncated_ == b.truncated_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  long denominator() const;
  long max_num() const;
  void check_compatible(const PerfSeries& o) const;

  int p_ = 2;
  PerfBudget budget_{};
  std::vector<Term> terms_;
  bool truncated_ = false;
};

}  // namespace frobkit
