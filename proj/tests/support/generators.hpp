#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "frobkit/kisin.hpp"
#include "frobkit/matrix.hpp"
#include "frobkit/series.hpp"
#include "frobkit/witt.hpp"

namespace frobkit::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

// Uniformly random element of O_F / pi^prec.
OFElement random_of(Rng& rng, const FieldPtr& field, int prec);
OFElement random_unit(Rng& rng, const FieldPtr& field, int prec);
// pi^v * unit.
OFElement random_with_valuation(Rng& rng, const FieldPtr& field, int v, int prec);

// Integral polynomial of degree <= deg.
USeries random_series(Rng& rng, const FieldPtr& field, int deg, int prec, int cap);
// Random series with unit constant term.
USeries random_unit_series(Rng& rng, const FieldPtr& field, int deg, int prec, int cap);

EisensteinE random_eisenstein(Rng& rng, const FieldPtr& field, int e0, int prec);
// u^p + sum a_i u^i with v(a_i) >= min_val (a_1 also forced to min_val when
// a1_exact).
FrobLift random_froblift(Rng& rng, const FieldPtr& field, int prec, int min_val, bool a1_exact);

// L * R with L unit lower triangular and R upper triangular with unit
// diagonal, so the determinant is a unit series.
SeriesMatrix random_unit_matrix(Rng& rng, const FieldPtr& field, int d, int deg, int prec, int cap);

// h(g) by Horner's rule with plain series products; independent of compose().
USeries horner_compose(const USeries& h, const USeries& g);
// g iterated n times by horner_compose, starting from u.
USeries horner_iterate(const USeries& g, int n, int prec, int cap);

// prod_{k=0..n} phi^k(E / c_0), each factor by horner_compose.
USeries lambda_trunc(const EisensteinE& E, const FrobLift& f, int n, int prec, int cap);

// Random Witt vector of length n with short components.
WittVec random_witt(Rng& rng, const FieldPtr& field, int n, PerfBudget budget, int max_terms);

}  // namespace frobkit::testing
