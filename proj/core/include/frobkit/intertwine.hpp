#pragma once

#include <optional>
#include <vector>

#include "frobkit/series.hpp"

namespace frobkit {

struct Compatibility {
  int s = 0;
  int s2 = 0;
  bool ok = false;
};

// ok iff the lowest nonzero degrees agree and v(a_s) = v(a'_s).
Compatibility check_compatible(const FrobLift& f, const FrobLift& f2);

// Candidates for the leading coefficient of xi. For s = 1 this is {choice}
// (default 1) after checking a_1 = a'_1; for s > 1 every (s-1)-th root of
// a'_s / a_s lifting a residue root.
std::vector<OFElement> compute_mu0(const FrobLift& f, const FrobLift& f2,
                                   const std::optional<OFElement>& choice = std::nullopt);

// N_target + M * v(a_s): the starting precision the recursion needs.
int required_precision(const FrobLift& f, const FrobLift& f2, int M, int N_target);

// Precision of f and f2 needed when mu0 is derived from them: for s > 1 the
// ratio a'_s / a_s costs v(a_s) digits.
int required_lift_precision(const FrobLift& f, const FrobLift& f2, int M, int N_target);

struct PrecisionLoss {
  int degree = 0;
  int divisor_valuation = 0;
  int abs_prec = 0;
};

struct IntertwineResult {
  USeries xi;
  OFElement mu0;
  bool integral = false;
  int verified_M = 0;
  int verified_N = 0;
  std::vector<PrecisionLoss> losses;
};

// xi(x) = mu0 x + mu_2 x^2 + ... modulo x^M with f(xi) = xi(f2). The
// coefficients of f, f2 and mu0 must be known to required_precision.
IntertwineResult solve_intertwiner(const FrobLift& f, const FrobLift& f2, const OFElement& mu0, int M,
                                   int N_target);

// One result per mu0 candidate.
std::vector<IntertwineResult> solve_intertwiner_all(const FrobLift& f, const FrobLift& f2, int M, int N_target,
                                                    const std::optional<OFElement>& choice = std::nullopt);

// f(xi) - xi(f2) = 0 mod (x^M, pi^N), by direct composition. Throws
// PrecisionError when no coefficient is a witness of failure but some are
// known to fewer than N digits.
bool verify_intertwine(const FrobLift& f, const FrobLift& f2, const USeries& xi, int M, int N);

}  // namespace frobkit
