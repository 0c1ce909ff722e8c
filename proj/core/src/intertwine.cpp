#include "frobkit/intertwine.hpp"

#include <algorithm>

#include "frobkit/errors.hpp"

namespace frobkit {

namespace {

int lowest_valuation(const FrobLift& f) { return f.a(f.lowest_degree()).valuation().value; }

int starting_precision(const FrobLift& f, const FrobLift& f2, const OFElement& mu0) {
  return std::min({f.prec(), f2.prec(), mu0.prec()});
}

}  // namespace

Compatibility check_compatible(const FrobLift& f, const FrobLift& f2) {
  require_same_field(f.field(), f2.field());
  if (f.p() != f2.p()) throw DomainError("Frobenius lifts of different degrees");
  Compatibility c;
  c.s = f.lowest_degree();
  c.s2 = f2.lowest_degree();
  c.ok = c.s == c.s2 && f.a(c.s).valuation() == f2.a(c.s2).valuation();
  return c;
}

std::vector<OFElement> compute_mu0(const FrobLift& f, const FrobLift& f2, const std::optional<OFElement>& choice) {
  const Compatibility c = check_compatible(f, f2);
  if (!c.ok) throw DomainError("incompatible Frobenius lifts: lowest terms differ");
  const int s = c.s;
  if (s == 1) {
    if (!f.a(1).congruent(f2.a(1))) throw DomainError("incompatible linear terms");
    const OFElement mu = choice ? *choice : OFElement::one(f.field(), std::min(f.prec(), f2.prec()));
    if (!mu.is_unit()) throw DomainError("mu0 must be a unit");
    return {mu};
  }
  // a'_s / a_s is a unit since both have the same valuation.
  const FElement ratio = FElement(f2.a(s)) / FElement(f.a(s));
  const OFElement unit = ratio.to_integral(ratio.abs_prec());
  std::vector<OFElement> roots;
  try {
    roots = nth_roots(unit, static_cast<unsigned>(s - 1)).roots;
  } catch (const DomainError& e) {
    throw DomainError(std::string("no mu0 in O_F: ") + e.what());
  }
  if (choice) {
    for (const auto& r : roots) {
      if (r.residue() == choice->residue()) return {r};
    }
    throw DomainError("requested mu0 is not a root of a'_s / a_s");
  }
  return roots;
}

int required_precision(const FrobLift& f, const FrobLift& f2, int M, int N_target) {
  const Compatibility c = check_compatible(f, f2);
  if (!c.ok) throw DomainError("incompatible Frobenius lifts: lowest terms differ");
  return N_target + M * lowest_valuation(f);
}

int required_lift_precision(const FrobLift& f, const FrobLift& f2, int M, int N_target) {
  const int need = required_precision(f, f2, M, N_target);
  return f.lowest_degree() > 1 ? need + lowest_valuation(f) : need;
}

IntertwineResult solve_intertwiner(const FrobLift& f, const FrobLift& f2, const OFElement& mu0, int M, int N_target) {
  if (M < 2) throw DomainError("intertwiner needs M >= 2");
  const Compatibility c = check_compatible(f, f2);
  if (!c.ok) throw DomainError("incompatible Frobenius lifts: lowest terms differ");
  if (!mu0.is_unit()) throw DomainError("mu0 must be a unit");
  const int s = c.s;
  const int need = required_precision(f, f2, M, N_target);
  const int have = starting_precision(f, f2, mu0);
  if (have < need) {
    throw PrecisionError("starting precision " + std::to_string(have) + " is insufficient: need " +
                         std::to_string(need) + " for M = " + std::to_string(M) + ", N = " + std::to_string(N_target));
  }
  const FieldPtr& field = f.field();
  const FElement m0(mu0);
  if (s == 1) {
    if (!f.a(1).congruent(f2.a(1))) throw DomainError("incompatible linear terms");
  } else if (!(FElement(f.a(s)) * m0.pow(static_cast<unsigned long>(s - 1))).congruent(FElement(f2.a(s)))) {
    throw DomainError("mu0 does not satisfy a_s mu0^(s-1) = a'_s");
  }

  // Coefficient i+s of f(xi_i) - xi_i(f2) only involves xi below degree i+s+1.
  const int cap = M + s - 1;
  std::vector<USeries> f2_powers{USeries(field, cap), f2.series(cap)};
  for (int k = 2; k < M; ++k) f2_powers.push_back(f2_powers.back() * f2_powers[1]);

  IntertwineResult out;
  out.mu0 = mu0;
  USeries xi = USeries::monomial(m0, 1, M);
  const FElement a_s(f.a(s));
  const bool integral_expected = f.a(s).valuation().value == 1 && f2.a(s).valuation().value == 1;

  for (int i = 1; i + 1 < M; ++i) {
    const int deg = i + s;
    USeries part(field, deg + 1);
    for (int k = 1; k <= i; ++k) part.set(k, xi[k]);
    FElement lambda = f.apply(part)[deg];
    for (int k = 1; k <= i; ++k) lambda -= xi[k] * f2_powers[static_cast<std::size_t>(k)][deg];

    bool xi_integral = true;
    for (int k = 1; k <= i; ++k) xi_integral = xi_integral && xi[k].is_integral();
    if (xi_integral) {
      if (!lambda.is_zero() && lambda.shift() < 1) {
        throw InternalError("internal inconsistency: lambda at degree " + std::to_string(deg) + " is not 0 mod pi");
      }
      if (lambda.is_zero() && lambda.abs_prec() < 1) {
        throw PrecisionError("precision exhausted at degree " + std::to_string(i + 1));
      }
    }

    FElement divisor = s == 1 ? a_s - a_s.pow(static_cast<unsigned long>(i + 1))
                              : FElement(OFElement(field, static_cast<long>(s), have)) * a_s *
                                    m0.pow(static_cast<unsigned long>(s - 1));
    if (divisor.is_zero()) throw PrecisionError("precision exhausted at degree " + std::to_string(i + 1));
    const FElement mu = -(lambda / divisor);
    xi.set(i + 1, mu);
    out.losses.push_back({i + 1, divisor.shift(), mu.abs_prec()});
  }

  out.integral = xi.is_integral();
  if (integral_expected && !out.integral) {
    throw InternalError("intertwiner is not integral although v(a_s) = v(a'_s) = v(pi)");
  }
  out.xi = xi;
  if (!verify_intertwine(f, f2, xi, M, N_target)) {
    throw InternalError("intertwiner fails f(xi) = xi(f2) mod (x^" + std::to_string(M) + ", pi^" +
                        std::to_string(N_target) + ")");
  }
  out.verified_M = M;
  out.verified_N = N_target;
  return out;
}

std::vector<IntertwineResult> solve_intertwiner_all(const FrobLift& f, const FrobLift& f2, int M, int N_target,
                                                    const std::optional<OFElement>& choice) {
  std::vector<IntertwineResult> out;
  for (const auto& mu0 : compute_mu0(f, f2, choice)) out.push_back(solve_intertwiner(f, f2, mu0, M, N_target));
  return out;
}

bool verify_intertwine(const FrobLift& f, const FrobLift& f2, const USeries& xi, int M, int N) {
  require_same_field(f.field(), f2.field());
  if (xi.cap() < M) throw PrecisionError("xi is known only modulo x^" + std::to_string(xi.cap()));
  const USeries x = xi.truncated(M);
  if (!x[0].is_exact_zero()) throw DomainError("xi(0) must be 0");
  const USeries lhs = f.apply(x);
  const USeries rhs = compose(x, f2.series(M));
  const USeries diff = lhs - rhs;
  if (diff.cap() < M) throw PrecisionError("composition known only modulo x^" + std::to_string(diff.cap()));
  return vanishes_mod(diff, M, N);
}

}  // namespace frobkit
