#include "frobkit/presets.hpp"

#include "frobkit/errors.hpp"

namespace frobkit {

namespace {

using Poly = std::vector<OFElement>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, OFElement::zero(a.front().field(), a.front().prec()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

Poly poly_pow(const Poly& a, int k) {
  Poly r{OFElement::one(a.front().field(), a.front().prec())};
  for (int i = 0; i < k; ++i) r = poly_mul(r, a);
  return r;
}

// Drops the constant term of a polynomial vanishing at 0.
Poly without_constant(const Poly& a) {
  if (!a.front().is_zero()) throw InternalError("Frobenius lift with nonzero constant term");
  return Poly(a.begin() + 1, a.end());
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"classical", "cyclotomic", "lubin-tate", "twisted"};
  return names;
}

Preset make_preset(const std::string& name, const FieldPtr& field, int prec) {
  const int p = field->p();
  const OFElement zero = OFElement::zero(field, prec);
  const OFElement one = OFElement::one(field, prec);
  const OFElement pi = OFElement::uniformizer(field, prec);
  const OFElement pp(field, static_cast<long>(p), prec);
  Preset out;
  out.name = name;
  if (name == "classical") {
    out.description = "f = u^p, E = u^2 + pi";
    Poly a(static_cast<std::size_t>(p), zero);
    a.back() = one;
    out.f = FrobLift::make(a);
    out.E = EisensteinE::make({pi, zero, one});
  } else if (name == "cyclotomic") {
    out.description = "f = (1 + u)^p - 1, E = f / u";
    Poly f = poly_pow({one, one}, p);
    f[0] = f[0] - one;
    const Poly a = without_constant(f);
    out.f = FrobLift::make(a);
    out.E = EisensteinE::make(a);
  } else if (name == "lubin-tate") {
    out.description = "f = u^p + pi u, E = u^(p-1) + pi";
    Poly a(static_cast<std::size_t>(p), zero);
    a.front() = pi;
    a.back() = one;
    out.f = FrobLift::make(a);
    out.E = EisensteinE::make(a);
  } else if (name == "twisted") {
    out.description = "f = (u - p)^(p-1) u, E = f - p";
    Poly f = poly_mul(poly_pow({-pp, one}, p - 1), {zero, one});
    out.f = FrobLift::make(without_constant(f));
    f[0] = f[0] - pp;
    out.E = EisensteinE::make(f);
  } else {
    throw DomainError("unknown preset '" + name + "'");
  }
  return out;
}

}  // namespace frobkit
