#include "frobkit/json_io.hpp"

#include <algorithm>
#include <climits>

#include "frobkit/errors.hpp"
#include "frobkit/presets.hpp"

namespace frobkit {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(at(path, key), "missing");
  return *it;
}

int int_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < INT_MIN || v > INT_MAX) throw ConfigError(path, "integer out of range");
  return static_cast<int>(v);
}

mpz_class integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ConfigError(path, "expected a decimal integer string");
    return z;
  }
  throw ConfigError(path, "expected an integer");
}

std::vector<int> digits_from_json(const Json& j, int p, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path, "expected a list of digits");
  std::vector<int> d;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const int v = int_from_json(j[i], at(path, i));
    if (v < 0 || v >= p) throw ConfigError(at(path, i), "digit outside [0, p)");
    d.push_back(v);
  }
  return d;
}

int int_or(const Json& j, const std::string& key, int fallback, const std::string& path) {
  auto it = j.find(key);
  return it == j.end() ? fallback : int_from_json(*it, at(path, key));
}

std::vector<OFElement> of_list(const Json& j, const FieldPtr& field, int prec, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a nonempty list");
  std::vector<OFElement> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(of_from_json(j[i], field, prec, at(path, i)));
  return out;
}

template <typename Fn>
auto wrap(const std::string& path, Fn fn) {
  try {
    return fn();
  } catch (const ConfigError&) {
    throw;
  } catch (const DomainError& e) {
    throw ConfigError(path, e.what());
  }
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ConfigError(path, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ConfigError(path, e.what());
  }
}

Json to_json(const FieldPtr& field) {
  Json g = Json::array();
  for (const auto& c : field->eisenstein()) {
    if (c.fits_slong_p()) {
      g.push_back(c.get_si());
    } else {
      g.push_back(c.get_str());
    }
  }
  return Json{{"p", field->p()}, {"eisenstein", g}};
}

FieldPtr field_from_json(const Json& j, const std::string& path) {
  const int p = int_from_json(member(j, "p", path), at(path, "p"));
  auto it = j.find("eisenstein");
  if (it == j.end()) return wrap(path, [&] { return Field::rational(p); });
  if (!it->is_array()) throw ConfigError(at(path, "eisenstein"), "expected a list");
  std::vector<mpz_class> g;
  for (std::size_t i = 0; i < it->size(); ++i) g.push_back(integer_from_json((*it)[i], at(at(path, "eisenstein"), i)));
  return wrap(path, [&] { return Field::make(p, g); });
}

Json to_json(const OFElement& a) { return Json{{"digits", a.digits()}, {"prec", a.prec()}}; }

OFElement of_from_json(const Json& j, const FieldPtr& field, int prec, const std::string& path) {
  if (j.is_object()) {
    const int n = int_or(j, "prec", prec, path);
    const auto d = digits_from_json(member(j, "digits", path), field->p(), at(path, "digits"));
    return wrap(path, [&] { return OFElement::from_digits(field, d, n); });
  }
  const mpz_class z = integer_from_json(j, path);
  return wrap(path, [&] { return OFElement(field, z, prec); });
}

Json to_json(const FElement& a) {
  if (a.is_zero()) {
    Json z{{"zero", true}};
    z["abs_prec"] = a.is_exact_zero() ? Json(nullptr) : Json(a.abs_prec());
    return z;
  }
  return Json{{"shift", a.shift()}, {"digits", a.unit().digits()}, {"prec", a.rel_prec()}};
}

FElement f_from_json(const Json& j, const FieldPtr& field, int prec, const std::string& path) {
  if (j.is_object()) {
    if (j.contains("zero")) {
      const Json& ap = member(j, "abs_prec", path);
      if (ap.is_null()) return FElement::exact_zero(field);
      return FElement::zero(field, int_from_json(ap, at(path, "abs_prec")));
    }
    const int shift = int_from_json(member(j, "shift", path), at(path, "shift"));
    const int n = int_or(j, "prec", prec, path);
    const auto d = digits_from_json(member(j, "digits", path), field->p(), at(path, "digits"));
    return wrap(path, [&] { return FElement::scaled(OFElement::from_digits(field, d, n), shift); });
  }
  if (j.is_string() && j.get<std::string>().find('/') != std::string::npos) {
    const Rational q = rational_from_json(j, path);
    return wrap(path, [&] {
      return FElement(OFElement(field, q.get_num(), prec)) / FElement(OFElement(field, q.get_den(), prec));
    });
  }
  return FElement(of_from_json(j, field, prec, path));
}

Json to_json(const USeries& x) {
  Json c = Json::array();
  for (const auto& a : x.coefficients()) c.push_back(to_json(a));
  return Json{{"coeffs", c}, {"cap", x.cap()}};
}

USeries series_from_json(const Json& j, const FieldPtr& field, int prec, int cap, const std::string& path) {
  const Json* coeffs = &j;
  std::string cpath = path;
  if (j.is_object()) {
    coeffs = &member(j, "coeffs", path);
    cpath = at(path, "coeffs");
    cap = int_or(j, "cap", cap, path);
  }
  if (!coeffs->is_array()) throw ConfigError(cpath, "expected a list of coefficients");
  if (cap < 0) throw ConfigError(path, "negative cap");
  std::vector<FElement> c;
  for (std::size_t i = 0; i < coeffs->size() && static_cast<int>(i) < cap; ++i) {
    const Json& e = (*coeffs)[i];
    // Integer zeros in a plain coefficient list are structural.
    if (e.is_number_integer() && e.get<long long>() == 0) {
      c.push_back(FElement::exact_zero(field));
    } else {
      c.push_back(f_from_json(e, field, prec, at(cpath, i)));
    }
  }
  return USeries::from_coefficients(field, std::move(c), cap);
}

Json to_json(const FrobLift& f) {
  Json c = Json::array();
  for (const auto& a : f.coefficients()) c.push_back(to_json(a));
  return Json{{"coeffs", c}};
}

FrobLift froblift_from_json(const Json& j, const FieldPtr& field, int prec, const std::string& path) {
  const Json& c = j.is_object() ? member(j, "coeffs", path) : j;
  const std::string cpath = j.is_object() ? at(path, "coeffs") : path;
  auto coeffs = of_list(c, field, prec, cpath);
  return wrap(path, [&] { return FrobLift::make(std::move(coeffs)); });
}

Json to_json(const EisensteinE& E) {
  Json c = Json::array();
  for (const auto& a : E.coefficients()) c.push_back(to_json(a));
  return Json{{"coeffs", c}};
}

EisensteinE eisenstein_from_json(const Json& j, const FieldPtr& field, int prec, const std::string& path) {
  const Json& c = j.is_object() ? member(j, "coeffs", path) : j;
  const std::string cpath = j.is_object() ? at(path, "coeffs") : path;
  auto coeffs = of_list(c, field, prec, cpath);
  return wrap(path, [&] { return EisensteinE::make(std::move(coeffs)); });
}

Json to_json(const SeriesMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

SeriesMatrix matrix_from_json(const Json& j, const FieldPtr& field, int prec, int cap, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a nonempty list of rows");
  std::vector<std::vector<USeries>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != j.size()) throw ConfigError(at(path, i), "expected a row of length " + std::to_string(j.size()));
    std::vector<USeries> r;
    for (std::size_t k = 0; k < row.size(); ++k) {
      r.push_back(series_from_json(row[k], field, prec, cap, at(at(path, i), k)));
    }
    rows.push_back(std::move(r));
  }
  return wrap(path, [&] { return SeriesMatrix::from_rows(std::move(rows)); });
}

Json to_json(const Gauge& g) {
  if (g.infinite) return "inf";
  return Json{{"value", g.value}, {"exact", g.exact}};
}

Json to_json(const PerfSeries& x) {
  Json terms = Json::array();
  const long p = x.p();
  for (const auto& t : x.terms()) {
    long num = t.num;
    int den_pow = x.budget().root_levels;
    while (den_pow > 0 && num % p == 0) {
      num /= p;
      --den_pow;
    }
    terms.push_back(Json{{"num", num}, {"den_pow", den_pow}, {"coeff", t.coeff}});
  }
  return Json{{"terms", terms}, {"truncated", x.truncated()}};
}

Json to_json(const WittVec& x) {
  Json c = Json::array();
  for (const auto& s : x.components()) c.push_back(to_json(s));
  return c;
}

Json to_json(const NewtonPolygon& poly) {
  Json v = Json::array();
  for (const auto& pt : poly.vertices) v.push_back(Json{{"x", pt.x}, {"y", to_json(pt.y)}});
  Json s = Json::array();
  for (const auto& q : poly.slopes) s.push_back(to_json(q));
  return Json{{"vertices", v}, {"slopes", s}};
}

Json to_json(const RamificationPolygon& poly) {
  Json pts = Json::array();
  for (const auto& pt : poly.points) pts.push_back(Json{{"i", pt.x}, {"v", to_json(pt.y)}});
  return Json{{"n", poly.n},
              {"points", pts},
              {"hull", to_json(poly.hull)},
              {"single_segment", poly.single_segment},
              {"tie", poly.tie},
              {"drop", to_json(poly.drop)},
              {"drop_matches", poly.drop_matches}};
}

Json to_json(const IntertwineResult& r) {
  Json losses = Json::array();
  for (const auto& l : r.losses) {
    losses.push_back(Json{{"degree", l.degree}, {"divisor_valuation", l.divisor_valuation}, {"abs_prec", l.abs_prec}});
  }
  return Json{{"mu0", to_json(r.mu0)},
              {"xi", to_json(r.xi)},
              {"integral", r.integral},
              {"verified_to", Json{{"M", r.verified_M}, {"N", r.verified_N}}},
              {"losses", losses}};
}

Json to_json(const XiResult& r) {
  Json g = Json::array();
  for (const auto& x : r.gauges) g.push_back(to_json(x));
  return Json{{"Y", to_json(r.Y)}, {"gauges", g}, {"residual", to_json(r.residual)}};
}

JobConfig job_from_json(const Json& j, int default_piadic) {
  if (!j.is_object()) throw ConfigError("/", "expected an object");
  JobConfig job;
  if (auto it = j.find("precision"); it != j.end()) {
    const std::string path = "/precision";
    if (!it->is_object()) throw ConfigError(path, "expected an object");
    job.precision.piadic = int_or(*it, "piadic", default_piadic, path);
    job.precision.u_order = int_or(*it, "u_order", job.precision.u_order, path);
    job.precision.witt_len = int_or(*it, "witt_len", job.precision.witt_len, path);
    job.precision.root_budget = int_or(*it, "root_budget", job.precision.root_budget, path);
    job.precision.exp_bound = int_or(*it, "exp_bound", job.precision.exp_bound, path);
  } else {
    job.precision.piadic = default_piadic;
  }
  if (job.precision.piadic < 1 || job.precision.piadic > Field::kMaxPrecision) {
    throw ConfigError("/precision/piadic", "out of range");
  }
  if (job.precision.u_order < 1) throw ConfigError("/precision/u_order", "must be positive");
  const int N = job.precision.piadic;

  if (auto it = j.find("field"); it != j.end()) {
    job.field = field_from_json(*it, "/field");
  } else if (auto ip = j.find("p"); ip != j.end()) {
    const int p = int_from_json(*ip, "/p");
    job.field = wrap("/p", [&] { return Field::rational(p); });
  } else {
    throw ConfigError("/field", "missing");
  }
  if (auto it = j.find("preset"); it != j.end()) {
    if (!it->is_string()) throw ConfigError("/preset", "expected a string");
    job.preset = it->get<std::string>();
    const Preset pr = wrap("/preset", [&] { return make_preset(*job.preset, job.field, N); });
    job.f = pr.f;
    job.E = pr.E;
  }
  if (auto it = j.find("f"); it != j.end()) job.f = froblift_from_json(*it, job.field, N, "/f");
  if (auto it = j.find("f2"); it != j.end()) job.f2 = froblift_from_json(*it, job.field, N, "/f2");
  if (auto it = j.find("E"); it != j.end()) job.E = eisenstein_from_json(*it, job.field, N, "/E");
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) throw ConfigError("/params", "expected an object");
    job.params = *it;
  }
  // Any other top-level key is a command parameter.
  static const std::vector<std::string> known{"precision", "field", "p", "preset", "f", "f2", "E", "params"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) job.params[key] = value;
  }
  return job;
}

Json job_to_json(const JobConfig& job) {
  Json j;
  j["field"] = to_json(job.field);
  if (job.preset) j["preset"] = *job.preset;
  if (job.f) j["f"] = to_json(*job.f);
  if (job.f2) j["f2"] = to_json(*job.f2);
  if (job.E) j["E"] = to_json(*job.E);
  j["precision"] = Json{{"piadic", job.precision.piadic},
                        {"u_order", job.precision.u_order},
                        {"witt_len", job.precision.witt_len},
                        {"root_budget", job.precision.root_budget},
                        {"exp_bound", job.precision.exp_bound}};
  j["params"] = job.params;
  return j;
}

}  // namespace frobkit
