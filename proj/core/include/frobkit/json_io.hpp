#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "frobkit/errors.hpp"
#include "frobkit/intertwine.hpp"
#include "frobkit/kisin.hpp"
#include "frobkit/tower.hpp"
#include "frobkit/witt.hpp"

namespace frobkit {

using Json = nlohmann::ordered_json;

// Malformed JSON input; the message starts with the offending JSON pointer.
class ConfigError : public DomainError {
 public:
  ConfigError(const std::string& path, const std::string& what) : DomainError(path + ": " + what) {}
};

// Rationals are written as "a/b" strings.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path);

Json to_json(const FieldPtr& field);
FieldPtr field_from_json(const Json& j, const std::string& path);

// {"digits": [d_0, ...], "prec": N}. Integers and decimal strings are also
// accepted on input and read at `prec`.
Json to_json(const OFElement& a);
OFElement of_from_json(const Json& j, const FieldPtr& field, int prec, const std::string& path);

// {"shift": s, "digits": [...], "prec": relative precision}, or
// {"zero": true, "abs_prec": n} ("abs_prec": null for an exact zero).
// Input also takes integers and "a/b" strings.
Json to_json(const FElement& a);
FElement f_from_json(const Json& j, const FieldPtr& field, int prec, const std::string& path);

// {"coeffs": [...], "cap": M}; a bare list of coefficients is read as a
// polynomial with cap `cap`.
Json to_json(const USeries& x);
USeries series_from_json(const Json& j, const FieldPtr& field, int prec, int cap, const std::string& path);

// {"coeffs": [a_1, ..., a_p]}.
Json to_json(const FrobLift& f);
FrobLift froblift_from_json(const Json& j, const FieldPtr& field, int prec, const std::string& path);

// {"coeffs": [c_0, ..., c_e0]}.
Json to_json(const EisensteinE& E);
EisensteinE eisenstein_from_json(const Json& j, const FieldPtr& field, int prec, const std::string& path);

// Row-major list of series.
Json to_json(const SeriesMatrix& m);
SeriesMatrix matrix_from_json(const Json& j, const FieldPtr& field, int prec, int cap, const std::string& path);

Json to_json(const Gauge& g);
// List of {"num", "den_pow", "coeff"} with exponent num / p^den_pow.
Json to_json(const PerfSeries& x);
Json to_json(const WittVec& x);
Json to_json(const NewtonPolygon& poly);
Json to_json(const RamificationPolygon& poly);
Json to_json(const IntertwineResult& r);
Json to_json(const XiResult& r);

struct PrecisionConfig {
  int piadic = kDefaultPrecision;
  int u_order = kDefaultOrderCap;
  int witt_len = 4;
  int root_budget = 6;
  int exp_bound = 32;
};

// A batch job: field, lifts, Eisenstein polynomial, precision and the
// command-specific parameters in `params`.
struct JobConfig {
  FieldPtr field;
  std::optional<std::string> preset;
  std::optional<FrobLift> f;
  std::optional<FrobLift> f2;
  std::optional<EisensteinE> E;
  PrecisionConfig precision;
  Json params = Json::object();
};

// `default_piadic` applies when the config has no precision.piadic. Unknown
// top-level keys are merged into `params`.
JobConfig job_from_json(const Json& j, int default_piadic = kDefaultPrecision);
Json job_to_json(const JobConfig& job);

}  // namespace frobkit
