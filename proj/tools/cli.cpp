#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "frobkit/errors.hpp"
#include "frobkit/intertwine.hpp"
#include "frobkit/json_io.hpp"
#include "frobkit/kisin.hpp"
#include "frobkit/presets.hpp"
#include "frobkit/tower.hpp"
#include "frobkit/witt.hpp"

namespace frobkit::cli {

namespace {

struct Report {
  Json json;
  std::string summary;
};

int env_precision() {
  const char* s = std::getenv("FROBKIT_PRECISION");
  if (s == nullptr || *s == '\0') return kDefaultPrecision;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1 || v > Field::kMaxPrecision) {
    throw ConfigError("$FROBKIT_PRECISION", "expected an integer in [1, " + std::to_string(Field::kMaxPrecision) + "]");
  }
  return static_cast<int>(v);
}

int param_int(const JobConfig& job, const std::string& key, int fallback) {
  auto it = job.params.find(key);
  if (it == job.params.end()) return fallback;
  if (!it->is_number_integer()) throw ConfigError("/" + key, "expected an integer");
  return it->get<int>();
}

std::optional<int> param_opt(const JobConfig& job, const std::string& key) {
  if (!job.params.contains(key)) return std::nullopt;
  return param_int(job, key, 0);
}

const Json& param(const JobConfig& job, const std::string& key) {
  auto it = job.params.find(key);
  if (it == job.params.end()) throw ConfigError("/" + key, "missing");
  return *it;
}

const FrobLift& need_f(const JobConfig& job) {
  if (!job.f) throw ConfigError("/f", "missing (give f or a preset)");
  return *job.f;
}

const EisensteinE& need_E(const JobConfig& job) {
  if (!job.E) throw ConfigError("/E", "missing (give E or a preset)");
  return *job.E;
}

PerfBudget budget(const JobConfig& job) {
  return PerfBudget{job.precision.root_budget, job.precision.exp_bound};
}

SeriesMatrix matrix_param(const JobConfig& job) {
  return matrix_from_json(param(job, "A"), job.field, job.precision.piadic, job.precision.u_order, "/A");
}

Report cmd_tower(const JobConfig& job) {
  const FrobLift& f = need_f(job);
  const auto e0 = param_opt(job, "e0");
  if (!e0 && !job.E) throw ConfigError("/e0", "missing (give e0, E or a preset)");
  const TowerSpec t = make_tower(f, e0 ? *e0 : job.E->degree());
  const int levels = param_int(job, "levels", 6);
  const int polygon_levels = param_int(job, "polygon_levels", 4);
  Report r;
  r.json["p"] = t.p();
  r.json["e0"] = t.e0;
  r.json["e"] = t.e;
  r.json["imin"] = imin(t);
  Json lv = Json::array();
  for (int n = 1; n <= levels; ++n) lv.push_back(Json{{"n", n}, {"i_n", to_json(elementary_level(t, n))}});
  r.json["levels"] = lv;
  const Rational c = apf_constant(t);
  r.json["c"] = to_json(c);
  Json polys = Json::array();
  bool single = true;
  bool drops = true;
  for (int n = 1; n <= polygon_levels; ++n) {
    const RamificationPolygon poly = ramification_polygon(t, n);
    single = single && poly.single_segment;
    drops = drops && poly.drop_matches;
    polys.push_back(to_json(poly));
  }
  r.json["polygon"] = Json{{"levels", polys}};
  r.json["single_segment"] = single;
  r.json["drop_matches"] = drops;
  r.summary = "tower: imin=" + std::to_string(imin(t)) + " c=" + to_string(c) +
              " single_segment=" + (single ? "true" : "false");
  return r;
}

// `load(prec)` re-reads the job with integer inputs at precision prec.
Report cmd_intertwine(const std::function<JobConfig(int)>& load, int base_prec) {
  JobConfig job = load(base_prec);
  if (!job.f2) throw ConfigError("/f2", "missing");
  const int M = param_int(job, "M", 25);
  const int N = param_int(job, "N", 10);
  const Compatibility c = check_compatible(need_f(job), *job.f2);
  Report r;
  r.json["compatible"] = Json{{"s", c.s}, {"s2", c.s2}, {"ok", c.ok}};
  if (!c.ok) throw DomainError("incompatible Frobenius lifts: lowest terms differ");
  const int need = required_precision(*job.f, *job.f2, M, N);
  r.json["required_precision"] = need;
  const int lift_prec = required_lift_precision(*job.f, *job.f2, M, N);
  if (job.precision.piadic < lift_prec) job = load(lift_prec);
  std::optional<OFElement> choice;
  if (job.params.contains("mu0")) {
    choice = of_from_json(job.params["mu0"], job.field, need, "/mu0");
  }
  const auto results = solve_intertwiner_all(*job.f, *job.f2, M, N, choice);
  Json rs = Json::array();
  for (const auto& x : results) rs.push_back(to_json(x));
  r.json["results"] = rs;
  r.summary = "intertwine: s=" + std::to_string(c.s) + " solutions=" + std::to_string(results.size()) +
              " verified to (x^" + std::to_string(M) + ", pi^" + std::to_string(N) + ")";
  return r;
}

Report cmd_witt_selftest(const JobConfig& job) {
  const int max_len = param_int(job, "max_length", 4);
  const int samples = param_int(job, "samples", 100);
  const int seed = param_int(job, "seed", 1);
  Report r;
  r.json["field"] = to_json(job.field);
  Json lens = Json::array();
  bool ok = true;
  for (int n = 1; n <= max_len; ++n) {
    const WittSelfTest t = witt_selftest(job.field, n, samples, static_cast<std::uint64_t>(seed) + static_cast<std::uint64_t>(n));
    ok = ok && t.ok();
    lens.push_back(Json{{"length", n},
                        {"ok", t.ok()},
                        {"symbolic_failure", t.symbolic_failure},
                        {"sum_terms", t.sum_terms},
                        {"prod_terms", t.prod_terms},
                        {"samples", t.samples},
                        {"sample_failures", t.sample_failures}});
  }
  r.json["lengths"] = lens;
  r.json["ok"] = ok;
  r.summary = std::string("witt-selftest: ") + (ok ? "pass" : "FAIL") + " up to length " + std::to_string(max_len);
  return r;
}

Report cmd_fixedpoint(const JobConfig& job) {
  const FrobLift& f = need_f(job);
  const int n = job.precision.witt_len;
  const PerfBudget b = budget(job);
  const FixedPointResult fp = f_fixed_point(f, n, b);
  const WittVec& u = fp.u;
  const bool frob_ok = witt_frob(u) == witt_apply(f, u);
  const bool teich_ok = u[0] == PerfSeries::monomial(f.p(), b, Rational(1));
  Report r;
  r.json["length"] = n;
  r.json["iterations"] = fp.iterations;
  r.json["u"] = to_json(u);
  r.json["frobenius_identity"] = frob_ok;
  r.json["teichmuller_mod_pi"] = teich_ok;
  if (job.E) {
    const EReduction er = check_E_reduction(*job.E, u);
    r.json["E_reduction"] = Json{{"ok", er.ok}, {"v_R", er.v_R ? to_json(*er.v_R) : Json(nullptr)}, {"v_pi", to_json(er.v_pi)}};
  }
  r.summary = "fixedpoint: " + std::to_string(fp.iterations) + " iterations, phi(u) = f(u) " +
              (frob_ok ? "holds" : "FAILS");
  return r;
}

Report cmd_kisin(const std::string& sub, const JobConfig& job) {
  Report r;
  const int N = job.precision.piadic;
  const int M = job.precision.u_order;
  if (sub == "height") {
    const KisinModule m = make_kisin_module(matrix_param(job), need_E(job), param_int(job, "r", 1));
    const HeightCheck h = check_height(m);
    r.json = Json{{"ok", h.ok}, {"det_order", h.det_order}, {"reason", h.reason}};
    r.summary = std::string("kisin height: ") + (h.ok ? "ok" : "fails: " + h.reason);
  } else if (sub == "minheight") {
    const USeries a = series_from_json(param(job, "a"), job.field, N, M, "/a");
    const MinimalHeight h = minimal_height_rank1(a, need_E(job));
    r.json = Json{{"m", h.m}, {"unit_cofactor", to_json(h.unit_cofactor)}};
    r.summary = "kisin minheight: m=" + std::to_string(h.m);
  } else if (sub == "hypothesis") {
    const auto hit = hypothesis_check(need_f(job), need_E(job), param_int(job, "N", 6));
    r.json = Json{{"found", hit.has_value()}};
    if (hit) {
      r.json["n"] = hit->n;
      r.json["k"] = hit->k;
    }
    r.summary = hit ? "kisin hypothesis: phi^" + std::to_string(hit->n) + "(f/u) = E^" + std::to_string(hit->k)
                    : std::string("kisin hypothesis: no power of E found");
  } else if (sub == "counterexample") {
    auto n = param_opt(job, "n");
    auto l = param_opt(job, "l");
    if (!n || !l) {
      const auto hit = hypothesis_check(need_f(job), need_E(job), param_int(job, "N", 6));
      if (!hit) throw DomainError("no (n, l) with phi^n(f/u) = E^l; give n and l explicitly");
      n = hit->n;
      l = hit->k;
    }
    const Counterexample c = counterexample_module(need_f(job), need_E(job), *n, *l, M, N);
    r.json = Json{{"n", c.n},
                  {"l", c.l},
                  {"A", to_json(c.A)},
                  {"identity_verified", true},
                  {"ambient_height_ok", verify_height(c.ambient)},
                  {"sub_height_ok", verify_height(c.sub)}};
    r.summary = "kisin counterexample: A E^" + std::to_string(c.l) + " = phi(A) holds mod (u^" + std::to_string(M) +
                ", pi^" + std::to_string(N) + ")";
  } else if (sub == "xi") {
    const KisinModule m = make_kisin_module(matrix_param(job), need_E(job), param_int(job, "r", 1));
    const XiResult x = xi_iterate(m, need_f(job), param_int(job, "max_n", 6));
    r.json = to_json(x);
    std::ostringstream os;
    os << "kisin xi: gauges";
    for (const auto& g : x.gauges) os << " " << g.str();
    r.summary = os.str();
  } else if (sub == "fil1") {
    const KisinModule m = make_kisin_module(matrix_param(job), need_E(job), 1);
    const int s = fil1_rank(m);
    r.json = Json{{"rank", s}};
    r.summary = "kisin fil1: rank " + std::to_string(s);
  }
  return r;
}

Report cmd_presets(const JobConfig* job, const std::string& emit, int p) {
  Report r;
  if (!emit.empty()) {
    JobConfig j = job ? *job : JobConfig{};
    if (!job) {
      j.field = Field::rational(p);
      j.precision.piadic = env_precision();
    }
    const Preset pr = make_preset(emit, j.field, j.precision.piadic);
    j.preset = emit;
    j.f = pr.f;
    j.E = pr.E;
    r.json = job_to_json(j);
    r.summary = "presets: emitted " + emit;
    return r;
  }
  const FieldPtr field = job ? job->field : Field::rational(p);
  Json list = Json::array();
  for (const auto& name : preset_names()) {
    Json entry{{"name", name}};
    try {
      entry["description"] = make_preset(name, field, kDefaultPrecision).description;
    } catch (const DomainError& e) {
      entry["description"] = std::string("unavailable over this field: ") + e.what();
    }
    list.push_back(entry);
  }
  r.json = Json{{"presets", list}};
  r.summary = "presets: " + std::to_string(preset_names().size()) + " available";
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"frobkit: Frobenius lifts, Witt vectors and Kisin modules at tracked precision"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path, out_path, preset;
  std::optional<int> p, prec, u_order;
  app.add_option("--config", config_path, "JSON job configuration")->check(CLI::ExistingFile);
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");
  app.add_option("--preset", preset, "named Frobenius lift and Eisenstein polynomial");
  app.add_option("--p", p, "residue characteristic (F = Q_p)");
  app.add_option("--prec", prec, "p-adic precision in uniformizer digits");
  app.add_option("--u-order", u_order, "u-adic order cap");

  Json flags = Json::object();
  auto int_flag = [&](CLI::App* sub, const std::string& name, const std::string& key, const std::string& help) {
    sub->add_option_function<int>(name, [&flags, key](const int& v) { flags[key] = v; }, help);
  };

  auto* tower = app.add_subcommand("tower", "ramification data of the f-iterate tower");
  int_flag(tower, "--e0", "e0", "degree of E");
  int_flag(tower, "--levels", "levels", "number of elementary levels to list");
  int_flag(tower, "--polygon-levels", "polygon_levels", "levels at which to build the ramification polygon");

  auto* inter = app.add_subcommand("intertwine", "solve f(xi) = xi(f2)");
  std::string f2_preset;
  inter->add_option("--f2-preset", f2_preset, "take f2 from a preset");
  int_flag(inter, "--M", "M", "x-adic order");
  int_flag(inter, "--N", "N", "target uniformizer precision");
  int_flag(inter, "--mu0", "mu0", "leading coefficient (s = 1) or residue of the root (s > 1)");

  auto* witt = app.add_subcommand("witt-selftest", "check the Witt sum and product polynomials");
  int_flag(witt, "--max-length", "max_length", "largest Witt length");
  int_flag(witt, "--samples", "samples", "random evaluations per length");
  int_flag(witt, "--seed", "seed", "random seed");

  auto* fixed = app.add_subcommand("fixedpoint", "embed u into W(R) as the fixed point of f o phi^-1");
  std::optional<int> witt_len;
  fixed->add_option("--length", witt_len, "Witt length");

  auto* kisin = app.add_subcommand("kisin", "Kisin module computations");
  kisin->require_subcommand(1);
  std::string kisin_sub;
  for (const char* name : {"height", "minheight", "hypothesis", "counterexample", "xi", "fil1"}) {
    auto* s = kisin->add_subcommand(name);
    s->callback([&kisin_sub, name] { kisin_sub = name; });
    if (std::string(name) == "hypothesis" || std::string(name) == "counterexample") {
      int_flag(s, "--N", "N", "largest n to try");
    }
    if (std::string(name) == "height" || std::string(name) == "xi") int_flag(s, "--r", "r", "declared height");
    if (std::string(name) == "counterexample") {
      int_flag(s, "--n", "n", "Frobenius power");
      int_flag(s, "--l", "l", "power of E");
    }
    if (std::string(name) == "xi") int_flag(s, "--max-n", "max_n", "number of iterations");
  }

  auto* presets = app.add_subcommand("presets", "list presets or emit a preset job config");
  std::string emit;
  presets->add_option("--emit", emit, "print the job configuration of this preset");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  std::ostringstream report;
  try {
    try {
      app.parse(argv);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }

    const int default_prec = env_precision();
    Json raw = Json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      try {
        raw = Json::parse(in);
      } catch (const Json::parse_error& e) {
        throw ConfigError(config_path, e.what());
      }
    }
    if (p) {
      raw.erase("field");
      raw["p"] = *p;
    }
    if (!preset.empty()) raw["preset"] = preset;
    if (prec) raw["precision"]["piadic"] = *prec;
    if (u_order) raw["precision"]["u_order"] = *u_order;
    if (witt_len) raw["precision"]["witt_len"] = *witt_len;
    for (const auto& [k, v] : flags.items()) raw[k] = v;

    Report rep;
    if (presets->parsed() && !raw.contains("field") && !raw.contains("p")) {
      rep = cmd_presets(nullptr, emit, 3);
    } else {
      if (!raw.contains("field") && !raw.contains("p")) throw ConfigError("/field", "missing (give --p or a config)");
      auto load = [&](int piadic) {
        Json r2 = raw;
        r2["precision"]["piadic"] = piadic;
        JobConfig j = job_from_json(r2, default_prec);
        if (!f2_preset.empty()) j.f2 = make_preset(f2_preset, j.field, piadic).f;
        return j;
      };
      const JobConfig job = job_from_json(raw, default_prec);
      if (tower->parsed()) rep = cmd_tower(job);
      if (inter->parsed()) rep = cmd_intertwine(load, job.precision.piadic);
      if (witt->parsed()) rep = cmd_witt_selftest(job);
      if (fixed->parsed()) rep = cmd_fixedpoint(job);
      if (kisin->parsed()) rep = cmd_kisin(kisin_sub, job);
      if (presets->parsed()) rep = cmd_presets(&job, emit, 0);
    }
    report << rep.json.dump(2) << "\n";
    if (out_path.empty()) {
      out << report.str();
    } else {
      std::ofstream f(out_path);
      if (!f) throw ConfigError(out_path, "cannot open for writing");
      f << report.str();
    }
    err << rep.summary << "\n";
    return 0;
  } catch (const PrecisionError& e) {
    err << "precision exhausted: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace frobkit::cli
