#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "frobkit/json_io.hpp"
#include "frobkit/presets.hpp"
#include "generators.hpp"

#ifdef FROBKIT_HAVE_CLI
#include "cli.hpp"
#endif

using namespace frobkit;
using frobkit::testing::Rng;

TEST_SUITE("json") {

TEST_CASE("scalar round trips") {
  Rng rng(1);
  auto F = Field::make(3, {mpz_class(-3), mpz_class(0), mpz_class(1)});
  for (int t = 0; t < 20; ++t) {
    const OFElement a = frobkit::testing::random_of(rng, F, 10);
    CHECK(of_from_json(to_json(a), F, 5, "/a") == a);
    const FElement b = FElement::scaled(a, rng.uniform(-3, 3));
    CHECK(f_from_json(to_json(b), F, 5, "/b") == b);
  }
  CHECK(f_from_json(to_json(FElement::exact_zero(F)), F, 5, "/z").is_exact_zero());
  const Rational q = make_rational(-7, 12);
  CHECK(to_json(q) == Json("-7/12"));
  CHECK(rational_from_json(Json("-7/12"), "/q") == q);
  CHECK(f_from_json(Json("1/3"), F, 8, "/q").shift() == -2);
}

TEST_CASE("series, lifts and fields round trip") {
  Rng rng(2);
  auto F = Field::rational(5);
  const USeries x = frobkit::testing::random_series(rng, F, 7, 9, 12);
  CHECK(series_from_json(to_json(x), F, 3, 40, "/x") == x);
  const Preset pr = make_preset("lubin-tate", F, 9);
  CHECK(froblift_from_json(to_json(pr.f), F, 3, "/f") == pr.f);
  CHECK(eisenstein_from_json(to_json(pr.E), F, 3, "/E") == pr.E);
  CHECK(field_from_json(to_json(F), "/field")->same_as(*F));
}

TEST_CASE("malformed input names the offending path") {
  auto F = Field::rational(3);
  try {
    series_from_json(Json::parse(R"({"coeffs": [1, "x"]})"), F, 5, 10, "/A/0/0");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).rfind("/A/0/0/coeffs/1", 0) == 0);
  }
  CHECK_THROWS_AS(job_from_json(Json::parse(R"({"preset": "cyclotomic"})")), ConfigError);
  CHECK_THROWS_AS(job_from_json(Json::parse(R"({"p": 4})")), ConfigError);
  CHECK_THROWS_AS(job_from_json(Json::parse(R"({"p": 3, "preset": "nope"})")), ConfigError);
  CHECK_THROWS_AS(job_from_json(Json::parse(R"({"p": 3, "f": {"coeffs": [1, 0, 1]}})")), ConfigError);
}

TEST_CASE("property: every preset round-trips through its job config") {
  for (int p : {2, 3, 5, 7}) {
    auto F = Field::rational(p);
    for (const auto& name : preset_names()) {
      JobConfig job;
      job.field = F;
      job.preset = name;
      const Preset pr = make_preset(name, F, 12);
      job.f = pr.f;
      job.E = pr.E;
      const Json emitted = job_to_json(job);
      const JobConfig back = job_from_json(emitted);
      CHECK(back.f == job.f);
      CHECK(back.E == job.E);
      CHECK(back.preset == job.preset);
      CHECK(job_to_json(back).dump() == emitted.dump());
    }
  }
}

}

#ifdef FROBKIT_HAVE_CLI

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("frobkit_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("tower report for the cyclotomic preset") {
  const Run r = run({"tower", "--preset", "cyclotomic", "--p", "3"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["c"] == "2/3");
  CHECK(j["imin"] == 1);
  CHECK(j["levels"][0]["i_n"] == "2");
  CHECK(j["single_segment"] == true);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("hypothesis for the twisted preset") {
  const Run r = run({"kisin", "hypothesis", "--preset", "twisted", "--p", "3", "--N", "4"});
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out) == Json::parse(R"({"found": true, "n": 1, "k": 2})"));
}

TEST_CASE("preset listing") {
  const Run r = run({"presets"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  std::vector<std::string> names;
  for (const auto& e : j["presets"]) names.push_back(e["name"].get<std::string>());
  CHECK(names == std::vector<std::string>{"classical", "cyclotomic", "lubin-tate", "twisted"});
}

TEST_CASE("reports are byte-for-byte deterministic") {
  const std::vector<std::string> args{"kisin", "counterexample", "--preset", "twisted", "--p", "3", "--u-order", "20"};
  const Run a = run(args);
  const Run b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("emitted presets re-parse to the same job") {
  for (const auto& name : preset_names()) {
    const Run r = run({"presets", "--emit", name, "--p", "5"});
    REQUIRE(r.code == 0);
    const auto path = temp_file("preset.json", r.out);
    const Run again = run({"--config", path.string(), "presets", "--emit", name});
    CHECK(again.out == r.out);
    std::filesystem::remove(path);
  }
}

TEST_CASE("intertwine lifts integer inputs to the required precision") {
  const auto path = temp_file("inter.json", R"({"p": 3, "preset": "cyclotomic", "f2": {"coeffs": [3, 0, 1]}, "M": 25, "N": 10})");
  const Run r = run({"--config", path.string(), "intertwine"});
  std::filesystem::remove(path);
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["required_precision"] == 35);
  CHECK(j["results"][0]["integral"] == true);
  CHECK(j["results"][0]["verified_to"] == Json::parse(R"({"M": 25, "N": 10})"));
}

TEST_CASE("exit codes") {
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"tower"}).code == 1);

  const auto bad = temp_file("bad.json", R"({"p": 3, "E": {"coeffs": [1, 0, "?"]}})");
  const Run r = run({"--config", bad.string(), "tower"});
  CHECK(r.code == 1);
  CHECK(r.err.find("/E/coeffs/2") != std::string::npos);
  std::filesystem::remove(bad);

  // An identically zero series has no determinable E-order.
  const auto zero = temp_file("zero.json", R"({"p": 3, "preset": "classical", "a": [{"zero": true, "abs_prec": 4}]})");
  CHECK(run({"--config", zero.string(), "kisin", "minheight"}).code == 2);
  std::filesystem::remove(zero);
}

TEST_CASE("--out and FROBKIT_PRECISION") {
  const auto out = std::filesystem::temp_directory_path() / "frobkit_test_out.json";
  ::setenv("FROBKIT_PRECISION", "17", 1);
  const Run r = run({"presets", "--emit", "classical", "--p", "3", "--out", out.string()});
  ::unsetenv("FROBKIT_PRECISION");
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  const Json j = Json::parse(in);
  CHECK(j["precision"]["piadic"] == 17);
  std::filesystem::remove(out);

  ::setenv("FROBKIT_PRECISION", "zero", 1);
  CHECK(run({"presets", "--emit", "classical", "--p", "3"}).code == 1);
  ::unsetenv("FROBKIT_PRECISION");
}

TEST_CASE("remaining subcommands run") {
  CHECK(run({"witt-selftest", "--p", "3", "--max-length", "2", "--samples", "5"}).code == 0);
  CHECK(run({"fixedpoint", "--preset", "cyclotomic", "--p", "3", "--length", "2"}).code == 0);
  const auto path = temp_file("xi.json", R"({"p": 3, "f": {"coeffs": [9, 0, 1]}, "E": {"coeffs": [3, 0, 1]},
    "A": [[{"coeffs": [3, 0, 1], "cap": 20}]], "r": 1, "precision": {"piadic": 20, "u_order": 20}})");
  for (const char* sub : {"height", "xi", "fil1"}) {
    const Run r = run({"--config", path.string(), "kisin", sub});
    CHECK_MESSAGE(r.code == 0, sub << ": " << r.err);
  }
  std::filesystem::remove(path);
}

}

#endif
