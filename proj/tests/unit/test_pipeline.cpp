#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "plh/errors.hpp"
#include "plh/pipeline.hpp"

using namespace plh;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig small(const std::string& map, const fs::path& out) {
  RunConfig cfg;
  cfg.map = map;
  cfg.eps_list = {0.4, 0.2};
  cfg.output_dir = out.string();
  cfg.sampling.vertex_pairs = 5000;
  cfg.sampling.interior_pairs = 5000;
  cfg.sampling.multiscale_pairs = 5000;
  return cfg;
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("config validation") {
    RunConfig cfg;
    cfg.eps_list = {};
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg.eps_list = {0.1, 0.2};
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg.eps_list = {0.2, 0.1};
    cfg.beta_list = {0};
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg.beta_list = {0.5};
    CHECK_NOTHROW(validate(cfg));
  }

  TEST_CASE("identity sweep: zero error, injective, deterministic files") {
    fs::path base = fs::temp_directory_path() / "plh_unit_pipeline";
    fs::remove_all(base);
    auto rows_a = run_pipeline(small("identity", base / "a"));
    auto rows_b = run_pipeline(small("identity", base / "b"));
    REQUIRE(rows_a.size() == 2);
    for (const auto& row : rows_a) {
      CHECK(row.report.sup_error <= 1e-12);
      CHECK(row.report.injective.passed);
      REQUIRE(row.holder.size() == 1);
      CHECK(row.holder[0].measured <= 1e-9);
    }
    for (const char* f : {"sweep.csv", "constants.json", "eps_0/mesh.json", "eps_1/mesh.json", "eps_0/run.json"}) {
      CAPTURE(f);
      REQUIRE(fs::exists(base / "a" / f));
      CHECK(slurp(base / "a" / f) == slurp(base / "b" / f));
    }
    CHECK(fs::exists(base / "a" / "eps_0" / "overlay.svg"));
    std::string csv = slurp(base / "a" / "sweep.csv");
    CHECK(csv.rfind("eps,sup_error,min_angle_sine,min_edge,max_edge", 0) == 0);
    fs::remove_all(base);
  }

  TEST_CASE("shear: measured Holder error stays below the theory column") {
    RunConfig cfg = small("shear", "");
    cfg.write_files = false;
    auto rows = run_pipeline(cfg);
    for (const auto& row : rows) {
      REQUIRE(row.holder.size() == 1);
      CHECK(row.holder[0].measured <= row.holder[0].theory);
    }
  }

  TEST_CASE("retries halve eps and record the substitution") {
    Domain d = builtin_domain("square");
    // identity declared 0.82-Holder: the loop gap condition fails at 3.2 and holds at 1.6
    SampledHomeo h = make_family({"identity", 0.82, 1, std::sqrt(2.0)});
    auto out = build_with_retries(d, h, 3.2, 3);
    CHECK(out.eps == 1.6);
    REQUIRE(out.substitutions.size() == 1);
    CHECK(out.substitutions[0].from == 3.2);
    CHECK(out.substitutions[0].to == 1.6);
    CHECK(out.substitutions[0].inequality == "loop-gap-ratio");
    CHECK(out.result.report.injective.passed);
    CHECK_THROWS_AS(build_with_retries(d, h, 3.2, 0), EpsilonTooLarge);
  }
}
