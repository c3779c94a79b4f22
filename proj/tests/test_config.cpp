#include <doctest.h>

#include <fstream>
#include <sstream>

#include "mimem/config.hpp"
#include "mimem/runner.hpp"
#include "mimem/snapshot.hpp"

using namespace mimem;

TEST_CASE("presets resolve to the published demo constants") {
  const RunConfig c1 = preset("sullivan-1d");
  CHECK(c1.kind == RunKind::Mimetic1D);
  REQUIRE(c1.scenario1d.has_value());
  CHECK(c1.scenario1d->m == 200);
  CHECK(c1.scenario1d->slab->start == 99);

  const RunConfig c2 = preset("sullivan-2d-upml");
  CHECK(c2.kind == RunKind::Mimetic2D);
  REQUIRE(c2.scenario2d.has_value());
  CHECK(c2.scenario2d->mx == 100);
  CHECK(c2.scenario2d->pml->sigma_max == 100.0);

  CHECK_THROWS_AS(preset("no-such-preset"), ConfigError);
}

TEST_CASE("parse rejects unknown keys") {
  const std::string doc = R"({
    "kind": "mimetic1d", "m": 200, "dt": 1.6666666666666667e-11,
    "steps": 10, "typo_key": 1,
    "source": {"index": 4, "frequency": 7e8, "amplitude": 1.0}
  })";
  CHECK_THROWS_WITH_AS(parse_config(doc),
                       doctest::Contains("unknown key 'typo_key'"),
                       ConfigError);
}

TEST_CASE("parse rejects invalid values") {
  const std::string negative_m = R"({
    "kind": "mimetic1d", "m": -5, "dt": 1e-11, "steps": 10,
    "source": {"index": 4, "frequency": 7e8, "amplitude": 1.0}
  })";
  CHECK_THROWS_AS(parse_config(negative_m), ConfigError);

  CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"kind": "warp-drive"})"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"m": 5})"), ConfigError);
}

TEST_CASE("parse/render round trip") {
  for (const char* name :
       {"sullivan-1d", "sullivan-1d-yee", "sullivan-2d-upml",
        "sullivan-2d-pml-oracle"}) {
    const RunConfig cfg = preset(name);
    CHECK(parse_config(render(cfg)) == cfg);
  }

  RunConfig ops;
  ops.kind = RunKind::OpsDump;
  ops.ops = OpsDumpSpec{2, 6, 0.5, 4, 0.25, OpsDumpTarget::Laplacian};
  CHECK(parse_config(render(ops)) == ops);

  RunConfig vac = preset("sullivan-1d");
  vac.scenario1d->slab.reset();
  CHECK(parse_config(render(vac)) == vac);
}

TEST_CASE("snapshot record format") {
  SnapshotRecord r;
  r.step = 70;
  r.field = "ex";
  r.layout = "1d-scalar";
  r.dims = {3};
  r.values = {0.1, -2.0, 1.0};
  std::ostringstream os;
  write_snapshot(os, {r});
  CHECK(os.str() ==
        "# ex 1d-scalar 3 70\n"
        "0.10000000000000001\n"
        "-2\n"
        "1\n");

  r.dims = {2};
  CHECK_THROWS_AS(write_snapshot(os, {r}), std::invalid_argument);
}

TEST_CASE("runner emits the documented file set for the 1d preset") {
  RunConfig cfg = preset("sullivan-1d");
  cfg.scenario1d->steps = 100;  // keep the unit test quick
  const auto dir = std::filesystem::temp_directory_path() / "mimem_cfg_test";
  std::filesystem::remove_all(dir);
  const RunResult result = run(cfg, dir);
  CHECK(result.snapshot_files.size() == 3);  // steps 0, 50, 100
  for (const auto& p : result.snapshot_files) {
    CHECK(std::filesystem::exists(p));
  }
  CHECK(std::filesystem::exists(result.manifest_file));

  std::ifstream is(result.manifest_file);
  std::stringstream ss;
  ss << is.rdbuf();
  CHECK(ss.str().find("courant") != std::string::npos);
  CHECK(ss.str().find("identity_residuals") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("enlarged oracle scenario lines up with the base grid") {
  const Scenario2D base = build_scenario_sullivan_2d_upml();
  const Scenario2D big = enlarged_oracle_scenario(base, 3);
  CHECK(big.mx == 300);
  CHECK(big.pulse.cx == doctest::Approx(1.5));
  // Identical fields in the shared region compare to zero.
  const StaggeredGrid2D gb = base.grid();
  const StaggeredGrid2D go = big.grid();
  const auto eb = initial_pulse(gb, base.pulse);
  const auto eo = initial_pulse(go, big.pulse);
  // Coordinate rounding shifts the sampled Gaussian by ~1 ulp of position.
  CHECK(interior_max_abs_diff(base, eb, 3, eo) <= 1e-12);
}
