#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "halysim/config_io.hpp"

using namespace halysim;

TEST_CASE("defaults") {
  for (const auto* text : {"", "   \n", "{}"}) {
    const SimConfig config = parse_config(text);
    CHECK(config.n == 1000);
    CHECK(config.dt == 0.01);
    CHECK(config.omega == 110.0);
    CHECK(config.x0 == 0.95);
    CHECK(config.hazard.alpha == -11.175);
    CHECK(config.hazard.beta == 0.1);
    CHECK(config.diffusion.scale == 0.05);
    CHECK(config.drift == DriftTable::default_table());
  }
}

TEST_CASE("key parsing") {
  SUBCASE("coarse grid accepted when omega divides") {
    const SimConfig config = parse_config(R"({"dt": 0.5, "omega": 110})");
    CHECK(config.dt == 0.5);
    CHECK(config.grid_steps() == 220);
  }
  SUBCASE("full document") {
    const SimConfig config = parse_config(R"({
      "n": 50, "dt": 0.02, "omega": 100, "x0": 0.9, "seed": 77,
      "alpha": -10.5, "beta": 0.09, "sigma_scale": 0.04,
      "drift_knots": [[0, -0.001], [60, -0.004], [100, -0.09]]
    })");
    CHECK(config.n == 50);
    CHECK(config.seed == 77);
    CHECK(config.hazard.alpha == -10.5);
    CHECK(config.hazard.beta == 0.09);
    CHECK(config.diffusion.scale == 0.04);
    REQUIRE(config.drift.knots().size() == 3);
    CHECK(config.drift.knots()[1].age == 60.0);
    CHECK(config.drift.knots()[1].value == -0.004);
  }
  SUBCASE("seed accepts the full unsigned range") {
    const SimConfig config = parse_config(R"({"seed": 18446744073709551615})");
    CHECK(config.seed == 18446744073709551615ULL);
  }
}

TEST_CASE("rejections name the offender") {
  SUBCASE("constraint violations") {
    CHECK_THROWS_WITH_AS(parse_config(R"({"x0": 1.5})"), "x0 must lie in (0, 1]", ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"n": 0})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"dt": -0.01})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"omega": 100.007})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"sigma_scale": -1})"), ConfigError);
  }
  SUBCASE("unknown keys") {
    try {
      parse_config(R"({"omga": 100})");
      FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
      CHECK(std::string(err.what()).find("omga") != std::string::npos);
    }
  }
  SUBCASE("type errors") {
    CHECK_THROWS_AS(parse_config(R"({"n": "many"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"n": 2.5})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"seed": -4})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"dt": "fast"})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"drift_knots": []})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"drift_knots": [[0, -0.1, 3]]})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"drift_knots": [[5, -0.1], [4, -0.2]]})"), ConfigError);
    CHECK_THROWS_AS(parse_config("[1, 2]"), ConfigError);
    CHECK_THROWS_AS(parse_config("{nonsense"), ConfigError);
  }
}

TEST_CASE("echo round-trips exactly") {
  SimConfig config;
  config.n = 123;
  config.dt = 0.02;
  config.omega = 90.0;
  config.x0 = 0.8437562919;
  config.seed = 0xDEADBEEFCAFE1234ULL;
  config.hazard = {-10.93731, 0.0971};
  config.diffusion = {0.061234567890123};
  config.drift = DriftTable{{{0.0, -0.00123456789012345}, {55.5, -0.00987654321}, {110.0, -0.2}}};

  const std::string echoed = config_to_json(config).dump();
  const SimConfig reparsed = parse_config(echoed);
  CHECK(reparsed == config);

  CHECK(parse_config(config_to_json(SimConfig{}).dump()) == SimConfig{});
}
