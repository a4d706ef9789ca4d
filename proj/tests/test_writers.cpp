#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "halysim/config_io.hpp"
#include "halysim/population.hpp"
#include "halysim/version.hpp"
#include "halysim/writers.hpp"

using namespace halysim;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

double parse_double(const std::string& text) {
  double value = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), value);
  return value;
}

PopulationResult small_run(std::int64_t n, std::uint64_t seed = 42) {
  SimConfig config;
  config.n = n;
  config.seed = seed;
  config.omega = 50.0;
  return simulate_population(config);
}

}  // namespace

TEST_CASE("summary document") {
  SimConfig config;
  config.n = 3;
  config.omega = 50.0;
  const auto result = simulate_population(config);
  const RunManifest manifest{config, std::string(kVersionTag), 0.25};
  const auto doc = nlohmann::json::parse(summary_document(result, manifest));

  for (const auto* key : {"median_le", "le_q25", "le_q75", "median_x_at_death", "xq25", "xq75",
                          "median_haly", "haly_q25", "haly_q75"})
    CHECK(doc.contains(key));
  CHECK(doc["median_le"].get<double>() == result.summary.life_expectancy.median);
  CHECK(doc["haly_q75"].get<double>() == result.summary.haly.q75);
  CHECK(doc["version"].get<std::string>() == kVersionTag);
  CHECK(doc["runtime_seconds"].get<double>() == 0.25);

  SUBCASE("config echo reparses to the original") {
    CHECK(parse_config(doc["config"].dump()) == config);
  }
  SUBCASE("singleton run collapses every triple") {
    const auto single = small_run(1);
    const auto single_doc =
        nlohmann::json::parse(summary_document(single, {SimConfig{}, "x", 0.0}));
    CHECK(single_doc["median_le"] == single_doc["le_q25"]);
    CHECK(single_doc["median_le"] == single_doc["le_q75"]);
    CHECK(single_doc["median_haly"] == single_doc["haly_q25"]);
  }
  SUBCASE("byte-identical across runs modulo the runtime field") {
    const auto again = simulate_population(config);
    auto doc_a = nlohmann::json::parse(summary_document(result, {config, "v", 1.0}));
    auto doc_b = nlohmann::json::parse(summary_document(again, {config, "v", 2.0}));
    doc_a.erase("runtime_seconds");
    doc_b.erase("runtime_seconds");
    CHECK(doc_a.dump() == doc_b.dump());
  }
}

TEST_CASE("curves table") {
  SimConfig config;
  config.n = 20;
  config.omega = 50.0;
  const auto result = simulate_population(config);
  const auto lines = split(curves_table(result), '\n');

  REQUIRE(lines.size() == config.grid_steps() + 2);  // header + one row per grid age
  CHECK(lines[0] == "age,q25,q50,q75");

  const auto first = split(lines[1], ',');
  CHECK(parse_double(first[0]) == 0.0);
  CHECK(parse_double(first[2]) == config.x0);  // nobody dies at age zero

  const auto last = split(lines.back(), ',');
  CHECK(parse_double(last[0]) == doctest::Approx(config.omega).epsilon(1e-9));

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    REQUIRE(fields.size() == 4);
    const double q25 = parse_double(fields[1]);
    const double q50 = parse_double(fields[2]);
    const double q75 = parse_double(fields[3]);
    CHECK(q25 <= q50);
    CHECK(q50 <= q75);
  }
}

TEST_CASE("individuals table") {
  const auto result = small_run(25);
  const auto lines = split(individuals_table(result), '\n');
  REQUIRE(lines.size() == 26);
  CHECK(lines[0] == "id,tau,x_at_death,haly");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    REQUIRE(fields.size() == 4);
    CHECK(fields[0] == std::to_string(i - 1));  // ordered by id
    const double tau = parse_double(fields[1]);
    const double haly = parse_double(fields[3]);
    CHECK(haly <= tau + 1e-12);
    CHECK(parse_double(fields[1]) == result.trajectories[i - 1].tau);  // exact round-trip
  }
}

TEST_CASE("paths table") {
  const auto result = small_run(4);
  const auto lines = split(paths_table(result), '\n');
  REQUIRE(lines.size() == result.trajectories[0].values.size() + 1);
  CHECK(lines[0] == "age,x0,x1,x2,x3");
  const auto row = split(lines[1], ',');
  REQUIRE(row.size() == 5);
  CHECK(parse_double(row[1]) == result.trajectories[0].values[0]);
}

TEST_CASE("file writers surface target paths on failure") {
  const auto result = small_run(2);
  const fs::path missing = "/nonexistent-dir-xyzzy/out.csv";
  try {
    write_curves(result, missing);
    FAIL("expected IoError");
  } catch (const IoError& err) {
    CHECK(std::string(err.what()).find(missing.string()) != std::string::npos);
  }

  SUBCASE("successful write round-trips") {
    const fs::path dir = fs::temp_directory_path() / "halysim_writer_test";
    fs::create_directories(dir);
    const fs::path target = dir / "individuals.csv";
    write_individuals(result, target);
    std::ifstream in(target);
    std::string first_line;
    std::getline(in, first_line);
    CHECK(first_line == "id,tau,x_at_death,haly");
    fs::remove_all(dir);
  }
}
