#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "halysim/config_io.hpp"
#include "halysim/population.hpp"
#include "halysim/version.hpp"
#include "halysim/writers.hpp"

namespace fs = std::filesystem;

namespace {

int run_simulate(const std::string& config_path, const std::string& out_dir,
                 const CLI::App& cmd, std::uint64_t seed, std::int64_t n,
                 bool dump_paths, bool quiet) {
  halysim::SimConfig config =
      config_path.empty() ? halysim::SimConfig{} : halysim::load_config_file(config_path);
  if (cmd.count("--seed") > 0) config.seed = seed;
  if (cmd.count("--n") > 0) config.n = n;
  config.validate();

  const auto started = std::chrono::steady_clock::now();
  const halysim::PopulationResult result = halysim::simulate_population(config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;

  const halysim::RunManifest manifest{config, std::string(halysim::kVersionTag),
                                      elapsed.count()};

  const fs::path out(out_dir);
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw halysim::IoError("cannot create output directory: " + out.string());

  halysim::write_summary(result, manifest, out / "summary.json");
  halysim::write_curves(result, out / "curves.csv");
  halysim::write_individuals(result, out / "individuals.csv");
  if (dump_paths) halysim::write_paths(result, out / "paths.csv");

  if (!quiet) {
    const auto& s = result.summary;
    std::cout << "simulated n=" << config.n << " individuals in " << elapsed.count() << " s\n"
              << "median life expectancy: " << s.life_expectancy.median << " years (IQR "
              << s.life_expectancy.q25 << " - " << s.life_expectancy.q75 << ")\n"
              << "median HRQoL at death:  " << s.hrqol_at_death.median << " (IQR "
              << s.hrqol_at_death.q25 << " - " << s.hrqol_at_death.q75 << ")\n"
              << "median HALY:            " << s.haly.median << " years (IQR "
              << s.haly.q25 << " - " << s.haly.q75 << ")\n"
              << "outputs written to " << out.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HRQoL lifespan simulator: bounded SDE paths with hazard-driven death times"};
  app.require_subcommand(1);

  auto* sim = app.add_subcommand(
      "simulate", "Run a population simulation and write summary, curves and individuals files");
  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  std::int64_t n = 0;
  bool dump_paths = false;
  bool quiet = false;
  sim->add_option("--config", config_path, "JSON config file (defaults used when omitted)");
  sim->add_option("--seed", seed, "Master seed, overrides the config file");
  sim->add_option("--n", n, "Population size, overrides the config file");
  sim->add_option("--out", out_dir, "Output directory (created if missing)");
  sim->add_flag("--dump-paths", dump_paths, "Also write the full path matrix (large)");
  sim->add_flag("--quiet", quiet, "Suppress the summary printed to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    return run_simulate(config_path, out_dir, *sim, seed, n, dump_paths, quiet);
  } catch (const halysim::ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 2;
  } catch (const halysim::IoError& err) {
    std::cerr << "io error: " << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
