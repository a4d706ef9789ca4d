// Times the serial reference runner against the OpenMP runner on the same
// config and checks that the two produce identical results.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "halysim/population.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  halysim::SimConfig config;
  config.n = 2000;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    const std::string value = argv[i + 1];
    if (flag == "--n")
      config.n = std::stoll(value);
    else if (flag == "--seed")
      config.seed = std::stoull(value);
    else {
      std::cerr << "usage: halysim_bench [--n COUNT] [--seed U64]\n";
      return 2;
    }
  }

#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "openmp: not enabled\n";
#endif
  std::cout << "n=" << config.n << " dt=" << config.dt << " omega=" << config.omega << "\n";

  auto start = std::chrono::steady_clock::now();
  const auto serial = halysim::simulate_population_serial(config);
  const double serial_s = seconds_since(start);
  std::cout << "serial:   " << serial_s << " s\n";

  start = std::chrono::steady_clock::now();
  const auto parallel = halysim::simulate_population(config);
  const double parallel_s = seconds_since(start);
  std::cout << "parallel: " << parallel_s << " s  (speedup " << serial_s / parallel_s << "x)\n";

  if (serial != parallel) {
    std::cout << "MISMATCH: serial and parallel results differ\n";
    return 1;
  }
  std::cout << "results identical\n";
  std::cout << "median tau " << serial.summary.life_expectancy.median << ", median HALY "
            << serial.summary.haly.median << "\n";
  return 0;
}
