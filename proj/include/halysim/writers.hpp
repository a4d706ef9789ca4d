#pragma once

#include <filesystem>
#include <string>

#include "halysim/population.hpp"

namespace halysim {

struct RunManifest {
  SimConfig config;             // echo of the run configuration
  std::string version;          // software tag
  double runtime_seconds = 0.0; // wall-clock time of the simulation
};

// JSON summary: the nine quantile statistics plus the manifest. Numbers are
// rendered with full round-trip precision.
std::string summary_document(const PopulationResult& result, const RunManifest& manifest);

// CSV tables: header row, line-feed terminated, period decimal separator.
std::string curves_table(const PopulationResult& result);
std::string individuals_table(const PopulationResult& result);
std::string paths_table(const PopulationResult& result);

// File variants; throw IoError naming the target path.
void write_summary(const PopulationResult& result, const RunManifest& manifest,
                   const std::filesystem::path& path);
void write_curves(const PopulationResult& result, const std::filesystem::path& path);
void write_individuals(const PopulationResult& result, const std::filesystem::path& path);
void write_paths(const PopulationResult& result, const std::filesystem::path& path);

}  // namespace halysim
