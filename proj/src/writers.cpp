#include "halysim/writers.hpp"

#include <charconv>
#include <fstream>

#include <json.hpp>

#include "halysim/config_io.hpp"

namespace halysim {

namespace {

// Shortest representation that parses back to the same double.
void append_number(std::string& out, double value) {
  char buffer[32];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  (void)ec;
  out.append(buffer, end);
}

// Grid ages are k * dt; 12 significant digits hide the accumulated ulp of
// the multiplication without losing anything a plot could show.
void append_age(std::string& out, double value) {
  char buffer[32];
  const auto [end, ec] =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 12);
  (void)ec;
  out.append(buffer, end);
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

std::string summary_document(const PopulationResult& result, const RunManifest& manifest) {
  nlohmann::ordered_json doc;
  doc["median_le"] = result.summary.life_expectancy.median;
  doc["le_q25"] = result.summary.life_expectancy.q25;
  doc["le_q75"] = result.summary.life_expectancy.q75;
  doc["median_x_at_death"] = result.summary.hrqol_at_death.median;
  doc["xq25"] = result.summary.hrqol_at_death.q25;
  doc["xq75"] = result.summary.hrqol_at_death.q75;
  doc["median_haly"] = result.summary.haly.median;
  doc["haly_q25"] = result.summary.haly.q25;
  doc["haly_q75"] = result.summary.haly.q75;
  doc["config"] = config_to_json(manifest.config);
  doc["version"] = manifest.version;
  doc["runtime_seconds"] = manifest.runtime_seconds;
  return doc.dump(2) + "\n";
}

std::string curves_table(const PopulationResult& result) {
  std::string out = "age,q25,q50,q75\n";
  for (std::size_t k = 0; k < result.curves.q50.size(); ++k) {
    append_age(out, static_cast<double>(k) * result.dt);
    out.push_back(',');
    append_number(out, result.curves.q25[k]);
    out.push_back(',');
    append_number(out, result.curves.q50[k]);
    out.push_back(',');
    append_number(out, result.curves.q75[k]);
    out.push_back('\n');
  }
  return out;
}

std::string individuals_table(const PopulationResult& result) {
  std::string out = "id,tau,x_at_death,haly\n";
  for (std::size_t i = 0; i < result.trajectories.size(); ++i) {
    const auto& trajectory = result.trajectories[i];
    out += std::to_string(i);
    out.push_back(',');
    append_number(out, trajectory.tau);
    out.push_back(',');
    append_number(out, trajectory.x_at_death);
    out.push_back(',');
    append_number(out, trajectory.haly);
    out.push_back('\n');
  }
  return out;
}

std::string paths_table(const PopulationResult& result) {
  std::string out = "age";
  for (std::size_t i = 0; i < result.trajectories.size(); ++i) {
    out.push_back(',');
    out += "x" + std::to_string(i);
  }
  out.push_back('\n');
  const std::size_t grid = result.trajectories.front().values.size();
  for (std::size_t k = 0; k < grid; ++k) {
    append_age(out, static_cast<double>(k) * result.dt);
    for (const auto& trajectory : result.trajectories) {
      out.push_back(',');
      append_number(out, trajectory.values[k]);
    }
    out.push_back('\n');
  }
  return out;
}

void write_summary(const PopulationResult& result, const RunManifest& manifest,
                   const std::filesystem::path& path) {
  write_text_file(path, summary_document(result, manifest));
}

void write_curves(const PopulationResult& result, const std::filesystem::path& path) {
  write_text_file(path, curves_table(result));
}

void write_individuals(const PopulationResult& result, const std::filesystem::path& path) {
  write_text_file(path, individuals_table(result));
}

void write_paths(const PopulationResult& result, const std::filesystem::path& path) {
  write_text_file(path, paths_table(result));
}

}  // namespace halysim
