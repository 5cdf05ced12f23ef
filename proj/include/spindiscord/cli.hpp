#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "spindiscord/distribution.hpp"

namespace spindiscord::cli {

enum class Format { Csv, Json };

enum ExitCode : int { kOk = 0, kUsage = 1, kNumerical = 2 };

struct RunConfig {
  std::string command;
  int n_sites = 12;
  std::vector<double> deltas;
  std::vector<int> rs;
  std::string out;  ///< empty or "-" writes to the output stream
  Format format = Format::Csv;
  std::filesystem::path cache_dir = "cache";
  bool use_cache = true;
  std::uint64_t seed = 1;
  double tol = 1e-12;
  std::size_t quad_theta = 256;
  std::size_t quad_phi = 256;
  std::size_t mc_samples = 0;  ///< > 0 switches to Monte Carlo sampling
  Measure measure = Measure::SolidAngle;
  double bin_width = kDefaultBinWidth;
  bool deterministic = false;
};

/// Parses "a:b:step" into an inclusive grid, snapped to 1e-10 so that grid
/// points such as 1.0 are exact. Throws std::invalid_argument.
std::vector<double> parse_delta_range(const std::string& text);

/// Parses "NxM". Throws std::invalid_argument.
std::pair<std::size_t, std::size_t> parse_quadrature(const std::string& text);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spindiscord::cli
