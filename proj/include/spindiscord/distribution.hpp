#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "spindiscord/correlators.hpp"
#include "spindiscord/xstate.hpp"

namespace spindiscord {

/// Measure over measurement directions.
///  SolidAngle: dΩ/4π = sin θ dθ dφ / 4π (uniform on the Bloch sphere).
///  FlatAngles: dθ dφ / 2π² (uniform in the two angles).
enum class Measure { SolidAngle, FlatAngles };

const char* to_string(Measure m) noexcept;

struct SamplingScheme {
  enum class Kind { UniformSphere, GaussGrid };
  Kind kind = Kind::GaussGrid;
  std::size_t n_samples = 0;  ///< UniformSphere
  std::size_t n_theta = 256;  ///< GaussGrid
  std::size_t n_phi = 256;    ///< GaussGrid
  std::uint64_t seed = 1;     ///< UniformSphere
  Measure measure = Measure::SolidAngle;

  static SamplingScheme uniform_sphere(std::size_t n, std::uint64_t seed,
                                       Measure measure = Measure::SolidAngle);
  static SamplingScheme gauss_grid(std::size_t n_theta, std::size_t n_phi,
                                   Measure measure = Measure::SolidAngle);

  std::size_t point_count() const noexcept;
  std::string describe() const;
};

inline constexpr double kDefaultBinWidth = 0.005;

struct Peak {
  long bin = 0;
  double center = 0.0;
  double mass = 0.0;
};

/// Binned P(C). Moments and extrema come from the unbinned values.
struct EntropyHistogram {
  double bin_width = kDefaultBinWidth;
  /// Bin b covers [b·bin_width, (b+1)·bin_width).
  std::map<long, double> bins;
  double mean = 0.0;
  double variance = 0.0;
  double min_c = 0.0;
  double max_c = 0.0;
  std::size_t n_samples = 0;
  SamplingScheme scheme;

  double total_mass() const;
  double binned_mean() const;
  double binned_variance() const;
};

/// Distribution of C_{θ,φ} over measurement directions. Throws DomainError
/// for invalid states or scheme parameters (fewer than 10³ points, bin
/// width not positive).
EntropyHistogram sample_distribution(const XState& s, const SamplingScheme& scheme,
                                     double bin_width = kDefaultBinWidth);

/// Bins whose mass is maximal within ±min_separation bins (empty bins outside
/// the occupied range count as zero). Plateaus report their first bin.
std::vector<Peak> find_peaks(const EntropyHistogram& h, int min_separation = 5);

struct MomentsRow {
  double delta = 0.0;
  int r = 0;
  double mean = 0.0;
  double variance = 0.0;
  double min_c = 0.0;
  double max_c = 0.0;
  double discord = 0.0;
};

/// Moments of P(C) for pairs (1, 1+r) of ground states over a Δ grid.
/// Δ ≤ −1 is outside the solver regime and raises FerromagneticRegimeError.
std::vector<MomentsRow> moments_vs_delta(
    int n_sites, const std::vector<double>& deltas, const std::vector<int>& rs,
    const SamplingScheme& scheme, const GroundStateProvider& provider,
    const std::function<void(const MomentsRow&)>& on_row = {});

/// CSV with header `bin_left,bin_right,mass`, one line per occupied bin range
/// (empty interior bins included).
void write_histogram_csv(const EntropyHistogram& h, std::ostream& os);

/// Summary JSON: mean, variance, min, max, scheme, seed, bin width.
std::string histogram_summary_json(const EntropyHistogram& h, int indent = 2);

}  // namespace spindiscord
