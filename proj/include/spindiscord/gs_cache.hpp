#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spindiscord/ground_state.hpp"

namespace spindiscord {

/// Bumped whenever solver output for a fixed key may change.
inline constexpr const char* kCacheCodeVersion = "1";

/// Ground-state record layout, little-endian:
///   "SDKGS1" | u32 N | u32 n_up | f64 delta | f64 tol | f64 energy | u64 dim
///   | dim × f64 amplitudes | u32 CRC-32 of the amplitude bytes
std::vector<std::byte> encode_ground_state(const GroundState& gs);

struct DecodedGroundState {
  std::uint32_t n_sites = 0;
  std::uint32_t n_up = 0;
  double delta = 0.0;
  double tol = 0.0;
  double energy = 0.0;
  std::vector<double> amplitudes;
};

/// Returns nullopt on bad magic, truncation, size mismatch or CRC failure.
std::optional<DecodedGroundState> decode_ground_state(std::span<const std::byte> bytes);

std::uint32_t crc32(std::span<const std::byte> bytes);

/// Disk-backed memo of ground states keyed by (N, Δ, tol, seed, code version).
class GroundStateCache {
 public:
  explicit GroundStateCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(int n_sites, double delta, const GroundStateOptions& opt) const;

  /// Cached state when a valid record exists, otherwise solves and stores.
  GroundState get_or_solve(int n_sites, double delta, const GroundStateOptions& opt);

  std::optional<GroundState> load(int n_sites, double delta, const GroundStateOptions& opt) const;
  void store(const GroundState& gs) const;

  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }

 private:
  std::filesystem::path dir_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

}  // namespace spindiscord
