#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spindiscord {

using Config = std::uint64_t;

/// Largest ring the sector machinery accepts.
inline constexpr int kMaxSites = 26;

/// All N-bit configurations with a fixed number of set bits (set bit = spin
/// up), in increasing integer order. Bit b carries site b+1. Immutable after
/// construction and safe to share between threads.
class SectorBasis {
 public:
  /// Throws UnsupportedError for odd rings, rings shorter than 4 sites or
  /// longer than kMaxSites, and DomainError for n_up outside [0, n_sites].
  SectorBasis(int n_sites, int n_up);

  int n_sites() const noexcept { return n_sites_; }
  int n_up() const noexcept { return n_up_; }
  std::size_t size() const noexcept { return states_.size(); }
  std::span<const Config> states() const noexcept { return states_; }
  Config state(std::size_t i) const noexcept { return states_[i]; }

  /// Ordinal of a configuration with exactly n_up set bits (colex rank).
  /// Behaviour is undefined for configurations outside the sector; use
  /// contains() first when that is not known.
  std::size_t index_of(Config c) const noexcept {
    std::size_t rank = 0;
    int k = 0;
    while (c != 0) {
      const int pos = __builtin_ctzll(c);
      rank += binom_[pos][++k];
      c &= c - 1;
    }
    return rank;
  }

  bool contains(Config c) const noexcept;

 private:
  int n_sites_;
  int n_up_;
  std::vector<Config> states_;
  std::vector<std::vector<std::size_t>> binom_;
};

/// Binomial coefficient C(n, k) for small arguments.
std::uint64_t binomial(int n, int k);

SectorBasis build_sector(int n_sites, int n_up);

}  // namespace spindiscord
