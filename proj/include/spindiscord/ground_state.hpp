#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>

#include "spindiscord/sector_basis.hpp"

namespace spindiscord {

struct GroundStateOptions {
  double tol = 1e-12;
  std::uint64_t seed = 1;
  int max_iterations = 5000;
  /// 0 selects a Krylov block size from the sector dimension.
  int krylov_dim = 0;
};

/// Lowest eigenpair of the XXZ ring in the Sz=0 sector (J = 1, s = σ/2).
/// Amplitudes are real, unit norm, with amplitudes[0] > 0.
struct GroundState {
  std::shared_ptr<const SectorBasis> basis;
  double delta = 0.0;
  double energy = 0.0;
  Eigen::VectorXd amplitudes;
  /// ‖H ψ − E ψ‖, always recomputed from the stored vector.
  double residual = 0.0;
  double tol = 0.0;
  std::uint64_t seed = 0;

  int n_sites() const noexcept { return basis->n_sites(); }
};

/// Minimum accepted distance to the next Ritz value.
inline constexpr double kMinGap = 1e-10;

/// Throws UnsupportedError for unsupported rings, FerromagneticRegimeError
/// for delta <= -1, ConvergenceError when the solver fails or the ground
/// state is degenerate within kMinGap.
GroundState ground_state(int n_sites, double delta, const GroundStateOptions& options = {});
GroundState ground_state(int n_sites, double delta, double tol);

/// Builds a GroundState around a given vector (normalised, sign fixed, energy
/// and residual recomputed). Used when restoring cached vectors.
GroundState make_ground_state(std::shared_ptr<const SectorBasis> basis, double delta,
                              Eigen::VectorXd amplitudes, double tol, std::uint64_t seed);

double residual_norm(const SectorBasis& basis, double delta, const Eigen::VectorXd& psi,
                     double energy);

}  // namespace spindiscord
