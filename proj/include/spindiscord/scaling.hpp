#pragma once

#include <vector>

namespace spindiscord {

/// Phenomenological critical-point model for pair correlations near t = 1
/// (t = T/T_c, or the matching tuning parameter at a quantum critical point).
struct ScalingParams {
  enum class Form { PowerLaw, KosterlitzThouless };
  double alpha = 0.1;  ///< specific-heat exponent, (0, 1)
  double nu = 0.6;     ///< correlation-length exponent
  double xi0 = 4.0;    ///< correlation-length amplitude, lattice units
  double r = 20.0;     ///< separation of the far pair, lattice units
  Form form = Form::PowerLaw;
  double gamma_c = -0.25;      ///< nearest-neighbour Γᴰ at t = 1
  double gamma_0 = -1.0 / 6.0; ///< nearest-neighbour Γᴰ at t = 0
};

/// Throws DomainError when alpha, nu, xi0 or r are out of range.
void validate(const ScalingParams& p);

/// ξ0 |1 − t|^{−ν}, or e^{π/√(t−1)} for the KT form (t > 1 only).
/// Power law at t = 1 returns +infinity.
double correlation_length(const ScalingParams& p, double t);

/// e^{−r/ξ(t)}/r; equals 1/r at t = 1.
double gamma_far(const ScalingParams& p, double t);

/// Γ(1) − (Γ(1) − Γ(0)) |1 − t|^{1−α}, valid for 0 ≤ t ≤ 2.
double gamma_nn(const ScalingParams& p, double t);

enum class PairKind { NearestNeighbour, Far };

struct CurvePoint {
  double t = 0.0;
  double normalized = 0.0;
  double gamma = 0.0;
};

/// Isotropic discord at Γ(t), divided by its t = 1 value. The far pair uses
/// Γ = −gamma_far(t) (antiferromagnetic sign). KT curves accept t > 1 only.
std::vector<CurvePoint> normalized_discord_curve(const ScalingParams& p,
                                                 const std::vector<double>& ts, PairKind pair);

}  // namespace spindiscord
