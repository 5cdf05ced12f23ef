#include "spindiscord/scaling.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "spindiscord/correlators.hpp"
#include "spindiscord/error.hpp"

namespace spindiscord {

void validate(const ScalingParams& p) {
  std::ostringstream os;
  if (!(p.alpha > 0.0 && p.alpha < 1.0)) os << "alpha must lie in (0, 1); ";
  if (!(p.nu > 0.0)) os << "nu must be positive; ";
  if (!(p.xi0 > 0.0)) os << "xi0 must be positive; ";
  if (!(p.r >= 1.0)) os << "r must be >= 1; ";
  if (!os.str().empty()) throw DomainError("invalid scaling parameters: " + os.str());
}

double correlation_length(const ScalingParams& p, double t) {
  validate(p);
  if (p.form == ScalingParams::Form::KosterlitzThouless) {
    if (!(t > 1.0)) {
      std::ostringstream os;
      os << "Kosterlitz-Thouless correlation length is defined for t > 1 only (t = " << t << ")";
      throw DomainError(os.str());
    }
    return std::exp(std::numbers::pi / std::sqrt(t - 1.0));
  }
  if (t == 1.0) return std::numeric_limits<double>::infinity();
  return p.xi0 * std::pow(std::abs(1.0 - t), -p.nu);
}

double gamma_far(const ScalingParams& p, double t) {
  validate(p);
  if (t == 1.0) return 1.0 / p.r;
  return std::exp(-p.r / correlation_length(p, t)) / p.r;
}

double gamma_nn(const ScalingParams& p, double t) {
  validate(p);
  if (!(t >= 0.0 && t <= 2.0)) {
    std::ostringstream os;
    os << "nearest-neighbour scaling form is used for 0 <= t <= 2 only (t = " << t << ")";
    throw DomainError(os.str());
  }
  return p.gamma_c - (p.gamma_c - p.gamma_0) * std::pow(std::abs(1.0 - t), 1.0 - p.alpha);
}

std::vector<CurvePoint> normalized_discord_curve(const ScalingParams& p,
                                                 const std::vector<double>& ts, PairKind pair) {
  validate(p);
  auto gamma_at = [&](double t) {
    return pair == PairKind::NearestNeighbour ? gamma_nn(p, t) : -gamma_far(p, t);
  };
  const double reference = isotropic_discord(gamma_at(1.0));
  std::vector<CurvePoint> out;
  out.reserve(ts.size());
  for (double t : ts) {
    const double g = gamma_at(t);
    out.push_back({t, t == 1.0 ? 1.0 : isotropic_discord(g) / reference, g});
  }
  return out;
}

}  // namespace spindiscord
