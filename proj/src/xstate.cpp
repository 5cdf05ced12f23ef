#include "spindiscord/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "spindiscord/error.hpp"

namespace spindiscord {

namespace {

constexpr double kPi = std::numbers::pi;

// -p log2 p with 0 log 0 = 0.
double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

double clamp_probability(double p) {
  if (p < -kStateTolerance || p > 1.0 + kStateTolerance) {
    std::ostringstream os;
    os << "probability " << p << " outside [0, 1]";
    throw DomainError(os.str());
  }
  return std::clamp(p, 0.0, 1.0);
}

// Entropy contribution p * S(ρ_{A|B_k}) of one measurement outcome whose
// unnormalised conditional state has trace p, diagonal difference b and
// off-diagonal modulus |z|.
double outcome_entropy(double p, double b, double abs_z) {
  if (p <= 0.0) return 0.0;
  const double gap = std::sqrt(b * b + 4.0 * abs_z * abs_z);
  const double lambda = std::min((p + gap) / (2.0 * p), 1.0);
  return p * binary_entropy(lambda);
}

}  // namespace

const char* to_string(ChosenTheta c) noexcept {
  return c == ChosenTheta::Zero ? "ZERO" : "NINETY";
}

std::array<double, 4> joint_eigenvalues(const XState& s) {
  const double ry = std::sqrt((s.u - s.v) * (s.u - s.v) + 4.0 * std::norm(s.y));
  const double rx =
      std::sqrt((s.w1 - s.w2) * (s.w1 - s.w2) + 4.0 * std::norm(s.x));
  return {(s.u + s.v + ry) / 2.0, (s.u + s.v - ry) / 2.0,
          (s.w1 + s.w2 + rx) / 2.0, (s.w1 + s.w2 - rx) / 2.0};
}

bool is_valid(const XState& s) noexcept {
  if (!(std::abs(s.trace() - 1.0) <= kStateTolerance)) return false;
  for (double w : {s.u, s.v, s.w1, s.w2})
    if (!(w >= -kStateTolerance)) return false;
  for (double e : joint_eigenvalues(s))
    if (!(e >= -kStateTolerance)) return false;
  return std::isfinite(s.x.real()) && std::isfinite(s.x.imag()) &&
         std::isfinite(s.y.real()) && std::isfinite(s.y.imag());
}

void validate(const XState& s) {
  if (is_valid(s)) return;
  std::ostringstream os;
  os.precision(17);
  os << "invalid X state: u=" << s.u << " v=" << s.v << " w1=" << s.w1
     << " w2=" << s.w2 << " x=" << s.x << " y=" << s.y
     << " (trace " << s.trace() << ")";
  throw DomainError(os.str());
}

double binary_entropy(double p) {
  p = clamp_probability(p);
  return plogp(p) + plogp(1.0 - p);
}

double shannon_entropy(const double* p, std::size_t n) {
  double h = 0.0;
  for (std::size_t i = 0; i < n; ++i) h += plogp(std::max(p[i], 0.0));
  return h;
}

double joint_entropy(const XState& s) {
  const auto ev = joint_eigenvalues(s);
  return shannon_entropy(ev.data(), ev.size());
}

double entropy_b(const XState& s) {
  const double pb[2] = {s.u + s.w2, s.v + s.w1};
  return shannon_entropy(pb, 2);
}

double conditional_entropy(const XState& s, const MeasurementBasis& m) {
  const double a2 = std::cos(m.theta / 2.0) * std::cos(m.theta / 2.0);
  const double b2 = std::sin(m.theta / 2.0) * std::sin(m.theta / 2.0);
  const Complex phase = std::polar(1.0, m.phi);
  const double abs_z = std::abs(std::cos(m.theta / 2.0) * std::sin(m.theta / 2.0) *
                                (s.x * phase + s.y * std::conj(phase)));

  const double p0 = (s.u + s.w2) * a2 + (s.w1 + s.v) * b2;
  const double p1 = (s.u + s.w2) * b2 + (s.w1 + s.v) * a2;
  const double b0 = (s.u - s.w2) * a2 + (s.w1 - s.v) * b2;
  const double b1 = (s.u - s.w2) * b2 + (s.w1 - s.v) * a2;
  return outcome_entropy(p0, b0, abs_z) + outcome_entropy(p1, b1, abs_z);
}

double c00(const XState& s) {
  // Each outcome of a σz measurement on B leaves A diagonal.
  double h = 0.0;
  const double pb0 = s.u + s.w2;
  if (pb0 > 0.0) {
    const double cond[2] = {s.u / pb0, s.w2 / pb0};
    h += pb0 * shannon_entropy(cond, 2);
  }
  const double pb1 = s.v + s.w1;
  if (pb1 > 0.0) {
    const double cond[2] = {s.v / pb1, s.w1 / pb1};
    h += pb1 * shannon_entropy(cond, 2);
  }
  return h;
}

C90Result c90(const XState& s) {
  auto coherence = [&](double phi) {
    const Complex e = std::polar(1.0, phi);
    return std::abs(s.x * e + s.y * std::conj(e));
  };

  double phi_star = 0.0;
  if (std::abs(s.x) > 0.0 && std::abs(s.y) > 0.0) {
    // Stationary points of |x e^{iφ} + y e^{-iφ}|² satisfy
    // tan 2φ = -Im(x y*) / Re(x y*); the two branches differ by π/2.
    const Complex xy = s.x * std::conj(s.y);
    const double first = 0.5 * std::atan2(-xy.imag(), xy.real());
    const double second = first + kPi / 2.0;
    phi_star = coherence(first) >= coherence(second) ? first : second;
    phi_star = std::fmod(phi_star, 2.0 * kPi);
    if (phi_star < 0.0) phi_star += 2.0 * kPi;
  }
  const double diag = s.u - s.v + s.w1 - s.w2;
  const double z = coherence(phi_star);
  const double lambda = (1.0 + std::sqrt(diag * diag + 4.0 * z * z)) / 2.0;
  return {binary_entropy(std::min(lambda, 1.0)), phi_star};
}

DiscordResult discord(const XState& s) {
  validate(s);
  DiscordResult r;
  r.c00 = c00(s);
  const C90Result ninety = c90(s);
  r.c90 = ninety.value;
  r.phi_star = ninety.phi_star;
  r.chosen_theta = r.c90 < r.c00 ? ChosenTheta::Ninety : ChosenTheta::Zero;
  r.s_joint = joint_entropy(s);
  r.s_b = entropy_b(s);
  r.discord = std::min(r.c00, r.c90) - r.s_joint + r.s_b;
  return r;
}

GridVerifyReport discord_grid_verify(const XState& s, std::size_t n_theta,
                                     std::size_t n_phi) {
  if (n_theta < 2 || n_phi < 2)
    throw DomainError("discord_grid_verify needs at least 2 points per angle");
  validate(s);

  GridVerifyReport rep;
  rep.grid_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double theta = kPi * static_cast<double>(i) / static_cast<double>(n_theta - 1);
    for (std::size_t j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n_phi);
      const double c = conditional_entropy(s, {theta, phi});
      if (c < rep.grid_min) {
        rep.grid_min = c;
        rep.argmin = {theta, phi};
      }
    }
  }
  rep.closed_form_min = std::min(c00(s), c90(s).value);
  rep.discrepancy = rep.closed_form_min - rep.grid_min;
  return rep;
}

PureStateDiscord pure_state_discord(Complex a, Complex b, Complex c, Complex d) {
  const double norm = std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
  if (!(std::abs(norm - 1.0) <= 1e-10)) {
    std::ostringstream os;
    os << "pure state not normalised: |a|²+|b|²+|c|²+|d|² = " << norm;
    throw DomainError(os.str());
  }
  // Larger eigenvalue of ρ_A; avoids the cancellation in √(1 − C²) near C = 1.
  const double ra = std::norm(a) + std::norm(b);
  const double rb = std::norm(c) + std::norm(d);
  const Complex off = a * std::conj(c) + b * std::conj(d);
  const double p = std::min(1.0, (1.0 + std::hypot(ra - rb, 2.0 * std::abs(off))) / 2.0);
  return {p, binary_entropy(p)};
}

}  // namespace spindiscord
