#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace spindiscord {

using Complex = std::complex<double>;

/// Two-qubit X-form density matrix in the basis |00>,|01>,|10>,|11>
/// (|0> = spin up). Qubit A is the first index, B the second.
///
///          |00>  |01>  |10>  |11>
///   <00|    u     0     0     y*
///   <01|    0     w1    x*    0
///   <10|    0     x     w2    0
///   <11|    y     0     0     v
struct XState {
  double u = 0.0;
  double v = 0.0;
  double w1 = 0.0;
  double w2 = 0.0;
  Complex x{0.0, 0.0};
  Complex y{0.0, 0.0};

  double trace() const noexcept { return u + v + w1 + w2; }
};

/// Projective measurement on qubit B, |0~> = cos(θ/2)|0> + e^{iφ} sin(θ/2)|1>.
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;
};

enum class ChosenTheta { Zero, Ninety };

const char* to_string(ChosenTheta c) noexcept;

struct DiscordResult {
  double discord = 0.0;
  double c00 = 0.0;
  double c90 = 0.0;
  double phi_star = 0.0;
  ChosenTheta chosen_theta = ChosenTheta::Zero;
  double s_joint = 0.0;
  double s_b = 0.0;
};

struct C90Result {
  double value = 0.0;
  double phi_star = 0.0;
};

struct GridVerifyReport {
  double grid_min = 0.0;
  double closed_form_min = 0.0;
  MeasurementBasis argmin;
  double discrepancy = 0.0;
};

struct PureStateDiscord {
  double p = 0.0;
  double discord = 0.0;
};

/// Tolerance used by the trace, positivity and probability-clamping checks.
inline constexpr double kStateTolerance = 1e-12;

/// Throws DomainError unless trace one, nonnegative weights and positive
/// joint spectrum hold within kStateTolerance.
void validate(const XState& s);
bool is_valid(const XState& s) noexcept;

/// H(p) in bits with 0 log 0 = 0. Inputs within 1e-12 of [0, 1] are clamped.
double binary_entropy(double p);

/// Shannon entropy in bits of a list of probabilities; values within
/// 1e-12 below zero count as zero.
double shannon_entropy(const double* p, std::size_t n);

std::array<double, 4> joint_eigenvalues(const XState& s);

/// Von Neumann entropy of the full two-qubit state.
double joint_entropy(const XState& s);

/// Entropy of the reduced state of qubit B (eigenvalues u+w2, v+w1).
double entropy_b(const XState& s);

/// C_{θ,φ}: average entropy of A after measuring B in the given basis.
/// Accepts any real angles; zero-probability outcomes contribute 0.
double conditional_entropy(const XState& s, const MeasurementBasis& m);

double c00(const XState& s);

/// θ = π/2 conditional entropy minimised over φ via maximal |x e^{iφ} + y e^{-iφ}|.
C90Result c90(const XState& s);

DiscordResult discord(const XState& s);

/// Brute-force scan of C_{θ,φ} over θ ∈ [0, π] (n_theta points, endpoints
/// included) and φ ∈ [0, 2π) (n_phi points), compared with the closed form.
GridVerifyReport discord_grid_verify(const XState& s, std::size_t n_theta,
                                     std::size_t n_phi);

/// Schmidt weight and discord of a|00> + b|01> + c|10> + d|11>.
PureStateDiscord pure_state_discord(Complex a, Complex b, Complex c, Complex d);

}  // namespace spindiscord
