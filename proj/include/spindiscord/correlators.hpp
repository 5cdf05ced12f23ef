#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "spindiscord/ground_state.hpp"
#include "spindiscord/xstate.hpp"

namespace spindiscord {

/// Two-point functions of sites (i, j), 1-based.
struct PairCorrelations {
  int r = 0;
  double gamma_d = 0.0;  ///< <s^z_i s^z_j>
  Complex gamma_o;       ///< <s^+_i s^-_j>
  Complex y_corr;        ///< <s^+_i s^+_j>
  double mz_i = 0.0;
  double mz_j = 0.0;
};

struct KRatio {
  int r = 0;
  double k = 0.0;
};

/// Shortest distance between two sites on an n-site ring.
int ring_distance(int i, int j, int n_sites);

/// Reduced density matrix of sites (i, j), 1-based, as an X state with
/// qubit A = site i and qubit B = site j.
XState two_site_rdm(const GroundState& gs, int i, int j);

PairCorrelations pair_correlations(const GroundState& gs, int i, int j);

/// X state assembled from correlators:
///   u, v = 1/4 + Γᴰ ± (mz_i + mz_j)/2,  w1, w2 = 1/4 − Γᴰ ± (mz_i − mz_j)/2,
///   x = Γᴼ, y = <s^+ s^+>.
XState xstate_from_correlations(const PairCorrelations& c);

/// k = Γᴼ/Γᴰ for the pair (1, 1+r). Throws DomainError when |Γᴰ| < 1e-14.
KRatio k_ratio(const GroundState& gs, int r);

/// Closed-form discord of a translation-invariant, time-reversal symmetric
/// state with Γᴼ = k Γᴰ. Throws DomainError if the state is not positive.
double anisotropic_discord(double gamma_d, double k);

/// Same for the isotropic case k = 2.
double isotropic_discord(double gamma_d);

struct AsymptoticCheck {
  double exact = 0.0;
  double leading = 0.0;
};

/// exact: closed form at (Γᴰ, k); leading: 2(k²+4)Γᴰ²/ln 2.
AsymptoticCheck asymptotic_discord_check(double gamma_d, double k);

struct ProfileEntry {
  int r = 0;
  double discord = 0.0;
  /// Closed-form value at the measured (Γᴰ, k); empty when Γᴰ ≈ 0.
  std::optional<double> closed_form;
  /// Isotropic closed form, only for Δ = 1.
  std::optional<double> isotropic;
  double gamma_d = 0.0;
  double gamma_o = 0.0;
  std::optional<double> k;
  ChosenTheta chosen_theta = ChosenTheta::Zero;
};

/// Discord of pairs (1, 1+r) for r = 1..N/2.
std::vector<ProfileEntry> discord_profile_vs_r(const GroundState& gs);

/// Supplies ground states to sweeps (e.g. a cache-backed solver).
using GroundStateProvider = std::function<GroundState(int n_sites, double delta)>;

GroundStateProvider default_provider(const GroundStateOptions& options = {});

struct DeltaProfileRow {
  double delta = 0.0;
  int r = 0;
  double discord = 0.0;
  std::optional<double> k;
  /// Empty for Δ ≤ −1 where the discord is 0 by the ferromagnetic rule.
  std::optional<ChosenTheta> chosen_theta;
};

/// Row-wise table over deltas × rs. Δ ≤ −1 rows are filled analytically.
/// `on_row` (optional) sees every row as soon as it is computed.
std::vector<DeltaProfileRow> discord_profile_vs_delta(
    int n_sites, const std::vector<double>& deltas, const std::vector<int>& rs,
    const GroundStateProvider& provider,
    const std::function<void(const DeltaProfileRow&)>& on_row = {});

}  // namespace spindiscord
