#include "spindiscord/correlators.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "spindiscord/error.hpp"

namespace spindiscord {

namespace {

constexpr double kRatioFloor = 1e-14;

struct SitePair {
  Config bit_i;
  Config bit_j;
};

SitePair check_pair(const GroundState& gs, int i, int j) {
  const int n = gs.n_sites();
  if (i == j) throw DomainError("pair correlations need two distinct sites");
  if (i < 1 || j < 1 || i > n || j > n) {
    std::ostringstream os;
    os << "sites (" << i << ", " << j << ") outside [1, " << n << "]";
    throw DomainError(os.str());
  }
  return {Config{1} << (i - 1), Config{1} << (j - 1)};
}

// Σ ψ(c') ψ(c) over configurations c with site i down and site j up, where
// c' has the two spins exchanged: the matrix element <s^+_i s^-_j>.
double flip_flop(const GroundState& gs, const SitePair& p) {
  const SectorBasis& basis = *gs.basis;
  double acc = 0.0;
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const Config c = basis.state(idx);
    if ((c & p.bit_i) == 0 && (c & p.bit_j) != 0) {
      const Config flipped = c ^ p.bit_i ^ p.bit_j;
      acc += gs.amplitudes(static_cast<Eigen::Index>(basis.index_of(flipped))) *
             gs.amplitudes(static_cast<Eigen::Index>(idx));
    }
  }
  return acc;
}

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

void require_nonnegative(double value, const char* what) {
  if (value < -kStateTolerance) {
    std::ostringstream os;
    os << "correlations outside the positivity window: eigenvalue " << what << " = " << value
       << " < 0";
    throw DomainError(os.str());
  }
}

}  // namespace

int ring_distance(int i, int j, int n_sites) {
  const int d = std::abs(i - j) % n_sites;
  return std::min(d, n_sites - d);
}

XState two_site_rdm(const GroundState& gs, int i, int j) {
  const SitePair p = check_pair(gs, i, j);
  const SectorBasis& basis = *gs.basis;
  XState s;
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const Config c = basis.state(idx);
    const double a = gs.amplitudes(static_cast<Eigen::Index>(idx));
    const bool up_i = (c & p.bit_i) != 0;
    const bool up_j = (c & p.bit_j) != 0;
    const double w = a * a;
    if (up_i && up_j)
      s.u += w;
    else if (!up_i && !up_j)
      s.v += w;
    else if (up_i)
      s.w1 += w;
    else
      s.w2 += w;
  }
  s.x = flip_flop(gs, p);
  // A single Sz sector has no <s^+ s^+> coherence.
  s.y = 0.0;
  return s;
}

PairCorrelations pair_correlations(const GroundState& gs, int i, int j) {
  const SitePair p = check_pair(gs, i, j);
  const SectorBasis& basis = *gs.basis;
  PairCorrelations pc;
  pc.r = ring_distance(i, j, gs.n_sites());
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const Config c = basis.state(idx);
    const double w = gs.amplitudes(static_cast<Eigen::Index>(idx)) *
                     gs.amplitudes(static_cast<Eigen::Index>(idx));
    const double sz_i = (c & p.bit_i) ? 0.5 : -0.5;
    const double sz_j = (c & p.bit_j) ? 0.5 : -0.5;
    pc.gamma_d += w * sz_i * sz_j;
    pc.mz_i += w * sz_i;
    pc.mz_j += w * sz_j;
  }
  pc.gamma_o = flip_flop(gs, p);
  pc.y_corr = 0.0;
  return pc;
}

XState xstate_from_correlations(const PairCorrelations& c) {
  XState s;
  s.u = 0.25 + c.gamma_d + (c.mz_i + c.mz_j) / 2.0;
  s.v = 0.25 + c.gamma_d - (c.mz_i + c.mz_j) / 2.0;
  s.w1 = 0.25 - c.gamma_d + (c.mz_i - c.mz_j) / 2.0;
  s.w2 = 0.25 - c.gamma_d - (c.mz_i - c.mz_j) / 2.0;
  s.x = c.gamma_o;
  s.y = c.y_corr;
  return s;
}

KRatio k_ratio(const GroundState& gs, int r) {
  const int n = gs.n_sites();
  if (r < 1 || r >= n) {
    std::ostringstream os;
    os << "separation " << r << " outside [1, " << n - 1 << "]";
    throw DomainError(os.str());
  }
  const PairCorrelations pc = pair_correlations(gs, 1, 1 + r);
  if (std::abs(pc.gamma_d) < kRatioFloor) {
    std::ostringstream os;
    os << "k ratio undefined at r=" << r << ": |Γᴰ| = " << std::abs(pc.gamma_d) << " < "
       << kRatioFloor;
    throw DomainError(os.str());
  }
  return {r, pc.gamma_o.real() / pc.gamma_d};
}

double anisotropic_discord(double gamma_d, double k) {
  // Spectrum: 1/4 + Γ (twice), 1/4 − Γ ± kΓ.
  const double lambda[4] = {0.25 + gamma_d, 0.25 + gamma_d, 0.25 - gamma_d + k * gamma_d,
                            0.25 - gamma_d - k * gamma_d};
  for (double l : lambda) require_nonnegative(l, "of the pair state");
  double s_joint = 0.0;
  for (double l : lambda) s_joint += plogp(std::max(l, 0.0));

  const double h_z = binary_entropy(0.5 + 2.0 * gamma_d);
  const double h_x = binary_entropy(0.5 + k * gamma_d);
  const double step = std::abs(k) > 2.0 ? 1.0 : 0.0;
  return 1.0 - s_joint + h_z + step * (h_x - h_z);
}

double isotropic_discord(double gamma_d) {
  const double triplet = 0.25 + gamma_d;
  const double singlet = 0.25 - 3.0 * gamma_d;
  require_nonnegative(triplet, "1/4 + Γ");
  require_nonnegative(singlet, "1/4 − 3Γ");
  auto xlog2x = [](double p) { return p > 0.0 ? p * std::log2(p) : 0.0; };
  return 1.0 + 3.0 * xlog2x(std::max(triplet, 0.0)) + xlog2x(std::max(singlet, 0.0)) +
         binary_entropy(0.5 + 2.0 * gamma_d);
}

AsymptoticCheck asymptotic_discord_check(double gamma_d, double k) {
  AsymptoticCheck out;
  out.exact = (k == 2.0) ? isotropic_discord(gamma_d) : anisotropic_discord(gamma_d, k);
  out.leading = 2.0 * (k * k + 4.0) * gamma_d * gamma_d / std::numbers::ln2;
  return out;
}

std::vector<ProfileEntry> discord_profile_vs_r(const GroundState& gs) {
  const int n = gs.n_sites();
  std::vector<ProfileEntry> out;
  for (int r = 1; r <= n / 2; ++r) {
    ProfileEntry e;
    e.r = r;
    const XState s = two_site_rdm(gs, 1, 1 + r);
    const DiscordResult d = discord(s);
    e.discord = d.discord;
    e.chosen_theta = d.chosen_theta;
    const PairCorrelations pc = pair_correlations(gs, 1, 1 + r);
    e.gamma_d = pc.gamma_d;
    e.gamma_o = pc.gamma_o.real();
    if (std::abs(pc.gamma_d) >= kRatioFloor) {
      e.k = pc.gamma_o.real() / pc.gamma_d;
      e.closed_form = anisotropic_discord(pc.gamma_d, *e.k);
    }
    if (gs.delta == 1.0) e.isotropic = isotropic_discord(pc.gamma_d);
    out.push_back(e);
  }
  return out;
}

GroundStateProvider default_provider(const GroundStateOptions& options) {
  return [options](int n_sites, double delta) { return ground_state(n_sites, delta, options); };
}

std::vector<DeltaProfileRow> discord_profile_vs_delta(
    int n_sites, const std::vector<double>& deltas, const std::vector<int>& rs,
    const GroundStateProvider& provider,
    const std::function<void(const DeltaProfileRow&)>& on_row) {
  std::vector<DeltaProfileRow> rows;
  for (int r : rs) {
    if (r < 1 || r >= n_sites) {
      std::ostringstream os;
      os << "separation " << r << " outside [1, " << n_sites - 1 << "]";
      throw DomainError(os.str());
    }
  }
  for (double delta : deltas) {
    if (delta <= -1.0) {
      for (int r : rs) {
        DeltaProfileRow row{delta, r, 0.0, std::nullopt, std::nullopt};
        rows.push_back(row);
        if (on_row) on_row(row);
      }
      continue;
    }
    const GroundState gs = provider(n_sites, delta);
    for (int r : rs) {
      DeltaProfileRow row;
      row.delta = delta;
      row.r = r;
      const DiscordResult d = discord(two_site_rdm(gs, 1, 1 + r));
      row.discord = d.discord;
      row.chosen_theta = d.chosen_theta;
      const PairCorrelations pc = pair_correlations(gs, 1, 1 + r);
      if (std::abs(pc.gamma_d) >= kRatioFloor) row.k = pc.gamma_o.real() / pc.gamma_d;
      rows.push_back(row);
      if (on_row) on_row(row);
    }
  }
  return rows;
}

}  // namespace spindiscord
