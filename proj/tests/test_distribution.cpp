#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "spindiscord/distribution.hpp"
#include "spindiscord/error.hpp"

using namespace spindiscord;

namespace {

constexpr double kPi = std::numbers::pi;

XState bell() {
  XState s;
  s.u = s.v = 0.5;
  s.y = 0.5;
  return s;
}

// Midpoint rule in cos θ and φ on the dense conditional-entropy oracle.
double oracle_mean(const XState& s, int n_theta, int n_phi) {
  double acc = 0.0;
  for (int i = 0; i < n_theta; ++i) {
    const double ct = -1.0 + (2.0 * i + 1.0) / n_theta;
    for (int j = 0; j < n_phi; ++j)
      acc += oracle::conditional_entropy(s, std::acos(ct), 2 * kPi * (j + 0.5) / n_phi);
  }
  return acc / (n_theta * n_phi);
}

}  // namespace

TEST(Quadrature, DefaultScheme) {
  const SamplingScheme sc;
  EXPECT_EQ(sc.kind, SamplingScheme::Kind::GaussGrid);
  EXPECT_EQ(sc.n_theta, 256u);
  EXPECT_EQ(sc.n_phi, 256u);
  EXPECT_EQ(sc.measure, Measure::SolidAngle);
  EXPECT_EQ(sc.describe(), "gauss_grid(256x256)/solid-angle");
}

TEST(SampleDistribution, BellStateIsPointMassAtZero) {
  const auto h = sample_distribution(bell(), SamplingScheme::gauss_grid(64, 64));
  EXPECT_LE(h.variance, 1e-12);
  EXPECT_NEAR(h.mean, 0.0, 1e-12);
  ASSERT_EQ(h.bins.size(), 1u);
  EXPECT_EQ(h.bins.begin()->first, 0);
  EXPECT_NEAR(h.bins.begin()->second, 1.0, 1e-12);
}

TEST(SampleDistribution, MassMomentsAndExtremaInvariants) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const XState s = oracle::random_xstate(rng);
    const auto h = sample_distribution(s, SamplingScheme::gauss_grid(96, 96));
    EXPECT_NEAR(h.total_mass(), 1.0, 1e-9);
    EXPECT_LE(h.min_c, h.mean);
    EXPECT_LE(h.mean, h.max_c);
    EXPECT_GE(h.variance, 0.0);
    EXPECT_NEAR(h.binned_mean(), h.mean, h.bin_width);
    EXPECT_NEAR(std::sqrt(h.binned_variance()), std::sqrt(h.variance), h.bin_width);

    const auto d = discord(s);
    EXPECT_NEAR(h.min_c, std::min(d.c00, d.c90), 5e-3);
    EXPECT_GE(h.min_c, std::min(d.c00, d.c90) - 1e-12);
    // The largest value sits on one of the two complementary candidates:
    // the other pole, or the equator direction opposite to φ*.
    const double equator_max = conditional_entropy(s, {kPi / 2, d.phi_star + kPi / 2});
    EXPECT_NEAR(h.max_c, std::max(d.c00, equator_max), 5e-3);
  }
}

TEST(SampleDistribution, MeanMatchesIndependentQuadrature) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 3; ++trial) {
    const XState s = oracle::random_xstate(rng);
    const auto h = sample_distribution(s, SamplingScheme::gauss_grid(128, 128));
    EXPECT_NEAR(h.mean, oracle_mean(s, 200, 64), 2e-4);
  }
}

TEST(SampleDistribution, MonteCarloAgreesWithQuadratureForPhiIndependentState) {
  XState s;
  s.u = 0.1;
  s.v = 0.2;
  s.w1 = 0.3;
  s.w2 = 0.4;
  const auto q = sample_distribution(s, SamplingScheme::gauss_grid(256, 16));
  const auto mc = sample_distribution(s, SamplingScheme::uniform_sphere(200000, 5));
  const double stderr_mc = std::sqrt(mc.variance / 200000.0);
  EXPECT_LE(std::abs(mc.mean - q.mean), 3 * stderr_mc);
}

TEST(SampleDistribution, MonteCarloIsReproducible) {
  std::mt19937_64 rng(41);
  const XState s = oracle::random_xstate(rng);
  const auto a = sample_distribution(s, SamplingScheme::uniform_sphere(5000, 9));
  const auto b = sample_distribution(s, SamplingScheme::uniform_sphere(5000, 9));
  const auto c = sample_distribution(s, SamplingScheme::uniform_sphere(5000, 10));
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.bins, b.bins);
  EXPECT_NE(a.mean, c.mean);
}

TEST(SampleDistribution, InvariantUnderHalfTurnInPhiForRealCoherences) {
  XState s;
  s.u = 0.15;
  s.v = 0.25;
  s.w1 = 0.35;
  s.w2 = 0.25;
  s.x = 0.2;
  s.y = -0.1;
  for (double theta : {0.3, 1.1, 2.0})
    for (double phi : {0.2, 1.4, 2.9})
      EXPECT_NEAR(conditional_entropy(s, {theta, phi}), conditional_entropy(s, {theta, phi + kPi}), 1e-12);
  // An even φ grid maps onto itself under φ → φ + π, so the histogram is unchanged
  // when the coherences pick up the corresponding phase.
  XState t = s;
  t.x = -s.x;
  t.y = -s.y;
  const auto hs = sample_distribution(s, SamplingScheme::gauss_grid(64, 64));
  const auto ht = sample_distribution(t, SamplingScheme::gauss_grid(64, 64));
  EXPECT_NEAR(hs.mean, ht.mean, 1e-12);
  EXPECT_NEAR(hs.variance, ht.variance, 1e-12);
}

TEST(SampleDistribution, FlatMeasureUsesUniformAngles) {
  XState s;
  s.u = 0.1;
  s.v = 0.2;
  s.w1 = 0.3;
  s.w2 = 0.4;
  // φ-independent: flat mean = (1/π) ∫ C(θ) dθ, computed with a fine midpoint rule.
  double ref = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) ref += conditional_entropy(s, {kPi * (i + 0.5) / n, 0.0});
  ref /= n;
  const auto h = sample_distribution(s, SamplingScheme::gauss_grid(128, 8, Measure::FlatAngles));
  EXPECT_NEAR(h.mean, ref, 1e-8);
  const auto mc = sample_distribution(s, SamplingScheme::uniform_sphere(100000, 3, Measure::FlatAngles));
  EXPECT_LE(std::abs(mc.mean - ref), 3 * std::sqrt(mc.variance / 100000.0));
}

TEST(SampleDistribution, RejectsBadSchemes) {
  EXPECT_THROW(sample_distribution(bell(), SamplingScheme::uniform_sphere(999, 1)), DomainError);
  EXPECT_THROW(sample_distribution(bell(), SamplingScheme::gauss_grid(10, 10)), DomainError);
  EXPECT_THROW(sample_distribution(bell(), SamplingScheme::gauss_grid(64, 64), 0.0), DomainError);
  XState bad = bell();
  bad.u = 0.7;
  EXPECT_THROW(sample_distribution(bad, SamplingScheme::gauss_grid(64, 64)), DomainError);
}

TEST(FindPeaks, SeparationRule) {
  EntropyHistogram h;
  h.bins = {{10, 0.2}, {11, 0.1}, {13, 0.15}, {20, 0.3}, {22, 0.25}};
  const auto peaks = find_peaks(h, 5);
  ASSERT_EQ(peaks.size(), 2u);
  EXPECT_EQ(peaks[0].bin, 10);
  EXPECT_EQ(peaks[1].bin, 20);
  EXPECT_NEAR(peaks[1].center, 20.5 * h.bin_width, 1e-15);

  EntropyHistogram plateau;
  plateau.bins = {{3, 0.5}, {4, 0.5}};
  ASSERT_EQ(find_peaks(plateau, 5).size(), 1u);
  EXPECT_EQ(find_peaks(plateau, 5)[0].bin, 3);
  EXPECT_TRUE(find_peaks(EntropyHistogram{}, 5).empty());
}

TEST(GroundStateDistribution, IsotropicPointIsDeltaFunction) {
  const GroundState gs = ground_state(12, 1.0);
  for (int r = 1; r <= 6; ++r) {
    const auto h = sample_distribution(two_site_rdm(gs, 1, 1 + r), SamplingScheme::gauss_grid(64, 64));
    EXPECT_LE(h.variance, 1e-10) << r;
    EXPECT_LE(h.bins.size(), 2u);
  }
}

TEST(MomentsVsDelta, RowsAndErrors) {
  std::size_t seen = 0;
  const auto rows = moments_vs_delta(8, {0.5, 1.0}, {1, 2}, SamplingScheme::gauss_grid(48, 48),
                                     default_provider(), [&](const MomentsRow&) { ++seen; });
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(seen, 4u);
  EXPECT_LE(rows[2].variance, 1e-10);
  for (const auto& r : rows) {
    EXPECT_LE(r.min_c, r.mean);
    EXPECT_LE(r.mean, r.max_c);
    EXPECT_GE(r.discord, 0.0);
  }
  EXPECT_THROW(moments_vs_delta(8, {-1.0}, {1}, SamplingScheme::gauss_grid(48, 48), default_provider()),
               FerromagneticRegimeError);
}

TEST(Export, HistogramCsvAndJson) {
  EntropyHistogram h;
  h.bins = {{2, 0.25}, {4, 0.75}};
  h.mean = 0.02;
  std::ostringstream os;
  write_histogram_csv(h, os);
  EXPECT_EQ(os.str(), "bin_left,bin_right,mass\n0.01,0.015,0.25\n0.015,0.02,0\n0.02,0.025,0.75\n");
  const auto j = nlohmann::json::parse(histogram_summary_json(h));
  EXPECT_EQ(j["mean"].get<double>(), 0.02);
  EXPECT_TRUE(j.contains("variance"));
  EXPECT_TRUE(j.contains("scheme"));
  EXPECT_TRUE(j.contains("seed"));
}
