#include "spindiscord/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "spindiscord/error.hpp"
#include "spindiscord/quadrature.hpp"
#include "spindiscord/table.hpp"

namespace spindiscord {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMinPoints = 1000;

// SplitMix64 finaliser; a pure function of the counter so every sample is
// reproducible independently of evaluation order.
std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_uniform(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

struct WeightedPoint {
  double theta;
  double phi;
  double weight;
};

std::vector<WeightedPoint> make_points(const SamplingScheme& sc) {
  std::vector<WeightedPoint> pts;
  if (sc.kind == SamplingScheme::Kind::UniformSphere) {
    pts.reserve(sc.n_samples);
    const double w = 1.0 / static_cast<double>(sc.n_samples);
    for (std::size_t i = 0; i < sc.n_samples; ++i) {
      const std::uint64_t base = splitmix64(sc.seed) ^ (2 * static_cast<std::uint64_t>(i));
      const double a = unit_uniform(splitmix64(base));
      const double b = unit_uniform(splitmix64(base + 1));
      const double theta = sc.measure == Measure::SolidAngle ? std::acos(1.0 - 2.0 * a) : kPi * a;
      pts.push_back({theta, 2.0 * kPi * b, w});
    }
    return pts;
  }

  const auto rule = gauss_legendre<double>(static_cast<int>(sc.n_theta));
  const double wphi = 1.0 / static_cast<double>(sc.n_phi);
  pts.reserve(sc.n_theta * sc.n_phi);
  for (std::size_t i = 0; i < sc.n_theta; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    // Solid angle: Gauss nodes in cos θ. Flat: Gauss nodes in θ itself.
    const double theta = sc.measure == Measure::SolidAngle
                             ? std::acos(rule.nodes(ii))
                             : kPi * (rule.nodes(ii) + 1.0) / 2.0;
    const double wt = rule.weights(ii) / 2.0;
    for (std::size_t j = 0; j < sc.n_phi; ++j)
      pts.push_back({theta, 2.0 * kPi * static_cast<double>(j) * wphi, wt * wphi});
  }
  return pts;
}

}  // namespace

const char* to_string(Measure m) noexcept {
  return m == Measure::SolidAngle ? "solid-angle" : "flat-angles";
}

SamplingScheme SamplingScheme::uniform_sphere(std::size_t n, std::uint64_t seed, Measure measure) {
  SamplingScheme s;
  s.kind = Kind::UniformSphere;
  s.n_samples = n;
  s.seed = seed;
  s.measure = measure;
  return s;
}

SamplingScheme SamplingScheme::gauss_grid(std::size_t n_theta, std::size_t n_phi, Measure measure) {
  SamplingScheme s;
  s.kind = Kind::GaussGrid;
  s.n_theta = n_theta;
  s.n_phi = n_phi;
  s.measure = measure;
  return s;
}

std::size_t SamplingScheme::point_count() const noexcept {
  return kind == Kind::UniformSphere ? n_samples : n_theta * n_phi;
}

std::string SamplingScheme::describe() const {
  std::ostringstream os;
  if (kind == Kind::UniformSphere)
    os << "uniform_sphere(" << n_samples << ")";
  else
    os << "gauss_grid(" << n_theta << "x" << n_phi << ")";
  os << "/" << to_string(measure);
  return os.str();
}

double EntropyHistogram::total_mass() const {
  double m = 0.0;
  for (const auto& [bin, mass] : bins) m += mass;
  return m;
}

double EntropyHistogram::binned_mean() const {
  double m = 0.0;
  for (const auto& [bin, mass] : bins) m += mass * (static_cast<double>(bin) + 0.5) * bin_width;
  return m / total_mass();
}

double EntropyHistogram::binned_variance() const {
  const double mu = binned_mean();
  double v = 0.0;
  for (const auto& [bin, mass] : bins) {
    const double c = (static_cast<double>(bin) + 0.5) * bin_width - mu;
    v += mass * c * c;
  }
  return v / total_mass();
}

EntropyHistogram sample_distribution(const XState& s, const SamplingScheme& scheme,
                                     double bin_width) {
  validate(s);
  if (scheme.point_count() < kMinPoints ||
      (scheme.kind == SamplingScheme::Kind::GaussGrid && (scheme.n_theta < 2 || scheme.n_phi < 1))) {
    std::ostringstream os;
    os << "sampling scheme " << scheme.describe() << " has fewer than " << kMinPoints << " points";
    throw DomainError(os.str());
  }
  if (!(bin_width > 0.0)) throw DomainError("histogram bin width must be positive");

  const auto points = make_points(scheme);
  std::vector<double> values(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    values[i] = conditional_entropy(s, {points[i].theta, points[i].phi});

  EntropyHistogram h;
  h.bin_width = bin_width;
  h.scheme = scheme;
  h.n_samples = points.size();
  h.min_c = std::numeric_limits<double>::infinity();
  h.max_c = -std::numeric_limits<double>::infinity();
  double total = 0.0;
  double mean = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    total += points[i].weight;
    mean += points[i].weight * values[i];
    h.min_c = std::min(h.min_c, values[i]);
    h.max_c = std::max(h.max_c, values[i]);
    h.bins[static_cast<long>(std::floor(values[i] / bin_width))] += points[i].weight;
  }
  h.mean = mean / total;
  double var = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = values[i] - h.mean;
    var += points[i].weight * d * d;
  }
  h.variance = var / total;
  for (auto& [bin, mass] : h.bins) mass /= total;
  return h;
}

std::vector<Peak> find_peaks(const EntropyHistogram& h, int min_separation) {
  std::vector<Peak> peaks;
  if (h.bins.empty()) return peaks;
  const long lo = h.bins.begin()->first;
  const long hi = h.bins.rbegin()->first;
  auto mass_at = [&](long b) {
    const auto it = h.bins.find(b);
    return it == h.bins.end() ? 0.0 : it->second;
  };
  for (long b = lo; b <= hi; ++b) {
    const double m = mass_at(b);
    if (m <= 0.0) continue;
    bool is_peak = true;
    for (long o = b - min_separation; o <= b + min_separation && is_peak; ++o) {
      if (o == b) continue;
      const double other = mass_at(o);
      // Earlier bins of an equal plateau win.
      if (other > m || (other == m && o < b)) is_peak = false;
    }
    if (is_peak) peaks.push_back({b, (static_cast<double>(b) + 0.5) * h.bin_width, m});
  }
  return peaks;
}

std::vector<MomentsRow> moments_vs_delta(int n_sites, const std::vector<double>& deltas,
                                         const std::vector<int>& rs, const SamplingScheme& scheme,
                                         const GroundStateProvider& provider,
                                         const std::function<void(const MomentsRow&)>& on_row) {
  std::vector<MomentsRow> rows;
  for (double delta : deltas) {
    if (!(delta > -1.0)) throw FerromagneticRegimeError(delta);
    const GroundState gs = provider(n_sites, delta);
    for (int r : rs) {
      const XState s = two_site_rdm(gs, 1, 1 + r);
      const EntropyHistogram h = sample_distribution(s, scheme);
      MomentsRow row{delta, r, h.mean, h.variance, h.min_c, h.max_c, discord(s).discord};
      rows.push_back(row);
      if (on_row) on_row(row);
    }
  }
  return rows;
}

void write_histogram_csv(const EntropyHistogram& h, std::ostream& os) {
  os << "bin_left,bin_right,mass\n";
  if (h.bins.empty()) return;
  const long lo = h.bins.begin()->first;
  const long hi = h.bins.rbegin()->first;
  for (long b = lo; b <= hi; ++b) {
    const auto it = h.bins.find(b);
    const double mass = it == h.bins.end() ? 0.0 : it->second;
    os << format_double(static_cast<double>(b) * h.bin_width) << ','
       << format_double(static_cast<double>(b + 1) * h.bin_width) << ',' << format_double(mass) << '\n';
  }
}

std::string histogram_summary_json(const EntropyHistogram& h, int indent) {
  nlohmann::ordered_json j;
  j["mean"] = h.mean;
  j["variance"] = h.variance;
  j["min"] = h.min_c;
  j["max"] = h.max_c;
  j["scheme"] = h.scheme.describe();
  j["measure"] = to_string(h.scheme.measure);
  if (h.scheme.kind == SamplingScheme::Kind::UniformSphere)
    j["seed"] = h.scheme.seed;
  else
    j["seed"] = nullptr;
  j["bin_width"] = h.bin_width;
  j["n_samples"] = h.n_samples;
  return j.dump(indent);
}

}  // namespace spindiscord
