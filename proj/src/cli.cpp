#include "spindiscord/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "spindiscord/correlators.hpp"
#include "spindiscord/error.hpp"
#include "spindiscord/gs_cache.hpp"
#include "spindiscord/scaling.hpp"
#include "spindiscord/table.hpp"

namespace spindiscord::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kCacheEnv = "SPINDISCORD_CACHE";

double snap(double x) { return std::round(x * 1e10) / 1e10; }

struct SolverRecord {
  int n_sites;
  double delta;
  double energy;
  double residual;
  std::size_t dimension;
};

/// Ground states for one run, optionally backed by the disk cache.
class Solver {
 public:
  explicit Solver(const RunConfig& cfg) : cfg_(cfg) {
    options_.tol = cfg.tol;
    options_.seed = cfg.seed;
    if (cfg.use_cache) cache_.emplace(cfg.cache_dir);
  }

  GroundState operator()(int n_sites, double delta) {
    GroundState gs = cache_ ? cache_->get_or_solve(n_sites, delta, options_)
                            : ground_state(n_sites, delta, options_);
    records_.push_back({n_sites, delta, gs.energy, gs.residual, gs.basis->size()});
    return gs;
  }

  GroundStateProvider provider() {
    return [this](int n, double d) { return (*this)(n, d); };
  }

  const std::vector<SolverRecord>& records() const { return records_; }

 private:
  const RunConfig& cfg_;
  GroundStateOptions options_;
  std::optional<GroundStateCache> cache_;
  std::vector<SolverRecord> records_;
};

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

json config_json(const RunConfig& cfg) {
  json j;
  j["command"] = cfg.command;
  j["n"] = cfg.n_sites;
  j["deltas"] = cfg.deltas;
  j["rs"] = cfg.rs;
  j["seed"] = cfg.seed;
  j["tol"] = cfg.tol;
  j["quadrature"] = std::to_string(cfg.quad_theta) + "x" + std::to_string(cfg.quad_phi);
  j["mc_samples"] = cfg.mc_samples;
  j["measure"] = to_string(cfg.measure);
  j["bin_width"] = cfg.bin_width;
  j["cache"] = cfg.use_cache;
  return j;
}

SamplingScheme scheme_of(const RunConfig& cfg) {
  if (cfg.mc_samples > 0) return SamplingScheme::uniform_sphere(cfg.mc_samples, cfg.seed, cfg.measure);
  return SamplingScheme::gauss_grid(cfg.quad_theta, cfg.quad_phi, cfg.measure);
}

const char* basis_name(std::optional<ChosenTheta> c) { return c ? to_string(*c) : "NONE"; }

// ---------------------------------------------------------------------------
// Figure tables. Each builder appends rows to `t` as they are produced so a
// failing sweep still leaves the finished rows behind.

void build_ground_state(const RunConfig& cfg, Solver& solver, Table& t) {
  t.columns = {"n", "delta", "energy", "residual", "dimension"};
  for (double delta : cfg.deltas) {
    const GroundState gs = solver(cfg.n_sites, delta);
    t.add_row({std::int64_t{cfg.n_sites}, delta, gs.energy, gs.residual,
               static_cast<std::int64_t>(gs.basis->size())});
  }
}

void build_fig1(const RunConfig& cfg, Table& t) {
  t.columns = {"t", "nn", "far", "far_kt", "gamma_nn", "gamma_far"};
  ScalingParams p;
  if (!cfg.rs.empty()) p.r = cfg.rs.front();
  ScalingParams kt = p;
  kt.form = ScalingParams::Form::KosterlitzThouless;
  std::vector<double> ts;
  for (int i = 0; i <= 100; ++i) ts.push_back(snap(0.5 + 0.01 * i));
  const auto nn = normalized_discord_curve(p, ts, PairKind::NearestNeighbour);
  const auto far = normalized_discord_curve(p, ts, PairKind::Far);
  std::vector<double> kt_ts;
  for (double x : ts)
    if (x > 1.0) kt_ts.push_back(x);
  const auto far_kt = normalized_discord_curve(kt, kt_ts, PairKind::Far);
  std::size_t k = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Cell kt_cell = std::monostate{};
    if (ts[i] > 1.0) kt_cell = far_kt[k++].normalized;
    t.add_row({ts[i], nn[i].normalized, far[i].normalized, kt_cell, nn[i].gamma, far[i].gamma});
  }
}

void build_fig2(const RunConfig& cfg, Solver& solver, Table& t) {
  t.columns = {"delta", "r", "discord", "gamma_d", "k", "basis"};
  for (double delta : cfg.deltas) {
    if (delta <= -1.0) {
      for (int r = 1; r <= cfg.n_sites / 2; ++r)
        t.add_row({delta, std::int64_t{r}, 0.0, std::monostate{}, std::monostate{}, "NONE"});
      continue;
    }
    const GroundState gs = solver(cfg.n_sites, delta);
    for (const auto& e : discord_profile_vs_r(gs))
      t.add_row({delta, std::int64_t{e.r}, e.discord, e.gamma_d, cell(e.k),
                 to_string(e.chosen_theta)});
  }
}

void build_fig3(const RunConfig& cfg, Solver& solver, Table& t) {
  t.columns = {"delta", "r", "discord", "k", "basis"};
  discord_profile_vs_delta(cfg.n_sites, cfg.deltas, cfg.rs, solver.provider(),
                           [&](const DeltaProfileRow& row) {
                             t.add_row({row.delta, std::int64_t{row.r}, row.discord, cell(row.k),
                                        basis_name(row.chosen_theta)});
                           });
}

void build_fig4(const RunConfig& cfg, Solver& solver, Table& t) {
  t.columns = {"delta", "r", "gamma_d", "gamma_o", "k"};
  for (double delta : cfg.deltas) {
    const GroundState gs = solver(cfg.n_sites, delta);
    for (int r : cfg.rs) {
      const PairCorrelations pc = pair_correlations(gs, 1, 1 + r);
      std::optional<double> k;
      if (std::abs(pc.gamma_d) >= 1e-14) k = pc.gamma_o.real() / pc.gamma_d;
      t.add_row({delta, std::int64_t{r}, pc.gamma_d, pc.gamma_o.real(), cell(k)});
    }
  }
}

EntropyHistogram build_fig5(const RunConfig& cfg, Solver& solver, Table& t) {
  t.columns = {"bin_left", "bin_right", "mass"};
  const GroundState gs = solver(cfg.n_sites, cfg.deltas.front());
  const XState s = two_site_rdm(gs, 1, 1 + cfg.rs.front());
  EntropyHistogram h = sample_distribution(s, scheme_of(cfg), cfg.bin_width);
  const long lo = h.bins.begin()->first;
  const long hi = h.bins.rbegin()->first;
  for (long b = lo; b <= hi; ++b) {
    const auto it = h.bins.find(b);
    t.add_row({static_cast<double>(b) * h.bin_width, static_cast<double>(b + 1) * h.bin_width,
               it == h.bins.end() ? 0.0 : it->second});
  }
  return h;
}

void build_fig6(const RunConfig& cfg, Solver& solver, Table& t) {
  t.columns = {"delta", "r", "mean", "variance", "min", "max", "discord"};
  moments_vs_delta(cfg.n_sites, cfg.deltas, cfg.rs, scheme_of(cfg), solver.provider(),
                   [&](const MomentsRow& row) {
                     t.add_row({row.delta, std::int64_t{row.r}, row.mean, row.variance, row.min_c,
                                row.max_c, row.discord});
                   });
}

// ---------------------------------------------------------------------------

struct Defaults {
  std::vector<double> deltas;
  std::vector<int> rs;
};

Defaults defaults_for(const std::string& cmd, int n_sites) {
  if (cmd == "ground-state") return {{1.0}, {}};
  if (cmd == "fig1") return {{}, {20}};
  if (cmd == "fig2") return {{-0.5, 0.0, 0.5, 1.0, 2.0}, {}};
  if (cmd == "fig3") {
    std::vector<int> rs{1, 2, 4};
    if (n_sites >= 16) rs.push_back(8);
    return {parse_delta_range("-1.5:2.5:0.05"), rs};
  }
  if (cmd == "fig4") return {parse_delta_range("-0.95:2.5:0.05"), {1, 3, 5}};
  if (cmd == "fig5") return {{1.0}, {1}};
  if (cmd == "fig6") return {parse_delta_range("0:2:0.1"), {1, 2, 3, 4}};
  return {};
}

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void check_config(const RunConfig& cfg) {
  const bool needs_solver = cfg.command != "fig1";
  if (needs_solver && (cfg.n_sites < 4 || cfg.n_sites % 2 != 0 || cfg.n_sites > kMaxSites)) {
    std::ostringstream os;
    os << "--n " << cfg.n_sites << " is not supported: N must be even, N >= 4 and N <= " << kMaxSites;
    throw UsageError(os.str());
  }
  if (!(cfg.tol > 0.0 && cfg.tol <= 1e-4)) throw UsageError("--tol must lie in (0, 1e-4]");
  if (cfg.deltas.empty() && cfg.command != "fig1") throw UsageError("empty delta grid");
  const bool analytic_ok = cfg.command == "fig2" || cfg.command == "fig3";
  for (double d : cfg.deltas) {
    if (d <= -1.0 && !analytic_ok) {
      FerromagneticRegimeError e(d);
      throw UsageError(e.what());
    }
  }
  for (int r : cfg.rs) {
    if (cfg.command == "fig1") {
      if (r < 1) throw UsageError("--r must be >= 1");
    } else if (r < 1 || r >= cfg.n_sites) {
      std::ostringstream os;
      os << "separation " << r << " outside [1, " << cfg.n_sites - 1 << "]";
      throw UsageError(os.str());
    }
  }
  if ((cfg.command == "fig3" || cfg.command == "fig4" || cfg.command == "fig6" ||
       cfg.command == "fig5") &&
      cfg.rs.empty())
    throw UsageError("empty separation list");
  if (cfg.command == "fig5" && cfg.deltas.size() != 1)
    throw UsageError("fig5 takes a single --delta");
  if (cfg.command == "fig5" && cfg.rs.size() != 1) throw UsageError("fig5 takes a single --r");
  if ((cfg.command == "fig5" || cfg.command == "fig6") && cfg.mc_samples == 0 &&
      cfg.quad_theta * cfg.quad_phi < 1000)
    throw UsageError("--quadrature needs at least 1000 points");
  if ((cfg.command == "fig5" || cfg.command == "fig6") && cfg.mc_samples > 0 && cfg.mc_samples < 1000)
    throw UsageError("--mc needs at least 1000 samples");
}

void emit(const RunConfig& cfg, const Table& t, bool complete, const Solver* solver,
          const EntropyHistogram* hist, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!cfg.out.empty() && cfg.out != "-") {
    file.open(cfg.out, std::ios::trunc);
    if (!file) throw UsageError("cannot open output file " + cfg.out);
    os = &file;
  }
  if (cfg.format == Format::Csv) {
    CsvOptions opt;
    opt.complete = complete;
    if (!cfg.deterministic) opt.preamble = "spindiscord " + cfg.command + " generated " + timestamp();
    write_csv(t, *os, opt);
    return;
  }
  json j;
  j["command"] = cfg.command;
  if (!cfg.deterministic) j["generated"] = timestamp();
  j["config"] = config_json(cfg);
  j["columns"] = t.columns;
  j["rows"] = to_json_rows(t);
  if (solver) {
    auto runs = json::array();
    for (const auto& r : solver->records()) {
      json e;
      e["n"] = r.n_sites;
      e["delta"] = r.delta;
      e["energy"] = r.energy;
      e["residual"] = r.residual;
      e["dimension"] = r.dimension;
      e["tol"] = cfg.tol;
      e["seed"] = cfg.seed;
      runs.push_back(std::move(e));
    }
    j["solver"] = std::move(runs);
  }
  if (hist) j["summary"] = json::parse(histogram_summary_json(*hist));
  j["complete"] = complete;
  *os << j.dump(2) << '\n';
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& delta_range, std::string& quadrature,
                std::string& rs_list, std::string& format, std::string& measure) {
  sub->add_option("--n", cfg.n_sites, "number of ring sites (even, >= 4)");
  sub->add_option("--delta", cfg.deltas, "anisotropy value(s)")->expected(1, -1);
  sub->add_option("--delta-range", delta_range, "inclusive grid a:b:step");
  sub->add_option("--r", cfg.rs, "pair separation(s)")->expected(1, -1);
  sub->add_option("--rs", rs_list, "comma-separated separations");
  sub->add_option("--out", cfg.out, "output file (default stdout)");
  sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--cache-dir", cfg.cache_dir, "ground-state cache directory");
  sub->add_flag("--no-cache", "disable the ground-state cache");
  sub->add_option("--seed", cfg.seed, "seed for the solver start vector and Monte Carlo sampling");
  sub->add_option("--tol", cfg.tol, "solver tolerance in (0, 1e-4]");
  sub->add_option("--quadrature", quadrature, "product quadrature NxM (theta x phi)");
  sub->add_option("--mc", cfg.mc_samples, "Monte Carlo sample count (replaces quadrature)");
  sub->add_option("--measure", measure, "solid (sin theta dtheta dphi) or flat (dtheta dphi)")
      ->check(CLI::IsMember({"solid", "flat"}));
  sub->add_option("--bin-width", cfg.bin_width, "histogram bin width");
  sub->add_flag("--deterministic", cfg.deterministic, "omit the timestamp line");
}

}  // namespace

std::vector<double> parse_delta_range(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --delta-range '" + text + "': expected a:b:step");
    }
  }
  if (parts.size() != 3) throw std::invalid_argument("bad --delta-range '" + text + "': expected a:b:step");
  const double a = parts[0], b = parts[1], step = parts[2];
  if (!(step > 0.0)) throw std::invalid_argument("--delta-range step must be positive");
  if (b < a) throw std::invalid_argument("--delta-range is empty (stop < start)");
  const auto count = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) out.push_back(snap(a + static_cast<double>(i) * step));
  return out;
}

std::pair<std::size_t, std::size_t> parse_quadrature(const std::string& text) {
  const auto x = text.find_first_of("xX");
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    const long a = std::stol(text.substr(0, x));
    const long b = std::stol(text.substr(x + 1));
    if (a < 2 || b < 1) throw std::invalid_argument(text);
    return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad --quadrature '" + text + "': expected NxM");
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum discord and conditional-entropy distributions for XXZ rings", "spindiscord"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string delta_range, quadrature, rs_list, format = "csv", measure = "solid";

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"ground-state", "solve for the Sz=0 ground state and print its energy"},
      {"fig1", "normalized discord near a critical point (scaling model)"},
      {"fig2", "discord vs separation r"},
      {"fig3", "discord vs anisotropy for several separations"},
      {"fig4", "k = Γᴼ/Γᴰ vs anisotropy"},
      {"fig5", "histogram of conditional entropy over measurement bases"},
      {"fig6", "mean and variance of the conditional entropy vs anisotropy"}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, cfg, delta_range, quadrature, rs_list, format, measure);
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App* active = nullptr;
  for (auto* s : subs)
    if (s->parsed()) active = s;
  cfg.command = active->get_name();

  std::unique_ptr<Solver> solver;
  Table table;
  EntropyHistogram hist;
  bool have_hist = false;
  try {
    if (active->count("--no-cache")) cfg.use_cache = false;
    if (active->count("--cache-dir") == 0) {
      if (const char* env = std::getenv(kCacheEnv); env && *env) cfg.cache_dir = env;
    }
    cfg.format = format == "json" ? Format::Json : Format::Csv;
    cfg.measure = measure == "flat" ? Measure::FlatAngles : Measure::SolidAngle;
    if (!quadrature.empty()) std::tie(cfg.quad_theta, cfg.quad_phi) = parse_quadrature(quadrature);
    if (!delta_range.empty()) {
      if (!cfg.deltas.empty()) throw UsageError("use either --delta or --delta-range");
      cfg.deltas = parse_delta_range(delta_range);
    }
    if (!rs_list.empty()) {
      if (!cfg.rs.empty()) throw UsageError("use either --r or --rs");
      std::stringstream ss(rs_list);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int r = 0;
        try {
          r = std::stoi(item, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != item.size() || item.empty()) throw UsageError("bad --rs entry '" + item + "'");
        cfg.rs.push_back(r);
      }
    }
    const Defaults def = defaults_for(cfg.command, cfg.n_sites);
    if (cfg.deltas.empty()) cfg.deltas = def.deltas;
    if (cfg.rs.empty()) cfg.rs = def.rs;
    if (!(cfg.bin_width > 0.0)) throw UsageError("--bin-width must be positive");
    check_config(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cfg.command != "fig1" && cfg.n_sites >= 20)
    err << "warning: N=" << cfg.n_sites << " has a sector of dimension "
        << binomial(cfg.n_sites, cfg.n_sites / 2)
        << "; expect minutes of runtime and several hundred MB of memory\n";

  try {
    if (cfg.command != "fig1") solver = std::make_unique<Solver>(cfg);
    if (cfg.command == "ground-state")
      build_ground_state(cfg, *solver, table);
    else if (cfg.command == "fig1")
      build_fig1(cfg, table);
    else if (cfg.command == "fig2")
      build_fig2(cfg, *solver, table);
    else if (cfg.command == "fig3")
      build_fig3(cfg, *solver, table);
    else if (cfg.command == "fig4")
      build_fig4(cfg, *solver, table);
    else if (cfg.command == "fig5") {
      hist = build_fig5(cfg, *solver, table);
      have_hist = true;
    } else if (cfg.command == "fig6")
      build_fig6(cfg, *solver, table);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    try {
      if (!table.columns.empty()) emit(cfg, table, false, solver.get(), nullptr, out);
    } catch (const std::exception& e2) {
      err << "error: " << e2.what() << '\n';
    }
    return kNumerical;
  }

  try {
    emit(cfg, table, true, solver.get(), have_hist ? &hist : nullptr, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace spindiscord::cli
