#include "spindiscord/ground_state.hpp"

#include <sstream>

#include "spindiscord/error.hpp"
#include "spindiscord/lanczos.hpp"
#include "spindiscord/xxz.hpp"

namespace spindiscord {

namespace {

void check_ring(int n_sites, double delta) {
  if (n_sites < 4 || n_sites % 2 != 0 || n_sites > kMaxSites) {
    std::ostringstream os;
    os << "unsupported ring size " << n_sites << ": need even N >= 4 and N <= " << kMaxSites;
    throw UnsupportedError(os.str());
  }
  if (!(delta > -1.0)) throw FerromagneticRegimeError(delta);
}

}  // namespace

double residual_norm(const SectorBasis& basis, double delta, const Eigen::VectorXd& psi,
                     double energy) {
  return (apply_hamiltonian(basis, delta, psi) - energy * psi).norm();
}

GroundState make_ground_state(std::shared_ptr<const SectorBasis> basis, double delta,
                              Eigen::VectorXd amplitudes, double tol, std::uint64_t seed) {
  GroundState gs;
  amplitudes.normalize();
  if (amplitudes(0) < 0.0) amplitudes = -amplitudes;
  const Eigen::VectorXd h_psi = apply_hamiltonian(*basis, delta, amplitudes);
  gs.energy = amplitudes.dot(h_psi);
  gs.residual = (h_psi - gs.energy * amplitudes).norm();
  gs.basis = std::move(basis);
  gs.delta = delta;
  gs.amplitudes = std::move(amplitudes);
  gs.tol = tol;
  gs.seed = seed;
  return gs;
}

GroundState ground_state(int n_sites, double delta, const GroundStateOptions& options) {
  check_ring(n_sites, delta);
  auto basis = std::make_shared<const SectorBasis>(n_sites, n_sites / 2);

  LanczosOptions lopt;
  lopt.tol = options.tol;
  lopt.max_iterations = options.max_iterations;
  lopt.krylov_dim = options.krylov_dim;
  lopt.seed = options.seed;
  const auto& b = *basis;
  auto result = lanczos_lowest<double>(
      [&](const Eigen::VectorXd& in, Eigen::VectorXd& out) { apply_hamiltonian(b, delta, in, out); },
      static_cast<Eigen::Index>(basis->size()), lopt);

  if (result.gap <= kMinGap) {
    std::ostringstream os;
    os << "ground state of N=" << n_sites << ", delta=" << delta
       << " is degenerate within " << kMinGap << " (gap " << result.gap << ")";
    throw ConvergenceError(os.str(), result.residual);
  }
  return make_ground_state(std::move(basis), delta, std::move(result.eigenvector), options.tol,
                           options.seed);
}

GroundState ground_state(int n_sites, double delta, double tol) {
  GroundStateOptions opt;
  opt.tol = tol;
  return ground_state(n_sites, delta, opt);
}

}  // namespace spindiscord
