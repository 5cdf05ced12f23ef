#include "spindiscord/xxz.hpp"

#include <bit>
#include <sstream>

#include "spindiscord/error.hpp"

namespace spindiscord {

namespace {

bool adjacent_on_ring(int a, int b, int n) {
  const int d = a > b ? a - b : b - a;
  return d == 1 || d == n - 1;
}

}  // namespace

Eigen::MatrixXd dense_hamiltonian(const SectorBasis& basis, double delta) {
  if (basis.size() > kMaxDenseDimension) {
    std::ostringstream os;
    os << "sector dimension " << basis.size() << " too large for dense diagonalization (max "
       << kMaxDenseDimension << ")";
    throw UnsupportedError(os.str());
  }
  const int n = basis.n_sites();
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    const Config ca = basis.state(static_cast<std::size_t>(a));
    // <a|H|a>: +Δ/4 per parallel bond, -Δ/4 per antiparallel bond.
    for (int i = 0; i < n; ++i) {
      const int j = (i + 1) % n;
      const bool si = (ca >> i) & 1U;
      const bool sj = (ca >> j) & 1U;
      h(a, a) += (si == sj ? 0.25 : -0.25) * delta;
    }
    for (Eigen::Index b = 0; b < dim; ++b) {
      if (a == b) continue;
      const Config diff = ca ^ basis.state(static_cast<std::size_t>(b));
      if (std::popcount(diff) != 2) continue;
      const int lo = std::countr_zero(diff);
      const int hi = 63 - std::countl_zero(diff);
      if (adjacent_on_ring(lo, hi, n)) h(a, b) = 0.5;
    }
  }
  return h;
}

Eigen::VectorXd dense_spectrum_oracle(int n_sites, double delta) {
  const SectorBasis basis(n_sites, n_sites / 2);
  const Eigen::MatrixXd h = dense_hamiltonian(basis, delta);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

}  // namespace spindiscord
