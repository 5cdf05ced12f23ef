#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <stdexcept>

#include "spindiscord/sector_basis.hpp"

namespace spindiscord {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// out = H psi for the periodic XXZ ring
///   H = Σ_i (s^x_i s^x_{i+1} + s^y_i s^y_{i+1} + Δ s^z_i s^z_{i+1}),  s = σ/2,
/// restricted to one Sz sector. Matrix-free: every row is gathered from the
/// bond flips of its own configuration, so rows can be computed independently.
template <typename DerivedIn, typename DerivedOut>
void apply_hamiltonian(const SectorBasis& basis, double delta,
                       const Eigen::MatrixBase<DerivedIn>& psi,
                       const Eigen::MatrixBase<DerivedOut>& out_) {
  using Scalar = typename DerivedOut::Scalar;
  auto& out = const_cast<Eigen::MatrixBase<DerivedOut>&>(out_);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  if (psi.size() != dim || out.size() != dim)
    throw std::invalid_argument("apply_hamiltonian: vector size does not match sector dimension");

  const int n = basis.n_sites();
  const Scalar quarter_delta = static_cast<Scalar>(delta / 4.0);
  const Scalar half = static_cast<Scalar>(0.5);
  for (Eigen::Index row = 0; row < dim; ++row) {
    const Config c = basis.state(static_cast<std::size_t>(row));
    Scalar diag(0);
    Scalar acc(0);
    for (int b = 0; b < n; ++b) {
      const int next = (b + 1 == n) ? 0 : b + 1;
      const Config mask = (Config{1} << b) | (Config{1} << next);
      const Config pair = c & mask;
      if (pair == 0 || pair == mask) {
        diag += quarter_delta;
      } else {
        diag -= quarter_delta;
        acc += half * psi(static_cast<Eigen::Index>(basis.index_of(c ^ mask)));
      }
    }
    out(row) = diag * psi(row) + acc;
  }
}

template <typename Derived>
VectorX<typename Derived::Scalar> apply_hamiltonian(const SectorBasis& basis, double delta,
                                                    const Eigen::MatrixBase<Derived>& psi) {
  VectorX<typename Derived::Scalar> out(psi.size());
  apply_hamiltonian(basis, delta, psi, out);
  return out;
}

/// Largest sector dimension the dense routines accept.
inline constexpr std::size_t kMaxDenseDimension = 4000;

/// Dense sector Hamiltonian assembled element by element from configuration
/// pairs (does not go through apply_hamiltonian).
Eigen::MatrixXd dense_hamiltonian(const SectorBasis& basis, double delta);

/// All eigenvalues (ascending) of the Sz=0 sector of an n_sites ring.
Eigen::VectorXd dense_spectrum_oracle(int n_sites, double delta);

}  // namespace spindiscord
