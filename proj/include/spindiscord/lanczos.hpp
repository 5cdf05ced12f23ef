#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "spindiscord/error.hpp"

namespace spindiscord {

struct LanczosOptions {
  /// Convergence: Ritz-value shift below tol and residual below 10 tol. The
  /// default is tight enough that SU(2) ratios of correlators hold to ~1e-11.
  double tol = 1e-12;
  /// Total operator applications before giving up.
  int max_iterations = 5000;
  /// Krylov vectors kept per cycle; 0 picks a size from the dimension.
  int krylov_dim = 0;
  std::uint64_t seed = 1;
};

template <typename Scalar>
struct LanczosResult {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  Real eigenvalue{};
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvector;
  /// ‖A v − λ v‖ recomputed explicitly for the returned pair.
  Real residual{};
  /// Distance to the second Ritz value of the last cycle that had one.
  Real gap = std::numeric_limits<Real>::infinity();
  int iterations = 0;
  int restarts = 0;
  /// Lowest Ritz value after every operator application.
  std::vector<Real> ritz_history;
};

namespace detail {

inline int default_krylov_dim(Eigen::Index dim) {
  if (dim <= 100000) return static_cast<int>(std::min<Eigen::Index>(dim, 300));
  // Keep the Krylov block near 128 MiB for large sectors.
  const Eigen::Index budget = (Eigen::Index{128} << 20) / (dim * 8);
  return static_cast<int>(std::clamp<Eigen::Index>(budget, 20, 100));
}

}  // namespace detail

/// Lowest eigenpair of a Hermitian operator given only through
/// apply(const Vector& in, Vector& out). Explicitly restarted Lanczos with
/// full (twice-iterated Gram–Schmidt) reorthogonalization inside each cycle;
/// each restart begins from the current Ritz vector. The start vector is
/// drawn from a seeded generator, so results are reproducible.
template <typename Scalar, typename Op>
LanczosResult<Scalar> lanczos_lowest(Op&& apply, Eigen::Index dim,
                                     const LanczosOptions& opt = {}) {
  using Real = typename Eigen::NumTraits<Scalar>::Real;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
  using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

  if (dim <= 0) throw DomainError("lanczos_lowest: empty operator");
  const Real tol = static_cast<Real>(opt.tol);
  const int m = static_cast<int>(std::min<Eigen::Index>(
      dim, opt.krylov_dim > 0 ? opt.krylov_dim : detail::default_krylov_dim(dim)));

  LanczosResult<Scalar> res;
  Vector v(dim);
  {
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = static_cast<Scalar>(uni(rng));
    v.normalize();
  }

  Matrix basis(dim, m);
  Vector w(dim);
  Real best_residual = std::numeric_limits<Real>::infinity();
  Real previous = std::numeric_limits<Real>::infinity();

  while (true) {
    std::vector<Real> alpha, beta;
    basis.col(0) = v;
    Eigen::SelfAdjointEigenSolver<RealMatrix> tri;
    int size = 0;
    bool converged = false;

    for (int j = 0; j < m; ++j) {
      apply(basis.col(j).eval(), w);
      ++res.iterations;
      alpha.push_back(std::real(basis.col(j).dot(w)));
      // Two rounds of classical Gram–Schmidt against the whole block.
      for (int pass = 0; pass < 2; ++pass) {
        const Vector h = basis.leftCols(j + 1).adjoint() * w;
        w.noalias() -= basis.leftCols(j + 1) * h;
      }
      const Real b = w.norm();
      size = j + 1;

      RealMatrix t = RealMatrix::Zero(size, size);
      for (int k = 0; k < size; ++k) {
        t(k, k) = alpha[static_cast<std::size_t>(k)];
        if (k + 1 < size) t(k, k + 1) = t(k + 1, k) = beta[static_cast<std::size_t>(k)];
      }
      tri.compute(t);
      const Real theta = tri.eigenvalues()(0);
      const Real estimate = b * std::abs(tri.eigenvectors()(size - 1, 0));
      res.ritz_history.push_back(theta);
      if (size >= 2) res.gap = tri.eigenvalues()(1) - theta;
      best_residual = std::min(best_residual, estimate);

      const bool exhausted = b <= std::numeric_limits<Real>::epsilon() * std::max<Real>(1, std::abs(theta)) * 16;
      if (exhausted || (std::abs(theta - previous) < tol && estimate < 10 * tol)) {
        converged = true;
        break;
      }
      previous = theta;
      if (res.iterations >= opt.max_iterations) break;
      if (j + 1 < m) {
        beta.push_back(b);
        basis.col(j + 1) = w / b;
      }
    }

    // Ritz vector of the lowest Ritz value.
    const RealVector s = tri.eigenvectors().col(0);
    v = basis.leftCols(size) * s.template cast<Scalar>();
    v.normalize();
    const Real theta = tri.eigenvalues()(0);

    if (converged) {
      apply(v, w);
      ++res.iterations;
      const Real residual = (w - static_cast<Scalar>(theta) * v).norm();
      best_residual = std::min(best_residual, residual);
      if (residual < 10 * tol * std::max<Real>(1, std::abs(theta)) || size == dim) {
        res.eigenvalue = theta;
        res.eigenvector = std::move(v);
        res.residual = residual;
        return res;
      }
    }
    if (res.iterations >= opt.max_iterations) {
      std::ostringstream os;
      os << "Lanczos did not converge in " << res.iterations
         << " operator applications (best residual " << best_residual << ")";
      throw ConvergenceError(os.str(), static_cast<double>(best_residual));
    }
    ++res.restarts;
  }
}

}  // namespace spindiscord
