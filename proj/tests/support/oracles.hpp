#pragma once

// Test-only reference implementations. Everything here works on dense
// matrices and full 2^N state vectors and shares no code path with the
// library routines it is used to check.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "spindiscord/ground_state.hpp"
#include "spindiscord/xstate.hpp"

namespace oracle {

using spindiscord::Complex;
using spindiscord::XState;

/// Valid X state: diagonal from the flat simplex, |x| ≤ √(w1 w2),
/// |y| ≤ √(u v), uniform phases.
inline XState random_xstate(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double cuts[3] = {uni(rng), uni(rng), uni(rng)};
  std::sort(cuts, cuts + 3);
  XState s;
  s.u = cuts[0];
  s.v = cuts[1] - cuts[0];
  s.w1 = cuts[2] - cuts[1];
  s.w2 = 1.0 - cuts[2];
  const double two_pi = 2.0 * std::numbers::pi;
  s.x = std::polar(std::sqrt(s.w1 * s.w2) * uni(rng), two_pi * uni(rng));
  s.y = std::polar(std::sqrt(s.u * s.v) * uni(rng), two_pi * uni(rng));
  return s;
}

inline Eigen::Matrix4cd dense_rho(const XState& s) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = s.u;
  m(1, 1) = s.w1;
  m(2, 2) = s.w2;
  m(3, 3) = s.v;
  m(0, 3) = std::conj(s.y);
  m(3, 0) = s.y;
  m(1, 2) = std::conj(s.x);
  m(2, 1) = s.x;
  return m;
}

template <typename Matrix>
double von_neumann_bits(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.template cast<Complex>());
  double s = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double l = es.eigenvalues()(i);
    if (l > 1e-300) s -= l * std::log2(l);
  }
  return s;
}

/// Conditional entropy from explicit projectors and partial traces.
inline double conditional_entropy(const XState& s, double theta, double phi) {
  const Eigen::Matrix4cd rho = dense_rho(s);
  Eigen::Vector2cd k0(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi));
  Eigen::Vector2cd k1(-std::polar(std::sin(theta / 2), -phi), std::cos(theta / 2));
  double c = 0.0;
  for (const Eigen::Vector2cd& k : {k0, k1}) {
    Eigen::Matrix2cd cond = Eigen::Matrix2cd::Zero();
    for (int a = 0; a < 2; ++a)
      for (int ap = 0; ap < 2; ++ap)
        for (int b = 0; b < 2; ++b)
          for (int bp = 0; bp < 2; ++bp)
            cond(a, ap) += std::conj(k(b)) * rho(2 * a + b, 2 * ap + bp) * k(bp);
    const double p = cond.trace().real();
    if (p > 1e-15) c += p * von_neumann_bits(Eigen::Matrix2cd(cond / p));
  }
  return c;
}

/// Reduced state of qubit B from the dense 4×4 matrix.
inline Eigen::Matrix2cd reduce_b(const Eigen::Matrix4cd& rho) {
  Eigen::Matrix2cd r = Eigen::Matrix2cd::Zero();
  for (int b = 0; b < 2; ++b)
    for (int bp = 0; bp < 2; ++bp)
      for (int a = 0; a < 2; ++a) r(b, bp) += rho(2 * a + b, 2 * a + bp);
  return r;
}

/// Full 2^N amplitude vector; bit b of the index is spin up at site b+1.
inline Eigen::VectorXd embed(const spindiscord::GroundState& gs) {
  Eigen::VectorXd full = Eigen::VectorXd::Zero(Eigen::Index{1} << gs.n_sites());
  for (std::size_t i = 0; i < gs.basis->size(); ++i)
    full(static_cast<Eigen::Index>(gs.basis->state(i))) = gs.amplitudes(static_cast<Eigen::Index>(i));
  return full;
}

/// ρ_ij in basis |s_i s_j> with 0 = up, from ⟨c'|ρ|c⟩ summed over all other
/// spins. Sites are 1-based.
inline Eigen::Matrix4cd partial_trace_pair(const Eigen::VectorXd& full, int n, int i, int j) {
  const std::uint64_t bi = std::uint64_t{1} << (i - 1);
  const std::uint64_t bj = std::uint64_t{1} << (j - 1);
  auto local = [&](std::uint64_t c) {
    const int a = (c & bi) ? 0 : 1;  // up -> |0>
    const int b = (c & bj) ? 0 : 1;
    return 2 * a + b;
  };
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (std::uint64_t c = 0; c < dim; ++c) {
    if (full(static_cast<Eigen::Index>(c)) == 0.0) continue;
    const std::uint64_t rest = c & ~(bi | bj);
    for (std::uint64_t mask : {std::uint64_t{0}, bi, bj, bi | bj}) {
      const std::uint64_t cp = rest | mask;
      rho(local(c), local(cp)) += full(static_cast<Eigen::Index>(c)) * full(static_cast<Eigen::Index>(cp));
    }
  }
  return rho;
}

/// XX-ring (Δ = 0) ground energy from free fermions: N/2 fermions with
/// ε_k = cos k, periodic momenta for an odd fermion number and antiperiodic
/// momenta for an even one.
inline double xx_ring_energy(int n) {
  const int nf = n / 2;
  const double shift = (nf % 2 == 0) ? 0.5 : 0.0;
  std::vector<double> eps;
  for (int m = 0; m < n; ++m) eps.push_back(std::cos(2.0 * std::numbers::pi * (m + shift) / n));
  std::sort(eps.begin(), eps.end());
  double e = 0.0;
  for (int m = 0; m < nf; ++m) e += eps[static_cast<std::size_t>(m)];
  return e;
}

/// Spin operators on the full 2^N space for sum rules.
inline double total_spin_squared_sum(const Eigen::VectorXd& full, int n) {
  // Σ_{i<j} <S_i·S_j> via s^z s^z + (s^+ s^- + s^- s^+)/2.
  double acc = 0.0;
  const std::uint64_t dim = std::uint64_t{1} << n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::uint64_t bi = std::uint64_t{1} << i, bj = std::uint64_t{1} << j;
      for (std::uint64_t c = 0; c < dim; ++c) {
        const double a = full(static_cast<Eigen::Index>(c));
        if (a == 0.0) continue;
        const bool ui = c & bi, uj = c & bj;
        acc += a * a * ((ui == uj) ? 0.25 : -0.25);
        if (ui != uj) acc += 0.5 * a * full(static_cast<Eigen::Index>(c ^ bi ^ bj));
      }
    }
  return acc;
}

}  // namespace oracle
