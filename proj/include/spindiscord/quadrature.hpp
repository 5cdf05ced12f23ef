#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace spindiscord {

template <typename Scalar>
struct QuadratureRule {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nodes;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;
};

/// n-point Gauss–Legendre rule on [-1, 1] (Newton iteration on P_n).
template <typename Scalar = double>
QuadratureRule<Scalar> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  QuadratureRule<Scalar> rule{Eigen::Matrix<Scalar, Eigen::Dynamic, 1>(n),
                              Eigen::Matrix<Scalar, Eigen::Dynamic, 1>(n)};
  const Scalar pi = std::numbers::pi_v<Scalar>;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    Scalar x = std::cos(pi * (Scalar(i) + Scalar(0.75)) / (Scalar(n) + Scalar(0.5)));
    Scalar dp(0);
    for (int it = 0; it < 100; ++it) {
      Scalar p0(1), p1 = x;
      for (int k = 2; k <= n; ++k) {
        const Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / Scalar(k);
        p0 = p1;
        p1 = p2;
      }
      const Scalar pn = n == 1 ? x : p1;
      const Scalar pnm1 = n == 1 ? Scalar(1) : p0;
      dp = Scalar(n) * (x * pn - pnm1) / (x * x - Scalar(1));
      const Scalar dx = pn / dp;
      x -= dx;
      if (std::abs(dx) <= std::numeric_limits<Scalar>::epsilon() * 4) break;
    }
    // Recompute the derivative at the converged node.
    Scalar p0(1), p1 = x;
    for (int k = 2; k <= n; ++k) {
      const Scalar p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / Scalar(k);
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? Scalar(1) : Scalar(n) * (x * p1 - p0) / (x * x - Scalar(1));
    const Scalar w = Scalar(2) / ((Scalar(1) - x * x) * dp * dp);
    rule.nodes(i) = -x;
    rule.nodes(n - 1 - i) = x;
    rule.weights(i) = w;
    rule.weights(n - 1 - i) = w;
  }
  return rule;
}

}  // namespace spindiscord
