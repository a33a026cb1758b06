#pragma once

// Seeded random states and unitaries for property tests.

#include "qfc/densmat.hpp"
#include "qfc/protocol.hpp"

#include <Eigen/QR>

#include <cmath>
#include <numbers>
#include <random>

namespace qfc::test {

inline constexpr double kHalfPi = std::numbers::pi / 2;

inline Eigen::MatrixXcd gaussian_matrix(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) g(r, c) = Complex(n(rng), n(rng));
  }
  return g;
}

// Haar-distributed: QR of a Ginibre matrix with the phases of R divided out.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, Eigen::Index dim) {
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(gaussian_matrix(rng, dim));
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (Eigen::Index k = 0; k < dim; ++k) q.col(k) *= r(k, k) / std::abs(r(k, k));
  return ComplexMatrix(q);
}

// Full-rank mixed state G G^dagger / tr.
inline DensityMatrix random_state(std::mt19937_64& rng, Eigen::Index dim) {
  const Eigen::MatrixXcd g = gaussian_matrix(rng, dim);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(ComplexMatrix(rho));
}

inline ProtocolParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double eps_s = 0.95 * u(rng);
  const double eps_a = eps_s + (0.98 - eps_s) * u(rng);
  return {eps_s, eps_a, kHalfPi * u(rng), 1.0};
}

}  // namespace qfc::test
