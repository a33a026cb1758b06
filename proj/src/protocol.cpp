#include "qfc/protocol.hpp"

#include "qfc/error.hpp"

#include <cmath>
#include <numbers>

namespace qfc {

namespace {

constexpr double kAngleSlack = 1e-12;

// exp(i theta sigma_y) = cos(theta) I + i sin(theta) sigma_y, a real rotation.
ComplexMatrix y_rotation(double theta) {
  ComplexMatrix r(2);
  r(0, 0) = std::cos(theta);
  r(0, 1) = std::sin(theta);
  r(1, 0) = -std::sin(theta);
  r(1, 1) = std::cos(theta);
  return r;
}

ComplexMatrix x_projector(double sign) {
  ComplexMatrix p(2);
  p(0, 0) = 0.5;
  p(1, 1) = 0.5;
  p(0, 1) = 0.5 * sign;
  p(1, 0) = 0.5 * sign;
  return p;
}

Marginals marginals_of(const DensityMatrix& rho) {
  return {partial_trace(rho, Subsystem::S), partial_trace(rho, Subsystem::A)};
}

}  // namespace

void ProtocolParams::validate() const {
  if (!std::isfinite(eps_s) || !std::isfinite(eps_a) || !std::isfinite(phi) ||
      !std::isfinite(temperature)) {
    throw DomainError("parameters must be finite numbers");
  }
  if (eps_s < 0.0) throw DomainError("eps_s must be non-negative");
  if (eps_s > eps_a) throw DomainError("eps_s must not exceed eps_a");
  if (eps_a >= 1.0) throw DomainError("eps_a must be below 1");
  if (phi < -kAngleSlack || phi > std::numbers::pi / 2 + kAngleSlack) {
    throw DomainError("phi must lie in [0, pi/2]");
  }
  if (temperature <= 0.0) throw DomainError("temperature must be positive");
}

DensityMatrix thermal_qubit(double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("eps must lie in [0, 1)");
  return DensityMatrix(ComplexMatrix::diagonal({0.5 * (1.0 - eps), 0.5 * (1.0 + eps)}));
}

DensityMatrix initial_state(const ProtocolParams& p) {
  p.validate();
  return tensor(thermal_qubit(p.eps_s), thermal_qubit(p.eps_a));
}

Unitary measurement_unitary(double phi) {
  if (phi < -kAngleSlack || phi > std::numbers::pi / 2 + kAngleSlack) {
    throw DomainError("phi must lie in [0, pi/2]");
  }
  const ComplexMatrix sigma_m =
      Complex(std::sin(phi)) * pauli_x() + Complex(std::cos(phi)) * pauli_z();
  // (sigma_m x sigma_y)^2 = I, so the exponential is a two-term sum.
  const double c = std::cos(std::numbers::pi / 4);
  const double s = std::sin(std::numbers::pi / 4);
  return Unitary(Complex(c) * ComplexMatrix::identity(4) -
                 Complex(0.0, s) * tensor(sigma_m, pauli_y()));
}

Unitary feedback_unitary() {
  const double quarter = std::numbers::pi / 4;
  return Unitary(tensor(y_rotation(quarter), x_projector(+1.0)) +
                 tensor(y_rotation(-quarter), x_projector(-1.0)));
}

DensityMatrix post_measurement_state(const ProtocolParams& p) {
  return measurement_unitary(p.phi).apply(initial_state(p));
}

ProtocolTrace run_protocol(const ProtocolParams& p) {
  DensityMatrix rho0 = initial_state(p);
  DensityMatrix rho_m = measurement_unitary(p.phi).apply(rho0);
  DensityMatrix rho_f = feedback_unitary().apply(rho_m);
  Marginals initial = marginals_of(rho0);
  Marginals measured = marginals_of(rho_m);
  Marginals final = marginals_of(rho_f);
  DensityMatrix rho_reset = tensor(final.s, thermal_qubit(p.eps_a));
  Marginals reset = marginals_of(rho_reset);
  return ProtocolTrace{p,
                       std::move(rho0),
                       std::move(rho_m),
                       std::move(rho_f),
                       std::move(rho_reset),
                       std::move(initial),
                       std::move(measured),
                       std::move(final),
                       std::move(reset)};
}

}  // namespace qfc
