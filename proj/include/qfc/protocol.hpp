#pragma once

// One iteration of the feedback cooling cycle on a register qubit S and an
// ancilla qubit A:
//
//   rho0 = thermal(eps_s) x thermal(eps_a)
//   rho_m = U_m rho0 U_m^dagger          (pre-measurement)
//   rho_f = U_f rho_m U_f^dagger         (feedback)
//   rho_reset = tr_A(rho_f) x thermal(eps_a)
//
// The measurement axis is m = (sin phi, 0, cos phi).

#include "qfc/densmat.hpp"

namespace qfc {

struct ProtocolParams {
  double eps_s = 0.0;  // register polarization bias
  double eps_a = 0.0;  // ancilla polarization bias
  double phi = 0.0;    // measurement angle, radians
  double temperature = 1.0;

  /// Throws DomainError naming the first violated bound.
  void validate() const;
};

struct Marginals {
  DensityMatrix s;
  DensityMatrix a;
};

struct ProtocolTrace {
  ProtocolParams params;
  DensityMatrix rho0;
  DensityMatrix rho_m;
  DensityMatrix rho_f;
  DensityMatrix rho_reset;
  Marginals initial;
  Marginals measured;
  Marginals final;
  Marginals reset;
};

/// 1/2 (I - eps sigma_z) = diag((1 - eps)/2, (1 + eps)/2); <sigma_z> = -eps.
DensityMatrix thermal_qubit(double eps);

DensityMatrix initial_state(const ProtocolParams& p);

/// exp(-i pi/4 sigma_m x sigma_y) with sigma_m = sin(phi) sigma_x + cos(phi) sigma_z.
Unitary measurement_unitary(double phi);

/// exp(+i pi/4 sigma_y) x |+x><+x| + exp(-i pi/4 sigma_y) x |-x><-x|.
Unitary feedback_unitary();

ProtocolTrace run_protocol(const ProtocolParams& p);

/// rho_m only; cheaper than a full trace when sweeping correlations.
DensityMatrix post_measurement_state(const ProtocolParams& p);

}  // namespace qfc
