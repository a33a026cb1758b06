#pragma once

// Energy balance and figures of merit for one protocol iteration. Units:
// k_B = hbar = 1, so the temperature is an energy scale and every energy below
// carries a factor T. Closed forms are the production path; the *_from_matrices
// helpers evaluate the same quantities as direct traces over the protocol states.

#include "qfc/densmat.hpp"
#include "qfc/protocol.hpp"

#include <optional>

namespace qfc {

/// W, Q below this are treated as zero and ratios built on them are undefined.
inline constexpr double kReversibleThreshold = 1e-14;

struct EnergyModel {
  double omega_s = 0.0;
  double omega_a = 0.0;
  ComplexMatrix hamiltonian{4};  // H_S x I + I x H_A
  ComplexMatrix h_system{2};     // omega_s / 2 sigma_z
  ComplexMatrix h_ancilla{2};    // omega_a / 2 sigma_z
};

/// omega = 2 T atanh(eps), i.e. k_B T ln((1 + eps) / (1 - eps)).
EnergyModel energy_model(const ProtocolParams& p);

/// y = eps_a atanh(eps_s) + eps_s atanh(eps_a).
double feedback_coupling(const ProtocolParams& p);

/// Delta E_{0,m} = tr{H (rho0 - rho_m)} <= 0.
double work_measurement(const ProtocolParams& p);

/// Delta E_{m,f} = tr{H (rho_m - rho_f)}, evaluated on the actual matrices.
/// Positive means work is extracted during feedback.
double work_feedback(const ProtocolParams& p);

/// T (y sin(phi) - eps_s atanh(eps_s) cos^2(phi)). The overall sign differs
/// from the commonly quoted form; this one agrees with the matrix evaluation.
double work_feedback_closed_form(const ProtocolParams& p);

struct PhiCritical {
  double phi = 0.0;
  /// eps_s = 0: feedback work vanishes identically, no threshold exists.
  bool degenerate = false;
};

/// Angle above which the feedback step extracts work.
PhiCritical phi_crit(const ProtocolParams& p);

/// Q = T (eps_a - eps_s sin(phi)) atanh(eps_a), heat dumped at the reset.
double heat_reset(const ProtocolParams& p);

/// Delta E^(S)_{0,f} = -T (eps_s - eps_a sin(phi)) atanh(eps_s); > 0 means genuine cooling.
double delta_e_system(const ProtocolParams& p);

/// Delta S^(S)_{0,f} in nats; independent of phi.
double entropy_reduction(const ProtocolParams& p);

/// W = -Delta E^(S) + Q written in a cancellation-free form.
double total_work(const ProtocolParams& p);

struct ThermoReport {
  double work_measurement = 0.0;
  double work_feedback = 0.0;
  double heat_reset = 0.0;
  double delta_e_system = 0.0;
  double entropy_reduction = 0.0;
  double cooling_load = 0.0;  // P = T Delta S
  double total_work = 0.0;    // W
  std::optional<double> cop;  // P / W, empty when W <= kReversibleThreshold
  std::optional<double> eta;  // P / Q, empty when Q <= kReversibleThreshold
  std::optional<double> chi;  // cop * P, empty when cop is
  bool reversible_limit = false;
  bool in_cooling_window = false;
  bool work_extracting_feedback = false;
  PhiCritical phi_crit;
};

/// All closed-form quantities; no matrices are built.
ThermoReport figures_of_merit(const ProtocolParams& p);

/// The same energy quantities as traces over the protocol states.
struct ThermoOracle {
  double work_measurement = 0.0;
  double work_feedback = 0.0;
  double heat_reset = 0.0;
  double delta_e_system = 0.0;
  double entropy_reduction = 0.0;
  double total_work = 0.0;       // -tr{H (rho0 - rho_f)}
  double delta_e_total = 0.0;    // tr{H (rho0 - rho_f)}
};

ThermoOracle thermo_from_matrices(const ProtocolTrace& trace, const EnergyModel& model);

/// tr(H rho) - tr(H rho_passive); the passive state pairs descending
/// populations with ascending energies.
double ergotropy(const DensityMatrix& rho, const ComplexMatrix& h);

}  // namespace qfc
