#pragma once

// Correlation measures for two-qubit states, in nats throughout (so the
// largest two-qubit entanglement of formation is ln 2, not 1 bit).

#include "qfc/densmat.hpp"
#include "qfc/protocol.hpp"

#include <array>
#include <optional>

namespace qfc {

/// Bloch angles of the projector axis n; Pi_+- = 1/2 (I +- n.sigma).
struct MeasurementBasis {
  double polar = 0.0;
  double azimuth = 0.0;

  [[nodiscard]] std::array<double, 3> axis() const;
  /// sign = +1 or -1.
  [[nodiscard]] ComplexMatrix projector(int sign) const;
};

struct OptimizerOptions {
  int polar_steps = 64;
  int azimuth_steps = 32;
  double tolerance = 1e-9;  // spread of the objective over the simplex
  int max_iterations = 2000;
  int restarts = 3;         // best distinct grid cells refined locally
};

struct DiscordResult {
  double discord = 0.0;
  double classical = 0.0;  // sup of the one-sided classical correlation
  double mutual_info = 0.0;
  MeasurementBasis basis;  // maximizing projector axis
  int iterations = 0;
  bool converged = false;
};

/// Numeric discord with the full optimizer record; never throws on
/// non-convergence (inspect `converged`).
DiscordResult discord_search(const DensityMatrix& rho, Subsystem measured,
                             const OptimizerOptions& opts = {});

/// Discord value; throws ConvergenceError if the local refinement hit its cap.
double discord_numeric(const DensityMatrix& rho, Subsystem measured,
                       const OptimizerOptions& opts = {});

/// Conditional information S(rho_other) - sum_+- p S(rho_other | +-) for one basis.
double classical_information(const DensityMatrix& rho, Subsystem measured,
                             const MeasurementBasis& basis);

double classical_correlations(const DensityMatrix& rho, Subsystem measured,
                              const OptimizerOptions& opts = {});

struct ConcurrenceDetail {
  double from_lambda_max = 0.0;  // max{0, 2 lambda_max - tr R}
  double from_ordered = 0.0;     // max{0, l1 - l2 - l3 - l4}
  double signed_value = 0.0;     // l1 - l2 - l3 - l4 before clamping
  std::array<double, 4> r_eigenvalues{};  // descending
};

ConcurrenceDetail concurrence_detail(const DensityMatrix& rho);
double concurrence(const DensityMatrix& rho);

/// h(x) = -x ln x - (1 - x) ln(1 - x).
double binary_entropy(double x);
double eof_from_concurrence(double c);
double entanglement_of_formation(const DensityMatrix& rho);

double mutual_information(const DensityMatrix& rho);

/// Closed-form I(rho_m). The joint-entropy part uses the eigenvalues
/// 1/4 (1 +- eps_s)(1 +- eps_a) of rho0, each of the four terms with its 1/4.
double mutual_information_analytic(const ProtocolParams& p);

/// Discord of rho_m for either measured side; depends only on eps_s and phi.
/// Equal to S(thermal(eps_s cos phi)) - S(thermal(eps_s)).
double discord_analytic(double eps_s, double phi);

/// Discord at the cooling-window edge sin(phi) = eps_s.
double discord_threshold(double eps_s);

struct CorrelationReport {
  double concurrence = 0.0;
  double eof = 0.0;
  double mutual_info = 0.0;
  double discord_analytic = 0.0;
  // Filled only when the numeric optimizer ran.
  std::optional<double> discord_a;
  std::optional<double> discord_s;
  std::optional<double> classical_a;
  std::optional<MeasurementBasis> basis_a;
  std::optional<MeasurementBasis> basis_s;
};

/// Correlations of rho_m for the given parameters.
CorrelationReport correlation_report(const ProtocolParams& p, bool numeric_discord,
                                     const OptimizerOptions& opts = {});

}  // namespace qfc
