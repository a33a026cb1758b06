#include "qfc/thermo.hpp"

#include "qfc/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace qfc {

namespace {

// x atanh(x), the recurring energy-per-temperature term.
double x_atanh(double x) { return x * std::atanh(x); }

// 1 - sin(phi) without cancellation near pi/2.
double one_minus_sin(double phi) {
  const double half = 0.5 * (std::numbers::pi / 2 - phi);
  return 2.0 * std::sin(half) * std::sin(half);
}

std::optional<double> ratio(double num, double den) {
  if (den <= kReversibleThreshold) return std::nullopt;
  return num / den;
}

}  // namespace

EnergyModel energy_model(const ProtocolParams& p) {
  p.validate();
  EnergyModel model;
  model.omega_s = 2.0 * p.temperature * std::atanh(p.eps_s);
  model.omega_a = 2.0 * p.temperature * std::atanh(p.eps_a);
  model.h_system = Complex(0.5 * model.omega_s) * pauli_z();
  model.h_ancilla = Complex(0.5 * model.omega_a) * pauli_z();
  model.hamiltonian =
      tensor(model.h_system, identity2()) + tensor(identity2(), model.h_ancilla);
  return model;
}

double feedback_coupling(const ProtocolParams& p) {
  return p.eps_a * std::atanh(p.eps_s) + p.eps_s * std::atanh(p.eps_a);
}

double work_measurement(const ProtocolParams& p) {
  p.validate();
  const double s = std::sin(p.phi);
  return -p.temperature * (x_atanh(p.eps_s) * s * s + x_atanh(p.eps_a));
}

double work_feedback(const ProtocolParams& p) {
  const EnergyModel model = energy_model(p);
  const DensityMatrix rho_m = post_measurement_state(p);
  const DensityMatrix rho_f = feedback_unitary().apply(rho_m);
  return expectation(model.hamiltonian, rho_m) - expectation(model.hamiltonian, rho_f);
}

double work_feedback_closed_form(const ProtocolParams& p) {
  p.validate();
  const double c = std::cos(p.phi);
  return p.temperature * (feedback_coupling(p) * std::sin(p.phi) - x_atanh(p.eps_s) * c * c);
}

PhiCritical phi_crit(const ProtocolParams& p) {
  p.validate();
  const double a = x_atanh(p.eps_s);
  if (a <= 0.0) return PhiCritical{0.0, true};
  const double y = feedback_coupling(p);
  // Positive root of a s^2 + y s - a = 0 (with cos^2 = 1 - s^2), in the form
  // 2a / (y + sqrt(y^2 + 4a^2)) to avoid cancellation.
  const double sin_crit = 2.0 * a / (y + std::sqrt(y * y + 4.0 * a * a));
  return PhiCritical{std::asin(std::clamp(sin_crit, 0.0, 1.0)), false};
}

double heat_reset(const ProtocolParams& p) {
  p.validate();
  return p.temperature * (p.eps_a - p.eps_s * std::sin(p.phi)) * std::atanh(p.eps_a);
}

double delta_e_system(const ProtocolParams& p) {
  p.validate();
  return -p.temperature * (p.eps_s - p.eps_a * std::sin(p.phi)) * std::atanh(p.eps_s);
}

double entropy_reduction(const ProtocolParams& p) {
  p.validate();
  return x_atanh(p.eps_a) - x_atanh(p.eps_s) +
         0.5 * (std::log1p(-p.eps_a * p.eps_a) - std::log1p(-p.eps_s * p.eps_s));
}

double total_work(const ProtocolParams& p) {
  p.validate();
  const double as = std::atanh(p.eps_s);
  const double aa = std::atanh(p.eps_a);
  return p.temperature * ((p.eps_a - p.eps_s) * (aa - as) +
                          one_minus_sin(p.phi) * (p.eps_a * as + p.eps_s * aa));
}

ThermoReport figures_of_merit(const ProtocolParams& p) {
  p.validate();
  ThermoReport r;
  r.work_measurement = work_measurement(p);
  r.work_feedback = work_feedback_closed_form(p);
  r.heat_reset = heat_reset(p);
  r.delta_e_system = delta_e_system(p);
  r.entropy_reduction = entropy_reduction(p);
  r.cooling_load = p.temperature * r.entropy_reduction;
  r.total_work = total_work(p);
  r.reversible_limit = r.total_work <= kReversibleThreshold;
  r.cop = ratio(r.cooling_load, r.total_work);
  r.eta = ratio(r.cooling_load, r.heat_reset);
  if (r.cop) r.chi = *r.cop * r.cooling_load;
  r.in_cooling_window = p.eps_a * std::sin(p.phi) > p.eps_s;
  r.phi_crit = phi_crit(p);
  r.work_extracting_feedback = !r.phi_crit.degenerate && p.phi > r.phi_crit.phi;
  return r;
}

ThermoOracle thermo_from_matrices(const ProtocolTrace& trace, const EnergyModel& model) {
  const auto energy = [&](const DensityMatrix& rho) {
    return expectation(model.hamiltonian, rho);
  };
  ThermoOracle o;
  o.work_measurement = energy(trace.rho0) - energy(trace.rho_m);
  o.work_feedback = energy(trace.rho_m) - energy(trace.rho_f);
  o.heat_reset = expectation(model.h_ancilla, trace.final.a) -
                 expectation(model.h_ancilla, trace.initial.a);
  o.delta_e_system = expectation(model.h_system, trace.initial.s) -
                     expectation(model.h_system, trace.final.s);
  o.entropy_reduction = vn_entropy(trace.initial.s) - vn_entropy(trace.final.s);
  o.delta_e_total = energy(trace.rho0) - energy(trace.rho_f);
  o.total_work = -o.delta_e_total;
  return o;
}

double ergotropy(const DensityMatrix& rho, const ComplexMatrix& h) {
  if (rho.dim() != h.dim()) throw DimensionError("ergotropy: dimension mismatch");
  if (!h.is_hermitian()) throw NumericalError("ergotropy: Hamiltonian is not Hermitian");
  std::vector<double> populations = hermitian_eig(rho.matrix()).eigenvalues;
  const std::vector<double> energies = hermitian_eig(h).eigenvalues;  // ascending
  std::sort(populations.begin(), populations.end(), std::greater<>());
  double passive_energy = 0.0;
  for (std::size_t i = 0; i < energies.size(); ++i) passive_energy += populations[i] * energies[i];
  return std::max(0.0, expectation(h, rho) - passive_energy);
}

}  // namespace qfc
