#pragma once

#include "qfc/correlations.hpp"
#include "qfc/thermo.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qfc {

/// eps_a sweeps stop here; entropies and atanh diverge at 1.
inline constexpr double kEpsAUpper = 1.0 - 1e-9;

struct SweepGrid {
  double eps_s = 0.4;
  std::vector<double> phi_values;
  std::vector<double> eps_a_values;
  double temperature = 1.0;

  /// Strictly increasing values inside the parameter domain, eps_a >= eps_s.
  void validate() const;
};

struct CurvePoint {
  double eps_a = 0.0;
  double phi = 0.0;
  ThermoReport thermo;
  std::optional<CorrelationReport> correlations;
};

/// Evaluates one (eps_s, eps_a, phi, T) point. Deterministic.
CurvePoint evaluate_point(const ProtocolParams& p, bool with_correlations,
                          bool numeric_discord = false, const OptimizerOptions& opts = {});

/// n evenly spaced values on [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, std::size_t n);

/// Evaluates fn(i) for i in [0, n) on up to `threads` workers (0 = hardware
/// concurrency). Results land in index order, so output never depends on scheduling.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn,
                            unsigned threads);

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  unsigned threads);

/// eps_a over [eps_s, kEpsAUpper] with n_points samples.
std::vector<CurvePoint> characteristic_curve(double eps_s, double phi, std::size_t n_points,
                                             double temperature = 1.0);

enum class Objective { Cop, Eta, Chi };

std::string to_string(Objective o);
/// "cop" / "eta" / "chi" (case-insensitive); throws DomainError otherwise.
Objective parse_objective(const std::string& name);

/// Objective value; empty where the figure of merit is undefined.
std::optional<double> objective_value(Objective o, const ThermoReport& r);

enum class BoundaryFlag { None, Lower, Upper };
std::string to_string(BoundaryFlag b);

struct WorkingPoint {
  double eps_a_star = 0.0;
  double objective_value = 0.0;
  double cooling_load_star = 0.0;
  /// The supremum is a limit at an end of (eps_s, 1); eps_a_star is that limit
  /// and objective_value the best value actually sampled.
  BoundaryFlag boundary = BoundaryFlag::None;
  /// The lower limit is the reversible point, where the ratio itself is undefined.
  bool reversible_limit = false;
  /// Objective flat over the whole interval.
  bool degenerate = false;
};

struct WorkingPointOptions {
  std::size_t coarse_points = 256;
  double tolerance = 1e-9;  // golden-section bracket width in eps_a
};

WorkingPoint optimize_working_point(Objective objective, double eps_s, double phi,
                                    double temperature = 1.0,
                                    const WorkingPointOptions& opts = {});

/// Golden-section maximization of f on [lo, hi] down to bracket width `tol`.
/// Returns the abscissa of the best point seen.
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol, int max_iterations = 500);

struct SeparabilityBoundary {
  enum class Kind { Crossing, EntangledNowhere, EntangledEverywhere };
  double phi = 0.0;  // pi/2 for EntangledNowhere, 0 for EntangledEverywhere
  Kind kind = Kind::Crossing;
};

/// First phi in [0, pi/2] where the concurrence of rho_m turns positive,
/// located by a coarse scan followed by bisection to `tol`.
SeparabilityBoundary separability_boundary(double eps_s, double eps_a, double tol = 1e-6,
                                           double temperature = 1.0);

/// Solves for eps_a in [eps_s, kEpsAUpper] with cooling load T * Delta S = load.
double solve_eps_a_for_load(double eps_s, double load, double temperature = 1.0);

struct BoundaryPoint {
  double eps_a = 0.0;
  double phi = 0.0;
  double cooling_load = 0.0;
  std::optional<double> chi;
};

struct QuantitySelector {
  bool correlations = true;
  bool numeric_discord = false;
  bool separability = true;  // bisect the separability boundary per eps_a column
};

struct Landscape {
  std::vector<CurvePoint> points;  // phi outer, eps_a inner
  std::vector<BoundaryPoint> cooling_window;   // eps_a sin(phi) = eps_s
  std::vector<BoundaryPoint> work_extraction;  // phi = phi_crit(eps_a)
  std::vector<BoundaryPoint> separability;     // onset of entanglement
};

Landscape landscape(const SweepGrid& grid, const QuantitySelector& quantities = {},
                    unsigned threads = 0, const OptimizerOptions& opts = {});

}  // namespace qfc

#include "qfc/detail/parallel.ipp"
