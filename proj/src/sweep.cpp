#include "qfc/sweep.hpp"

#include "qfc/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

namespace qfc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr std::size_t kSeparabilityScan = 64;
constexpr double kEntangledThreshold = 1e-12;

bool strictly_increasing(const std::vector<double>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

double signed_concurrence(double eps_s, double eps_a, double phi, double temperature) {
  return concurrence_detail(post_measurement_state({eps_s, eps_a, phi, temperature}))
      .signed_value;
}

}  // namespace

void SweepGrid::validate() const {
  if (phi_values.empty() || eps_a_values.empty()) throw DomainError("sweep grid is empty");
  if (!strictly_increasing(phi_values)) throw DomainError("phi values must be strictly increasing");
  if (!strictly_increasing(eps_a_values)) {
    throw DomainError("eps_a values must be strictly increasing");
  }
  if (eps_a_values.front() < eps_s) throw DomainError("eps_a values must not be below eps_s");
  // Corners carry every remaining bound.
  ProtocolParams{eps_s, eps_a_values.back(), phi_values.front(), temperature}.validate();
  ProtocolParams{eps_s, eps_a_values.front(), phi_values.back(), temperature}.validate();
}

CurvePoint evaluate_point(const ProtocolParams& p, bool with_correlations, bool numeric_discord,
                          const OptimizerOptions& opts) {
  CurvePoint pt{p.eps_a, p.phi, figures_of_merit(p), std::nullopt};
  if (with_correlations) pt.correlations = correlation_report(p, numeric_discord, opts);
  return pt;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  std::vector<double> out(n);
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

std::vector<CurvePoint> characteristic_curve(double eps_s, double phi, std::size_t n_points,
                                             double temperature) {
  if (n_points < 2) throw DomainError("n_points must be at least 2");
  if (!(eps_s < kEpsAUpper)) throw DomainError("eps_s must be below the eps_a clamp 1 - 1e-9");
  std::vector<CurvePoint> out;
  out.reserve(n_points);
  for (double eps_a : linspace(eps_s, kEpsAUpper, n_points)) {
    out.push_back(evaluate_point({eps_s, eps_a, phi, temperature}, false));
  }
  return out;
}

std::string to_string(Objective o) {
  switch (o) {
    case Objective::Cop: return "cop";
    case Objective::Eta: return "eta";
    case Objective::Chi: return "chi";
  }
  return "unknown";
}

Objective parse_objective(const std::string& name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "cop") return Objective::Cop;
  if (lower == "eta") return Objective::Eta;
  if (lower == "chi") return Objective::Chi;
  throw DomainError("objective must be one of cop, eta, chi");
}

std::optional<double> objective_value(Objective o, const ThermoReport& r) {
  switch (o) {
    case Objective::Cop: return r.cop;
    case Objective::Eta: return r.eta;
    case Objective::Chi: return r.chi;
  }
  return std::nullopt;
}

std::string to_string(BoundaryFlag b) {
  switch (b) {
    case BoundaryFlag::None: return "none";
    case BoundaryFlag::Lower: return "lower";
    case BoundaryFlag::Upper: return "upper";
  }
  return "unknown";
}

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol, int max_iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iterations && (b - a) > tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? c : d;
}

WorkingPoint optimize_working_point(Objective objective, double eps_s, double phi,
                                    double temperature, const WorkingPointOptions& opts) {
  ProtocolParams{eps_s, eps_s, phi, temperature}.validate();
  if (!(eps_s < kEpsAUpper)) throw DomainError("eps_s must be below the eps_a clamp 1 - 1e-9");
  if (opts.coarse_points < 3) throw DomainError("coarse scan needs at least 3 points");

  const auto value_at = [&](double eps_a) {
    return objective_value(objective, figures_of_merit({eps_s, eps_a, phi, temperature}));
  };
  const std::vector<double> xs = linspace(eps_s, kEpsAUpper, opts.coarse_points);
  std::vector<std::optional<double>> vs(xs.size());
  std::transform(xs.begin(), xs.end(), vs.begin(), value_at);

  std::optional<std::size_t> best;
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (!vs[k]) continue;
    lowest = std::min(lowest, *vs[k]);
    if (!best || *vs[k] > *vs[*best]) best = k;
  }
  WorkingPoint wp;
  if (!best || *vs[*best] - lowest <= 1e-14 * std::max(1.0, std::abs(*vs[*best]))) {
    wp.degenerate = true;
    wp.eps_a_star = best ? xs[*best] : eps_s;
    wp.objective_value = best ? *vs[*best] : 0.0;
    wp.cooling_load_star = temperature * entropy_reduction({eps_s, wp.eps_a_star, phi, temperature});
    return wp;
  }

  const std::size_t k = *best;
  const std::size_t last = xs.size() - 1;
  // An undefined value at eps_a = eps_s is the reversible point, where the
  // ratio diverges; a maximum next to it is a supremum at that limit.
  if (k == 0 || (k == 1 && !vs[0])) {
    wp.boundary = BoundaryFlag::Lower;
    wp.reversible_limit = !vs[0];
    wp.eps_a_star = eps_s;
  } else if (k == last) {
    wp.boundary = BoundaryFlag::Upper;
    wp.eps_a_star = xs[last];
  }
  if (wp.boundary != BoundaryFlag::None) {
    wp.objective_value = *vs[k];
    wp.cooling_load_star = temperature * entropy_reduction({eps_s, wp.eps_a_star, phi, temperature});
    return wp;
  }

  const auto f = [&](double eps_a) {
    return value_at(eps_a).value_or(-std::numeric_limits<double>::infinity());
  };
  const double x_star = golden_section_maximize(f, xs[k - 1], xs[k + 1], opts.tolerance);
  const double v_star = f(x_star);
  if (v_star >= *vs[k]) {
    wp.eps_a_star = x_star;
    wp.objective_value = v_star;
  } else {
    wp.eps_a_star = xs[k];
    wp.objective_value = *vs[k];
  }
  wp.cooling_load_star = temperature * entropy_reduction({eps_s, wp.eps_a_star, phi, temperature});
  return wp;
}

SeparabilityBoundary separability_boundary(double eps_s, double eps_a, double tol,
                                           double temperature) {
  if (!(eps_s < eps_a)) throw DomainError("separability_boundary requires eps_s < eps_a");
  ProtocolParams{eps_s, eps_a, 0.0, temperature}.validate();
  const auto entangled = [&](double phi) {
    return signed_concurrence(eps_s, eps_a, phi, temperature) > kEntangledThreshold;
  };
  if (entangled(0.0)) return {0.0, SeparabilityBoundary::Kind::EntangledEverywhere};

  const std::vector<double> phis = linspace(0.0, kHalfPi, kSeparabilityScan + 1);
  for (std::size_t i = 1; i < phis.size(); ++i) {
    if (!entangled(phis[i])) continue;
    double lo = phis[i - 1];
    double hi = phis[i];
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      (entangled(mid) ? hi : lo) = mid;
    }
    return {0.5 * (lo + hi), SeparabilityBoundary::Kind::Crossing};
  }
  return {kHalfPi, SeparabilityBoundary::Kind::EntangledNowhere};
}

double solve_eps_a_for_load(double eps_s, double load, double temperature) {
  const auto load_at = [&](double eps_a) {
    return temperature * entropy_reduction({eps_s, eps_a, 0.0, temperature});
  };
  if (load < 0.0 || load > load_at(kEpsAUpper)) {
    throw DomainError("cooling load is outside the attainable range");
  }
  double lo = eps_s;
  double hi = kEpsAUpper;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (load_at(mid) < load ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

Landscape landscape(const SweepGrid& grid, const QuantitySelector& quantities, unsigned threads,
                    const OptimizerOptions& opts) {
  grid.validate();
  const std::size_t n_phi = grid.phi_values.size();
  const std::size_t n_ea = grid.eps_a_values.size();

  Landscape out;
  out.points = parallel_map<CurvePoint>(
      n_phi * n_ea,
      [&](std::size_t idx) {
        const ProtocolParams p{grid.eps_s, grid.eps_a_values[idx % n_ea],
                               grid.phi_values[idx / n_ea], grid.temperature};
        return evaluate_point(p, quantities.correlations, quantities.numeric_discord, opts);
      },
      threads);

  for (double eps_a : grid.eps_a_values) {
    if (!(eps_a > grid.eps_s)) continue;
    const ProtocolParams edge{grid.eps_s, eps_a, std::asin(grid.eps_s / eps_a), grid.temperature};
    const ThermoReport r = figures_of_merit(edge);
    out.cooling_window.push_back({eps_a, edge.phi, r.cooling_load, r.chi});
    const PhiCritical crit = r.phi_crit;
    if (!crit.degenerate) {
      const ThermoReport rc = figures_of_merit({grid.eps_s, eps_a, crit.phi, grid.temperature});
      out.work_extraction.push_back({eps_a, crit.phi, rc.cooling_load, rc.chi});
    }
  }

  if (quantities.separability) {
    std::vector<double> columns;
    for (double eps_a : grid.eps_a_values) {
      if (eps_a > grid.eps_s) columns.push_back(eps_a);
    }
    const auto bounds = parallel_map<SeparabilityBoundary>(
        columns.size(),
        [&](std::size_t i) {
          return separability_boundary(grid.eps_s, columns[i], 1e-6, grid.temperature);
        },
        threads);
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (bounds[i].kind != SeparabilityBoundary::Kind::Crossing) continue;
      const ThermoReport r =
          figures_of_merit({grid.eps_s, columns[i], bounds[i].phi, grid.temperature});
      out.separability.push_back({columns[i], bounds[i].phi, r.cooling_load, r.chi});
    }
  }
  return out;
}

}  // namespace qfc
