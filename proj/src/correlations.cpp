#include "qfc/correlations.hpp"

#include "qfc/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace qfc {

namespace {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

Mat2 projector_matrix(const std::array<double, 3>& n, int sign) {
  const double s = sign > 0 ? 0.5 : -0.5;
  Mat2 p;
  p(0, 0) = 0.5 + s * n[2];
  p(1, 1) = 0.5 - s * n[2];
  p(0, 1) = Complex(s * n[0], -s * n[1]);
  p(1, 0) = Complex(s * n[0], s * n[1]);
  return p;
}

// Unnormalized state of the unmeasured qubit after projecting `measured` onto Pi:
// tr_measured[(Pi on measured) rho].
Mat2 conditional_state(const Mat4& rho, Subsystem measured, const Mat2& pi) {
  Mat2 out = Mat2::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Complex acc = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          acc += measured == Subsystem::A ? rho(2 * i + a, 2 * j + b) * pi(b, a)
                                          : rho(2 * a + i, 2 * b + j) * pi(b, a);
        }
      }
      out(i, j) = acc;
    }
  }
  return out;
}

// sum_+- p_+- S(rho_other | +-); outcomes with p = 0 contribute nothing.
double average_conditional_entropy(const Mat4& rho, Subsystem measured,
                                   const std::array<double, 3>& n) {
  double total = 0.0;
  for (int sign : {+1, -1}) {
    const Mat2 unnormalized = conditional_state(rho, measured, projector_matrix(n, sign));
    const double prob = unnormalized.trace().real();
    if (prob <= kEntropyCutoff) continue;
    total += prob * qubit_entropy(unnormalized / prob);
  }
  return total;
}

std::array<double, 3> axis_of(double polar, double azimuth) {
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
          std::cos(polar)};
}

struct Vertex {
  double polar;
  double azimuth;
  double value;  // objective being maximized
};

struct LocalResult {
  Vertex best;
  int iterations;
  bool converged;
};

// Nelder-Mead maximization over (polar, azimuth); stops when the objective
// spread over the simplex drops below `tol`.
LocalResult nelder_mead(const std::function<double(double, double)>& f, Vertex start,
                        double step_polar, double step_azimuth, double tol,
                        int max_iterations) {
  std::array<Vertex, 3> s{start,
                          Vertex{start.polar + step_polar, start.azimuth, 0.0},
                          Vertex{start.polar, start.azimuth + step_azimuth, 0.0}};
  s[1].value = f(s[1].polar, s[1].azimuth);
  s[2].value = f(s[2].polar, s[2].azimuth);
  const auto eval = [&](double p, double a) { return Vertex{p, a, f(p, a)}; };
  int it = 0;
  for (; it < max_iterations; ++it) {
    std::sort(s.begin(), s.end(), [](const Vertex& x, const Vertex& y) { return x.value > y.value; });
    if (s[0].value - s[2].value <= tol) {
      return {s[0], it, true};
    }
    const double cp = 0.5 * (s[0].polar + s[1].polar);
    const double ca = 0.5 * (s[0].azimuth + s[1].azimuth);
    const Vertex reflected = eval(2.0 * cp - s[2].polar, 2.0 * ca - s[2].azimuth);
    if (reflected.value > s[0].value) {
      const Vertex expanded = eval(3.0 * cp - 2.0 * s[2].polar, 3.0 * ca - 2.0 * s[2].azimuth);
      s[2] = expanded.value > reflected.value ? expanded : reflected;
      continue;
    }
    if (reflected.value > s[1].value) {
      s[2] = reflected;
      continue;
    }
    const bool outside = reflected.value > s[2].value;
    const Vertex& anchor = outside ? reflected : s[2];
    const Vertex contracted = eval(0.5 * (cp + anchor.polar), 0.5 * (ca + anchor.azimuth));
    if (contracted.value > anchor.value) {
      s[2] = contracted;
      continue;
    }
    for (int k = 1; k < 3; ++k) {
      s[static_cast<std::size_t>(k)] =
          eval(0.5 * (s[0].polar + s[static_cast<std::size_t>(k)].polar),
               0.5 * (s[0].azimuth + s[static_cast<std::size_t>(k)].azimuth));
    }
  }
  std::sort(s.begin(), s.end(), [](const Vertex& x, const Vertex& y) { return x.value > y.value; });
  return {s[0], it, s[0].value - s[2].value <= tol};
}

Mat4 as_mat4(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("expected a two-qubit state");
  return Mat4(rho.matrix().eigen());
}

// Entropy of a thermal qubit with bias b (b in [0, 1)).
double thermal_entropy(double b) {
  return 0.5 * std::log(4.0 / (1.0 - b * b)) - b * std::atanh(b);
}

}  // namespace

std::array<double, 3> MeasurementBasis::axis() const { return axis_of(polar, azimuth); }

ComplexMatrix MeasurementBasis::projector(int sign) const {
  if (sign != 1 && sign != -1) throw DomainError("projector sign must be +1 or -1");
  return ComplexMatrix(ComplexMatrix::Storage(projector_matrix(axis(), sign)));
}

double classical_information(const DensityMatrix& rho, Subsystem measured,
                             const MeasurementBasis& basis) {
  const Subsystem other = measured == Subsystem::A ? Subsystem::S : Subsystem::A;
  return vn_entropy(partial_trace(rho, other)) -
         average_conditional_entropy(as_mat4(rho), measured, basis.axis());
}

DiscordResult discord_search(const DensityMatrix& rho, Subsystem measured,
                             const OptimizerOptions& opts) {
  if (opts.polar_steps < 2 || opts.azimuth_steps < 1 || opts.restarts < 1 ||
      opts.max_iterations < 1 || !(opts.tolerance > 0.0)) {
    throw DomainError("invalid discord optimizer options");
  }
  const Mat4 m = as_mat4(rho);
  const Subsystem other = measured == Subsystem::A ? Subsystem::S : Subsystem::A;
  const double other_entropy = vn_entropy(partial_trace(rho, other));
  const auto objective = [&](double polar, double azimuth) {
    return other_entropy - average_conditional_entropy(m, measured, axis_of(polar, azimuth));
  };

  const double d_polar = std::numbers::pi / (opts.polar_steps - 1);
  const double d_azimuth = 2.0 * std::numbers::pi / opts.azimuth_steps;
  std::vector<Vertex> grid;
  grid.reserve(static_cast<std::size_t>(opts.polar_steps * opts.azimuth_steps));
  for (int i = 0; i < opts.polar_steps; ++i) {
    for (int j = 0; j < opts.azimuth_steps; ++j) {
      const double polar = d_polar * i;
      const double azimuth = d_azimuth * j;
      grid.push_back({polar, azimuth, objective(polar, azimuth)});
    }
  }
  // Stable sort keeps the seeding order deterministic among ties.
  std::stable_sort(grid.begin(), grid.end(),
                   [](const Vertex& a, const Vertex& b) { return a.value > b.value; });

  DiscordResult result;
  result.mutual_info = mutual_information(rho);
  LocalResult best{grid.front(), 0, false};
  bool first = true;
  const auto n_starts = std::min<std::size_t>(static_cast<std::size_t>(opts.restarts), grid.size());
  for (std::size_t k = 0; k < n_starts; ++k) {
    LocalResult local = nelder_mead(objective, grid[k], 0.5 * d_polar, 0.5 * d_azimuth,
                                    opts.tolerance, opts.max_iterations);
    result.iterations += local.iterations;
    if (first || local.best.value > best.best.value) {
      best = local;
      first = false;
    }
  }
  result.classical = std::max(best.best.value, grid.front().value);
  result.discord = std::max(0.0, result.mutual_info - result.classical);
  result.basis = MeasurementBasis{best.best.polar, best.best.azimuth};
  result.converged = best.converged;
  return result;
}

double discord_numeric(const DensityMatrix& rho, Subsystem measured,
                       const OptimizerOptions& opts) {
  const DiscordResult r = discord_search(rho, measured, opts);
  if (!r.converged) {
    throw ConvergenceError("discord optimizer reached its iteration cap (" +
                           std::to_string(opts.max_iterations) + ")");
  }
  return r.discord;
}

double classical_correlations(const DensityMatrix& rho, Subsystem measured,
                              const OptimizerOptions& opts) {
  const DiscordResult r = discord_search(rho, measured, opts);
  if (!r.converged) throw ConvergenceError("discord optimizer reached its iteration cap");
  return r.mutual_info - r.discord;
}

ConcurrenceDetail concurrence_detail(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DimensionError("concurrence expects a two-qubit state");
  const ComplexMatrix flip = tensor(pauli_y(), pauli_y());
  const ComplexMatrix root = psd_sqrt(rho);
  const ComplexMatrix inner = root * flip * conjugate(rho.matrix()) * flip * root;
  // Symmetrize the round-off before taking the outer root.
  const ComplexMatrix hermitian_inner(
      ComplexMatrix::Storage(0.5 * (inner.eigen() + inner.eigen().adjoint())));
  const ComplexMatrix r = psd_sqrt(hermitian_inner);

  std::vector<double> lambdas = hermitian_eig(r).eigenvalues;
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  ConcurrenceDetail d;
  std::copy(lambdas.begin(), lambdas.end(), d.r_eigenvalues.begin());
  d.signed_value = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
  d.from_ordered = std::max(0.0, d.signed_value);
  d.from_lambda_max = std::max(0.0, 2.0 * lambdas[0] - r.trace().real());
  if (std::abs(d.from_lambda_max - d.from_ordered) > 1e-9) {
    throw NumericalError("concurrence: the two evaluations disagree");
  }
  return d;
}

double concurrence(const DensityMatrix& rho) {
  return std::clamp(concurrence_detail(rho).from_lambda_max, 0.0, 1.0);
}

double binary_entropy(double x) {
  if (x < 0.0 || x > 1.0) throw DomainError("binary_entropy argument must lie in [0, 1]");
  return shannon_entropy({x, 1.0 - x});
}

double eof_from_concurrence(double c) {
  if (c < 0.0 || c > 1.0) throw DomainError("concurrence must lie in [0, 1]");
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double entanglement_of_formation(const DensityMatrix& rho) {
  return eof_from_concurrence(concurrence(rho));
}

double mutual_information(const DensityMatrix& rho) {
  return vn_entropy(partial_trace(rho, Subsystem::S)) +
         vn_entropy(partial_trace(rho, Subsystem::A)) - vn_entropy(rho);
}

double mutual_information_analytic(const ProtocolParams& p) {
  p.validate();
  const double es = p.eps_s;
  const double ea = p.eps_a;
  const double both = es * ea * std::cos(p.phi);  // |Bloch| of the ancilla marginal
  const double reg = es * std::cos(p.phi);        // |Bloch| of the register marginal
  const auto marginal_terms = [](double x) {
    return -0.5 * std::log((1.0 - x) / 4.0) - 0.5 * std::log(x + 1.0) - x * std::atanh(x);
  };
  double joint = 0.0;  // sum lambda ln lambda over the joint spectrum
  for (double ss : {-1.0, 1.0}) {
    for (double sa : {-1.0, 1.0}) {
      const double lambda = 0.25 * (1.0 + ss * es) * (1.0 + sa * ea);
      if (lambda > kEntropyCutoff) joint += lambda * std::log(lambda);
    }
  }
  return marginal_terms(both) + marginal_terms(reg) + joint;
}

double discord_analytic(double eps_s, double phi) {
  if (!(eps_s >= 0.0 && eps_s < 1.0)) throw DomainError("eps_s must lie in [0, 1)");
  if (phi < -1e-12 || phi > std::numbers::pi / 2 + 1e-12) {
    throw DomainError("phi must lie in [0, pi/2]");
  }
  const double c = eps_s * std::cos(phi);
  const double direct = eps_s * std::atanh(eps_s) +
                         0.5 * std::log((eps_s * eps_s - 1.0) / (c * c - 1.0)) +
                         0.5 * c * std::log((1.0 - c) / (1.0 + c));
  const double via_entropies = thermal_entropy(c) - thermal_entropy(eps_s);
  if (std::abs(direct - via_entropies) > 1e-10) {
    throw NumericalError("discord_analytic: closed form and entropy identity disagree");
  }
  return direct;
}

double discord_threshold(double eps_s) {
  if (!(eps_s > 0.0 && eps_s < 1.0)) throw DomainError("eps_s must lie in (0, 1)");
  return discord_analytic(eps_s, std::asin(eps_s));
}

CorrelationReport correlation_report(const ProtocolParams& p, bool numeric_discord,
                                     const OptimizerOptions& opts) {
  const DensityMatrix rho_m = post_measurement_state(p);
  CorrelationReport r;
  r.concurrence = concurrence(rho_m);
  r.eof = eof_from_concurrence(r.concurrence);
  r.mutual_info = mutual_information(rho_m);
  r.discord_analytic = discord_analytic(p.eps_s, p.phi);
  if (numeric_discord) {
    const DiscordResult on_a = discord_search(rho_m, Subsystem::A, opts);
    const DiscordResult on_s = discord_search(rho_m, Subsystem::S, opts);
    if (!on_a.converged || !on_s.converged) {
      throw ConvergenceError("discord optimizer reached its iteration cap");
    }
    r.discord_a = on_a.discord;
    r.discord_s = on_s.discord;
    r.classical_a = on_a.mutual_info - on_a.discord;
    r.basis_a = on_a.basis;
    r.basis_s = on_s.basis;
  }
  return r;
}

}  // namespace qfc
