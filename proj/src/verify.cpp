#include "qfc/verify.hpp"

#include "qfc/error.hpp"
#include "qfc/sweep.hpp"
#include "qfc/thermo.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

namespace qfc {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kCorruption = 1e-6;

enum Check : std::size_t {
  kEntropyThermal,
  kEntropyReduction,
  kWorkMeasurement,
  kWorkFeedback,
  kHeatReset,
  kDeltaESystem,
  kMutualInfo,
  kDiscordMatrix,
  kDiscordAnalytic,
  kDiscordSymmetry,
  kPurityTransfer,
  kSwapLimit,
  kEntropyInvariance,
  kTotalWork,
  kEnergyBookkeeping,
  kResetMarginals,
  kConcurrenceForms,
  kPhiCritRoot,
  kWorkPositive,
  kReversibleWork,
  kHeatExceedsLoad,
  kEntropyReductionNonNegative,
  kEtaBounded,
  kErgotropyBound,
  kErgotropyStrictGap,
  kCoolingWindowSign,
  kNoCoolingBelowBias,
  kEntanglementImpliesDiscord,
  kDiscordBounds,
  kDiscordZeroAtEnergyBasis,
  kDiscordMonotone,
  kCopMonotone,
  kCheckCount
};

struct CheckSpec {
  const char* name;
  double tolerance;
  // Inequalities record a violation margin; strict ones need it to stay < 0.
  bool strict;
};

constexpr std::array<CheckSpec, kCheckCount> kSpecs{{
    {"thermal_entropy", 1e-10, false},
    {"entropy_reduction", 1e-10, false},
    {"work_measurement", 1e-10, false},
    {"work_feedback", 1e-10, false},
    {"heat_reset", 1e-10, false},
    {"delta_e_system", 1e-10, false},
    {"mutual_info", 1e-10, false},
    {"discord_closed_form_x_basis", 1e-10, false},
    {"discord_closed_form_vs_numeric", 1e-6, false},
    {"discord_side_symmetry", 1e-6, false},
    {"purity_transfer", 1e-10, false},
    {"swap_limit_x_measurement", 1e-10, false},
    {"unitary_entropy_invariance", 1e-10, false},
    {"total_work_balance", 1e-10, false},
    {"energy_bookkeeping", 1e-10, false},
    {"reset_marginals", 1e-12, false},
    {"concurrence_two_forms", 1e-9, false},
    {"phi_crit_is_feedback_root", 1e-9, false},
    {"work_positive", 0.0, true},
    {"work_zero_at_reversible_point", 1e-12, false},
    {"heat_exceeds_load", 1e-12, false},
    {"entropy_reduction_nonnegative", 1e-12, false},
    {"eta_at_most_one", 1e-12, false},
    {"ergotropy_bounds_feedback_work", 1e-10, false},
    {"ergotropy_strict_gap_x_measurement", 0.0, true},
    {"cooling_window_sign", 0.0, false},
    {"no_cooling_below_bias", 1e-12, false},
    {"entanglement_implies_discord", 0.0, false},
    {"discord_bounds", 1e-9, false},
    {"discord_zero_at_energy_basis", 1e-9, false},
    {"discord_monotone_in_phi", 1e-12, false},
    {"cop_monotone_in_phi", 1e-12, false},
}};

constexpr double kUnset = -std::numeric_limits<double>::infinity();

struct PointRecord {
  std::array<double, kCheckCount> dev;
  double discord_analytic = 0.0;
  std::optional<double> cop;
  PointRecord() { dev.fill(kUnset); }
  void put(Check c, double v) { dev[c] = std::max(dev[c], v); }
};

double thermal_entropy_closed_form(double eps) {
  return 0.5 * std::log(4.0 / (1.0 - eps * eps)) - eps * std::atanh(eps);
}

PointRecord check_point(const ProtocolParams& p, const VerifyOptions& opts) {
  const auto bias = [&](const char* name) { return opts.corrupt == name ? kCorruption : 0.0; };
  PointRecord rec;
  const ProtocolTrace trace = run_protocol(p);
  const EnergyModel model = energy_model(p);
  const ThermoOracle oracle = thermo_from_matrices(trace, model);
  const ThermoReport report = figures_of_merit(p);
  const bool x_measurement = std::abs(p.phi - kHalfPi) < 1e-12;
  const bool distinct = p.eps_a > p.eps_s;

  rec.put(kEntropyThermal,
          std::abs(vn_entropy(thermal_qubit(p.eps_s)) - (thermal_entropy_closed_form(p.eps_s) + bias("thermal_entropy"))));
  rec.put(kEntropyThermal,
          std::abs(vn_entropy(thermal_qubit(p.eps_a)) - (thermal_entropy_closed_form(p.eps_a) + bias("thermal_entropy"))));
  rec.put(kEntropyReduction, std::abs(oracle.entropy_reduction -
                                      (entropy_reduction(p) + bias("entropy_reduction"))));
  rec.put(kWorkMeasurement, std::abs(oracle.work_measurement -
                                     (work_measurement(p) + bias("work_measurement"))));
  rec.put(kWorkFeedback, std::abs(oracle.work_feedback -
                                  (work_feedback_closed_form(p) + bias("work_feedback"))));
  rec.put(kHeatReset, std::abs(oracle.heat_reset - (heat_reset(p) + bias("heat_reset"))));
  rec.put(kDeltaESystem,
          std::abs(oracle.delta_e_system - (delta_e_system(p) + bias("delta_e_system"))));
  const double mi = mutual_information(trace.rho_m);
  rec.put(kMutualInfo,
          std::abs(mi - (mutual_information_analytic(p) + bias("mutual_info"))));

  rec.discord_analytic = discord_analytic(p.eps_s, p.phi) + bias("discord");
  // Matrix evaluation at the ancilla x basis, the optimum the numeric search confirms.
  rec.put(kDiscordMatrix,
          std::abs(mi - classical_information(trace.rho_m, Subsystem::A, {kHalfPi, 0.0}) -
                   rec.discord_analytic));
  if (opts.numeric_discord) {
    const DiscordResult on_a = discord_search(trace.rho_m, Subsystem::A, opts.discord);
    const DiscordResult on_s = discord_search(trace.rho_m, Subsystem::S, opts.discord);
    // Non-convergence shows up as a failed bound check.
    const double not_converged = (on_a.converged && on_s.converged) ? 0.0 : 1.0;
    rec.put(kDiscordAnalytic, std::abs(on_a.discord - rec.discord_analytic));
    rec.put(kDiscordAnalytic, std::abs(on_s.discord - rec.discord_analytic));
    rec.put(kDiscordSymmetry, std::abs(on_a.discord - on_s.discord));
    for (const DiscordResult* r : {&on_a, &on_s}) {
      rec.put(kDiscordBounds, std::max(-r->discord, r->discord - mi) + not_converged);
    }
    const double c = concurrence(trace.rho_m);
    rec.put(kEntanglementImpliesDiscord, (c > 1e-6 && on_a.discord <= 0.0) ? 1.0 : 0.0);
    if (p.phi == 0.0) rec.put(kDiscordZeroAtEnergyBasis, on_a.discord);
  }
  if (p.phi == 0.0) rec.put(kDiscordZeroAtEnergyBasis, std::abs(rec.discord_analytic));

  const double purity = trace.final.s.purity();
  rec.put(kPurityTransfer, std::abs(purity - 0.5 * (1.0 + p.eps_a * p.eps_a)));
  if (x_measurement) {
    rec.put(kSwapLimit, trace.final.s.matrix().max_abs_diff(thermal_qubit(p.eps_a).matrix()));
    rec.put(kSwapLimit, trace.final.a.matrix().max_abs_diff(thermal_qubit(p.eps_s).matrix()));
  }
  const double s0 = vn_entropy(trace.rho0);
  rec.put(kEntropyInvariance, std::abs(vn_entropy(trace.rho_m) - s0));
  rec.put(kEntropyInvariance, std::abs(vn_entropy(trace.rho_f) - s0));

  rec.put(kTotalWork, std::abs(report.total_work - (-report.delta_e_system + report.heat_reset)));
  rec.put(kTotalWork, std::abs(report.total_work - oracle.total_work));
  rec.put(kEnergyBookkeeping,
          std::abs(oracle.work_measurement + oracle.work_feedback - oracle.delta_e_total));
  rec.put(kResetMarginals, trace.reset.s.matrix().max_abs_diff(trace.final.s.matrix()));
  rec.put(kResetMarginals, trace.reset.a.matrix().max_abs_diff(thermal_qubit(p.eps_a).matrix()));

  const ConcurrenceDetail cd = concurrence_detail(trace.rho_m);
  rec.put(kConcurrenceForms, std::abs(cd.from_lambda_max - cd.from_ordered));

  if (p.phi == 0.0 && p.eps_s > 0.0) {
    const PhiCritical crit = phi_crit(p);
    ProtocolParams at = p;
    at.phi = crit.phi;
    rec.put(kPhiCritRoot, std::abs(work_feedback(at)));
    // Sign change across the root: negative just below, positive just above.
    ProtocolParams below = at;
    ProtocolParams above = at;
    below.phi = std::max(0.0, crit.phi - 1e-6);
    above.phi = std::min(kHalfPi, crit.phi + 1e-6);
    if (work_feedback(below) >= 0.0 || work_feedback(above) <= 0.0) rec.put(kPhiCritRoot, 1.0);
  }

  if (distinct) rec.put(kWorkPositive, -report.total_work);
  if (!distinct && x_measurement) rec.put(kReversibleWork, std::abs(report.total_work));
  rec.put(kHeatExceedsLoad, report.cooling_load - report.heat_reset);
  rec.put(kEntropyReductionNonNegative, -report.entropy_reduction);
  if (report.eta) rec.put(kEtaBounded, *report.eta - 1.0);
  const double ergo = ergotropy(trace.rho_m, model.hamiltonian);
  rec.put(kErgotropyBound, oracle.work_feedback - ergo);
  if (x_measurement && distinct) rec.put(kErgotropyStrictGap, oracle.work_feedback - ergo);

  const double de = report.delta_e_system;
  if (std::abs(de) > 1e-12) {
    const bool cools = de > 0.0;
    rec.put(kCoolingWindowSign, cools == report.in_cooling_window ? 0.0 : 1.0);
  }
  if (std::sin(p.phi) < p.eps_s) rec.put(kNoCoolingBelowBias, de);
  rec.cop = report.cop;
  return rec;
}

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerifyReport::first_failure() const {
  const auto it = std::find_if(checks.begin(), checks.end(),
                               [](const CheckResult& c) { return !c.passed; });
  return it == checks.end() ? nullptr : &*it;
}

std::vector<ProtocolParams> standard_grid(std::size_t eps_s_steps, std::size_t eps_a_steps,
                                          std::size_t phi_steps, double temperature) {
  std::vector<ProtocolParams> out;
  out.reserve(eps_s_steps * eps_a_steps * phi_steps);
  for (double eps_s : linspace(0.0, 0.9, eps_s_steps)) {
    for (double eps_a : linspace(eps_s, 0.99, eps_a_steps)) {
      for (double phi : linspace(0.0, kHalfPi, phi_steps)) {
        out.push_back({eps_s, eps_a, phi, temperature});
      }
    }
  }
  return out;
}

const std::vector<std::string>& corruptible_closed_forms() {
  static const std::vector<std::string> names{
      "thermal_entropy", "entropy_reduction", "work_measurement",
      "work_feedback",   "heat_reset",        "delta_e_system",
      "mutual_info", "discord"};
  return names;
}

VerifyReport run_verification(const VerifyOptions& opts) {
  if (opts.eps_s_steps < 2 || opts.eps_a_steps < 2 || opts.phi_steps < 2) {
    throw DomainError("verification grid needs at least 2 steps per axis");
  }
  if (!opts.corrupt.empty()) {
    const auto& names = corruptible_closed_forms();
    if (std::find(names.begin(), names.end(), opts.corrupt) == names.end()) {
      throw DomainError("unknown closed form to corrupt: " + opts.corrupt);
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const std::vector<ProtocolParams> grid =
      standard_grid(opts.eps_s_steps, opts.eps_a_steps, opts.phi_steps, opts.temperature);
  const std::vector<PointRecord> records = parallel_map<PointRecord>(
      grid.size(), [&](std::size_t i) { return check_point(grid[i], opts); },
      opts.threads);

  std::array<double, kCheckCount> worst;
  std::array<std::size_t, kCheckCount> samples{};
  worst.fill(kUnset);
  for (const PointRecord& r : records) {
    for (std::size_t c = 0; c < kCheckCount; ++c) {
      if (r.dev[c] == kUnset) continue;
      worst[c] = std::max(worst[c], r.dev[c]);
      ++samples[c];
    }
  }
  // Monotonicity along phi: consecutive grid entries share (eps_s, eps_a).
  for (std::size_t base = 0; base < records.size(); base += opts.phi_steps) {
    for (std::size_t k = base + 1; k < base + opts.phi_steps; ++k) {
      const double drop = records[k - 1].discord_analytic - records[k].discord_analytic;
      worst[kDiscordMonotone] = std::max(worst[kDiscordMonotone], drop);
      ++samples[kDiscordMonotone];
      if (records[k - 1].cop && records[k].cop) {
        const double cop_drop = *records[k - 1].cop - *records[k].cop;
        worst[kCopMonotone] = std::max(worst[kCopMonotone], cop_drop);
        ++samples[kCopMonotone];
      }
    }
  }

  VerifyReport report;
  for (std::size_t c = 0; c < kCheckCount; ++c) {
    CheckResult r;
    r.name = kSpecs[c].name;
    r.tolerance = kSpecs[c].tolerance;
    r.samples = samples[c];
    if (samples[c] == 0) {
      r.max_deviation = 0.0;
      // Discord checks are legitimately skipped without the numeric optimizer.
      r.passed = !opts.numeric_discord || (c != kDiscordAnalytic && c != kDiscordSymmetry);
    } else {
      r.max_deviation = worst[c];
      r.passed = kSpecs[c].strict ? worst[c] < 0.0 : worst[c] <= kSpecs[c].tolerance;
    }
    report.checks.push_back(r);
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qfc
