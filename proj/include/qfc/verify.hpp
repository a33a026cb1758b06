#pragma once

// Grid-wide cross-checks of every closed form against the density-matrix
// evaluation, plus the thermodynamic and correlation inequalities.

#include "qfc/correlations.hpp"
#include "qfc/protocol.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qfc {

struct VerifyOptions {
  std::size_t eps_s_steps = 12;
  std::size_t eps_a_steps = 12;
  std::size_t phi_steps = 12;
  double temperature = 1.0;
  unsigned threads = 0;
  bool numeric_discord = true;
  OptimizerOptions discord;
  /// Name of a closed form to perturb by 1e-6 (test fixture for the failure path).
  std::string corrupt;
};

struct CheckResult {
  std::string name;
  /// Largest deviation (equalities) or largest violation margin (inequalities).
  double max_deviation = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  bool passed = true;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  [[nodiscard]] bool all_passed() const;
  [[nodiscard]] const CheckResult* first_failure() const;
};

/// eps_s in [0, 0.9], eps_a in [eps_s, 0.99], phi in [0, pi/2], all inclusive.
std::vector<ProtocolParams> standard_grid(std::size_t eps_s_steps, std::size_t eps_a_steps,
                                          std::size_t phi_steps, double temperature = 1.0);

/// Names accepted by VerifyOptions::corrupt.
const std::vector<std::string>& corruptible_closed_forms();

VerifyReport run_verification(const VerifyOptions& opts = {});

}  // namespace qfc
