#pragma once

// Command-line front end. Every subcommand is callable in-process with its
// own output streams so tests can drive it without spawning the binary.

#include "qfc/correlations.hpp"
#include "qfc/protocol.hpp"
#include "qfc/sweep.hpp"
#include "qfc/verify.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qfc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

inline constexpr int kSchemaVersion = 1;

/// Tolerance of the closed-form vs matrix pairs reported by `run --verify`.
inline constexpr double kRunVerifyTolerance = 1e-10;
/// Tolerance of the numeric vs analytic discord pair.
inline constexpr double kRunDiscordTolerance = 1e-6;

enum class Format { Json, Csv };

struct RunConfig {
  ProtocolParams params;
  Format format = Format::Json;
  bool verify = false;
  OptimizerOptions discord;
  std::string output;  // empty = standard output
};

struct SweepConfig {
  double eps_s = 0.4;
  std::vector<double> phis;  // empty = {0, pi/4, 2pi/5}
  std::size_t n_eps_a = 101;
  double temperature = 1.0;
  bool landscape = false;
  std::size_t n_phi = 48;  // landscape rows
  bool numeric_discord = false;
  bool with_metadata = false;
  std::string output;
  std::string boundary_output;
  unsigned threads = 0;
};

struct OptimizeConfig {
  Objective objective = Objective::Chi;
  double eps_s = 0.4;
  double phi = 1.5707963267948966;
  double temperature = 1.0;
  WorkingPointOptions search;
  Format format = Format::Json;
  std::string output;
};

struct ThresholdConfig {
  double eps_s = 0.4;
  Format format = Format::Json;
  std::string output;
};

struct VerifyConfig {
  VerifyOptions options;
  Format format = Format::Json;  // of the trailing summary
  bool table = true;  // human-readable table before the summary
  std::string output;
};

/// Fixed column list of sweep/run CSV output.
const std::string& csv_header();

/// 12 significant digits, "%.12g", with negative zero printed as 0.
std::string format_float(double v);

/// One CSV row for a fully evaluated point (correlations required).
std::string csv_row(double eps_s, double temperature, const CurvePoint& pt);

/// QFC_THREADS: unset or 0 = auto. Throws DomainError on garbage.
unsigned threads_from_env();

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);
int cmd_optimize(const OptimizeConfig& config, std::ostream& out, std::ostream& err);
int cmd_threshold(const ThresholdConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches to a subcommand.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfc::cli
