// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "qfc/correlations.hpp"
#include "qfc/protocol.hpp"
#include "qfc/sweep.hpp"
#include "qfc/thermo.hpp"
#include "qfc/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#ifndef QFC_BINARY
#error "QFC_BINARY must name the qfc executable"
#endif

using namespace qfc;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

struct Outcome {
  bool passed;
  std::string detail;
};

struct Spawned {
  int status;
  std::string out;
  double seconds;
};

Spawned spawn(const std::string& args) {
  const std::string cmd = std::string(QFC_BINARY) + " " + args;
  const auto t0 = std::chrono::steady_clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, "", 0.0};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {status, out, dt};
}

std::string fmt(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

using Row = std::map<std::string, std::string>;

std::vector<Row> read_csv(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> header;
  std::vector<Row> rows;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (header.empty()) {
      header = cells;
      continue;
    }
    Row r;
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) r[header[i]] = cells[i];
    rows.push_back(std::move(r));
  }
  return rows;
}

double num(const Row& r, const std::string& key) { return std::stod(r.at(key)); }

const CheckResult* find_check(const VerifyReport& rep, const std::string& name) {
  for (const CheckResult& c : rep.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

// All named checks present and passing; detail lists their worst deviations.
Outcome checks_pass(const VerifyReport& rep, const std::vector<std::string>& names) {
  Outcome o{true, ""};
  for (const std::string& n : names) {
    const CheckResult* c = find_check(rep, n);
    if (c == nullptr) return {false, "missing check " + n};
    o.passed = o.passed && c->passed;
    o.detail += (o.detail.empty() ? "" : "; ") + n + " " + fmt(c->max_deviation) +
                (c->passed ? "" : " FAILED");
  }
  return o;
}

Outcome ac1_threshold() {
  const Spawned s = spawn("threshold --eps-s 0.4");
  if (s.status != 0) return {false, "exit status " + std::to_string(s.status)};
  const double d = nlohmann::json::parse(s.out)["delta_min"].get<double>();
  const bool ok = std::abs(d - 1.35e-2) <= 5e-4 && s.seconds < 1.0;
  return {ok, "delta_min " + fmt(d) + " nats, " + fmt(s.seconds) + " s"};
}

Outcome ac2_chi_optimum() {
  const Spawned s = spawn("optimize --objective chi --eps-s 0.4 --phi 1.5707963267948966");
  if (s.status != 0) return {false, "exit status " + std::to_string(s.status)};
  const double x = nlohmann::json::parse(s.out)["working_point"]["eps_a_star"].get<double>();
  const bool ok = x >= 0.75 && x <= 0.95 && s.seconds < 5.0;
  return {ok, "eps_a* " + fmt(x) + ", " + fmt(s.seconds) + " s"};
}

Outcome ac3_swap_limit() {
  double worst = 0.0;
  std::size_t n = 0;
  for (const ProtocolParams& p : standard_grid(12, 12, 1)) {
    const ProtocolTrace t = run_protocol({p.eps_s, p.eps_a, kHalfPi, 1.0});
    worst = std::max({worst, t.final.s.matrix().max_abs_diff(t.initial.a.matrix()),
                      t.final.a.matrix().max_abs_diff(t.initial.s.matrix())});
    ++n;
  }
  return {worst <= 1e-10, "max marginal deviation " + fmt(worst) + " over " + std::to_string(n)};
}

Outcome ac4_purity(const VerifyReport& rep) {
  double worst = 0.0;
  std::size_t n = 0;
  for (const ProtocolParams& p : standard_grid(12, 12, 12)) {
    const ProtocolTrace t = run_protocol(p);
    worst = std::max(worst, std::abs(t.final.s.purity() - 0.5 * (1 + p.eps_a * p.eps_a)));
    ++n;
  }
  const Outcome suite = checks_pass(rep, {"purity_transfer"});
  return {worst <= 1e-10 && suite.passed,
          "max deviation " + fmt(worst) + " over " + std::to_string(n) + "; " + suite.detail};
}

// Characteristic curves: interior COP optimum, P* falling and COP rising with phi,
// cooling inside the window only.
Outcome curve_features() {
  const Spawned s = spawn("sweep --eps-s 0.4");
  if (s.status != 0) return {false, "sweep exit status " + std::to_string(s.status)};
  const auto rows = read_csv(s.out);
  std::map<double, std::vector<const Row*>> curves;
  for (const Row& r : rows) curves[num(r, "phi")].push_back(&r);
  if (curves.size() != 3) return {false, "expected three curves"};

  double last_load_star = std::numeric_limits<double>::infinity();
  const std::vector<const Row*>* previous = nullptr;
  for (const auto& [phi, curve] : curves) {
    std::size_t best = 0;
    for (std::size_t k = 0; k < curve.size(); ++k) {
      if (num(*curve[k], "cop") > num(*curve[best], "cop")) best = k;
      const double eps_a = num(*curve[k], "eps_a");
      const bool window = eps_a * std::sin(phi) > 0.4;
      if ((curve[k]->at("in_cooling_window") == "true") != window) return {false, "window flag"};
      const double de = delta_e_system({0.4, eps_a, phi, 1.0});
      if (window != (de > 0.0) && std::abs(eps_a * std::sin(phi) - 0.4) > 1e-9) {
        return {false, "cooling outside the window at phi " + fmt(phi)};
      }
    }
    if (best == 0 || best + 1 == curve.size()) return {false, "COP optimum on the boundary"};
    const double load_star = num(*curve[best], "P");
    if (!(load_star < last_load_star)) return {false, "P* does not fall with phi"};
    last_load_star = load_star;
    if (previous != nullptr) {
      for (std::size_t k = 1; k < curve.size(); ++k) {
        if (!(num(*curve[k], "cop") > num(*(*previous)[k], "cop"))) return {false, "COP not rising in phi"};
      }
    }
    previous = &curve;
  }
  return {true, "3 curves, interior COP optima, P* falling with phi"};
}

// Correlation landscape: separable low-phi region, iso-discord rows, boundary series.
Outcome landscape_features() {
  const auto dir = std::filesystem::temp_directory_path();
  const auto grid_path = dir / "qfc_acceptance_landscape.csv";
  const auto bnd_path = dir / "qfc_acceptance_boundary.csv";
  const Spawned s = spawn("sweep --eps-s 0.4 --landscape --n-phi 48 --n-eps-a 101 -o " +
                          grid_path.string() + " --boundary-out " + bnd_path.string());
  if (s.status != 0) return {false, "landscape exit status " + std::to_string(s.status)};
  const auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  const auto rows = read_csv(slurp(grid_path));
  const auto bnd = read_csv(slurp(bnd_path));
  std::filesystem::remove(grid_path);
  std::filesystem::remove(bnd_path);
  if (rows.size() != 48 * 101) return {false, "landscape size " + std::to_string(rows.size())};

  std::map<double, double> separable_below;  // eps_a -> boundary phi
  std::size_t window_points = 0;
  for (const Row& r : bnd) {
    if (r.at("series") == "separability") separable_below[num(r, "eps_a")] = num(r, "phi");
    if (r.at("series") == "cooling_window") {
      ++window_points;
      if (std::abs(num(r, "eps_a") * std::sin(num(r, "phi")) - 0.4) > 1e-9) {
        return {false, "cooling-window series off eps_a sin phi = eps_s"};
      }
    }
  }
  if (separable_below.empty() || window_points == 0) return {false, "boundary series missing"};

  std::map<double, std::string> discord_by_phi;
  const Row* max_eof = &rows.front();
  const Row* max_mi = &rows.front();
  for (const Row& r : rows) {
    const double phi = num(r, "phi");
    const double eps_a = num(r, "eps_a");
    const double c = num(r, "concurrence");
    if (phi == 0.0 && c != 0.0) return {false, "entangled at phi = 0"};
    if (const auto it = separable_below.find(eps_a); it != separable_below.end()) {
      if ((phi < it->second - 1e-6 && c > 0.0) || (phi > it->second + 1e-6 && c <= 0.0)) {
        return {false, "concurrence disagrees with the separability boundary"};
      }
    }
    const auto [it, fresh] = discord_by_phi.emplace(phi, r.at("discord"));
    if (!fresh && it->second != r.at("discord")) return {false, "discord varies with eps_a"};
    if (num(r, "eof") > num(*max_eof, "eof")) max_eof = &r;
    if (num(r, "mutual_info") > num(*max_mi, "mutual_info")) max_mi = &r;
  }
  // CSV values carry 12 significant digits.
  const auto at_corner = [](const Row& r) {
    return std::abs(num(r, "phi") - kHalfPi) < 1e-10 && std::abs(num(r, "eps_a") - kEpsAUpper) < 1e-10;
  };
  const bool corner = at_corner(*max_eof) && at_corner(*max_mi);
  if (!corner) return {false, "entanglement/MI maxima not at (pi/2, 1)"};
  return {true, std::to_string(separable_below.size()) + " separability crossings, " +
                    std::to_string(discord_by_phi.size()) + " iso-discord rows"};
}

Outcome ac5_closed_forms(const VerifyReport& rep) {
  const std::vector<std::string> names{"thermal_entropy", "entropy_reduction", "work_measurement",
                                       "heat_reset", "delta_e_system", "work_feedback",
                                       "discord_closed_form_x_basis", "mutual_info"};
  Outcome o = checks_pass(rep, names);
  for (const std::string& n : names) {
    const CheckResult* c = find_check(rep, n);
    o.passed = o.passed && c != nullptr && c->tolerance <= 1e-10 && c->samples >= 1728;
  }
  const Outcome curves = curve_features();
  const Outcome land = landscape_features();
  o.passed = o.passed && rep.seconds < 60.0 && curves.passed && land.passed;
  o.detail += "; suite " + fmt(rep.seconds) + " s; curves: " + curves.detail +
              "; landscape: " + land.detail;
  return o;
}

Outcome ac6_inequalities(const VerifyReport& rep) {
  return checks_pass(rep, {"work_positive", "heat_exceeds_load", "eta_at_most_one",
                           "entropy_reduction_nonnegative", "ergotropy_bounds_feedback_work",
                           "ergotropy_strict_gap_x_measurement"});
}

// The analytic discord takes no ancilla bias.
static_assert(std::is_same_v<decltype(&discord_analytic), double (*)(double, double)>);

Outcome ac7_discord(const VerifyReport& rep) {
  return checks_pass(rep, {"discord_side_symmetry", "discord_closed_form_vs_numeric", "discord_monotone_in_phi",
                           "discord_zero_at_energy_basis"});
}

Outcome ac8_feedback_sign() {
  const ProtocolParams p{0.4, 0.8, kHalfPi, 1.0};
  const double y = 0.8 * std::atanh(0.4) + 0.4 * std::atanh(0.8);
  const double wf = work_feedback(p);  // from the density matrices
  bool ok = std::abs(wf - y) <= 1e-10 && wf > 0.0;

  // Root of the matrix-evaluated feedback work by bisection vs the closed-form angle.
  double worst = 0.0;
  for (double eps_s : {0.1, 0.4, 0.7}) {
    for (double eps_a : {eps_s, 0.8, 0.95}) {
      const auto f = [&](double phi) { return work_feedback({eps_s, eps_a, phi, 1.0}); };
      double lo = 0.0;
      double hi = kHalfPi;
      if (!(f(lo) < 0.0 && f(hi) > 0.0)) return {false, "no sign change"};
      for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
      }
      worst = std::max(worst, std::abs(0.5 * (lo + hi) - phi_crit({eps_s, eps_a, 0.0, 1.0}).phi));
    }
  }
  ok = ok && worst <= 1e-9;
  return {ok, "W_f " + fmt(wf) + " vs T*y " + fmt(y) + "; max |root - phi_crit| " + fmt(worst)};
}

}  // namespace

int main() {
  const VerifyReport rep = run_verification();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 discord threshold for cooling", ac1_threshold},
      {"AC2 chi-optimal ancilla bias", ac2_chi_optimum},
      {"AC3 swap limit", ac3_swap_limit},
      {"AC4 purity transfer", [&] { return ac4_purity(rep); }},
      {"AC5 closed forms vs matrices, figure data", [&] { return ac5_closed_forms(rep); }},
      {"AC6 thermodynamic inequalities", [&] { return ac6_inequalities(rep); }},
      {"AC7 discord properties", [&] { return ac7_discord(rep); }},
      {"AC8 feedback work sign and phi_crit", ac8_feedback_sign},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.passed ? 0 : 1;
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << " | " << o.detail << "\n";
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
