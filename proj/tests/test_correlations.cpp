#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfc/correlations.hpp"
#include "qfc/error.hpp"
#include "qfc/protocol.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>
#include <type_traits>

using namespace qfc;
using qfc::test::kHalfPi;

namespace {

const double kLn2 = std::log(2.0);

DensityMatrix bell_state() {
  ComplexMatrix m(4);
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return DensityMatrix(m);
}

DensityMatrix werner(double p) {
  return DensityMatrix(Complex(p) * bell_state().matrix() +
                       Complex((1 - p) / 4) * ComplexMatrix::identity(4));
}

DensityMatrix protocol_state(double eps_s, double eps_a, double phi) {
  return post_measurement_state({eps_s, eps_a, phi, 1.0});
}

}  // namespace

// The analytic discord does not depend on the ancilla bias, by signature.
static_assert(std::is_same_v<decltype(&discord_analytic), double (*)(double, double)>);

TEST_CASE("concurrence of reference states") {
  CHECK(concurrence(bell_state()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence(tensor(thermal_qubit(0.3), thermal_qubit(0.7))) < 1e-12);
  for (double p : {0.1, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    CHECK(concurrence(werner(p)) ==
          doctest::Approx(std::max(0.0, (3 * p - 1) / 2)).epsilon(1e-10));
  }
  CHECK(entanglement_of_formation(bell_state()) == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(eof_from_concurrence(0.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(kLn2));
}

TEST_CASE("both concurrence evaluations agree on random states") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const DensityMatrix rho = qfc::test::random_state(rng, 4);
    const ConcurrenceDetail d = concurrence_detail(rho);
    CHECK(std::abs(d.from_lambda_max - d.from_ordered) < 1e-9);
    const double c = concurrence(rho);
    CHECK(c >= 0.0);
    CHECK(c <= 1.0);
    // Local unitaries leave it unchanged.
    const Unitary local(tensor(qfc::test::random_unitary(rng, 2), qfc::test::random_unitary(rng, 2)));
    CHECK(std::abs(concurrence(local.apply(rho)) - c) < 1e-9);
  }
}

TEST_CASE("protocol correlations at eps_s = 0.4, eps_a = 0.8") {
  CHECK(concurrence(protocol_state(0.4, 0.8, 0.0)) < 1e-12);
  CHECK(concurrence(protocol_state(0.4, 0.8, kHalfPi / 2)) ==
        doctest::Approx(0.15864181076090042).epsilon(1e-10));
  CHECK(concurrence(protocol_state(0.4, 0.8, kHalfPi)) == doctest::Approx(0.26).epsilon(1e-10));

  const double mi_ref[] = {0.31595250448970735, 0.38397286170539047, 0.450347085673549};
  const double phis[] = {0.0, kHalfPi / 2, kHalfPi};
  for (int k = 0; k < 3; ++k) {
    CHECK(mutual_information(protocol_state(0.4, 0.8, phis[k])) ==
          doctest::Approx(mi_ref[k]).epsilon(1e-12));
    CHECK(mutual_information_analytic({0.4, 0.8, phis[k], 1.0}) ==
          doctest::Approx(mi_ref[k]).epsilon(1e-12));
  }

  CHECK(discord_analytic(0.4, kHalfPi / 2) == doctest::Approx(0.04173170855896463).epsilon(1e-12));
  CHECK(discord_analytic(0.4, kHalfPi) == doctest::Approx(0.08228287850505189).epsilon(1e-12));
  CHECK(std::abs(discord_analytic(0.4, 0.0)) < 1e-15);
}

TEST_CASE("numeric discord reproduces the analytic form from either side") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const ProtocolParams p = qfc::test::random_params(rng);
    const DensityMatrix rho = post_measurement_state(p);
    const double ref = discord_analytic(p.eps_s, p.phi);
    CAPTURE(p.eps_s);
    CAPTURE(p.eps_a);
    CAPTURE(p.phi);
    const DiscordResult a = discord_search(rho, Subsystem::A);
    const DiscordResult s = discord_search(rho, Subsystem::S);
    CHECK(a.converged);
    CHECK(s.converged);
    CHECK(std::abs(a.discord - ref) < 1e-6);
    CHECK(std::abs(s.discord - ref) < 1e-6);
    CHECK(std::abs(a.discord - s.discord) < 1e-6);
    CHECK(a.discord <= a.mutual_info + 1e-12);
    CHECK(std::abs(a.classical + a.discord - a.mutual_info) < 1e-12);
  }
}

TEST_CASE("discord of reference states") {
  const DensityMatrix product = tensor(thermal_qubit(0.3), thermal_qubit(0.6));
  CHECK(discord_numeric(product, Subsystem::A) < 1e-9);
  CHECK(discord_numeric(bell_state(), Subsystem::A) == doctest::Approx(kLn2).epsilon(1e-8));
  CHECK(discord_numeric(bell_state(), Subsystem::S) == doctest::Approx(kLn2).epsilon(1e-8));
  // Classical-quantum state: zero discord when the classical side is measured.
  ComplexMatrix cq(4);
  cq(0, 0) = 0.25;
  cq(1, 1) = 0.25;
  cq(2, 2) = 0.25;
  cq(3, 3) = 0.25;
  cq(2, 3) = cq(3, 2) = 0.2;  // |1><1| x (coherent ancilla)
  CHECK(discord_numeric(DensityMatrix(cq), Subsystem::S) < 1e-9);
}

TEST_CASE("discord bounds on random states") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = qfc::test::random_state(rng, 4);
    const DiscordResult r = discord_search(rho, Subsystem::A);
    CHECK(r.discord >= -1e-12);
    CHECK(r.discord <= vn_entropy(partial_trace(rho, Subsystem::A)) + 1e-9);
    CHECK(r.discord <= r.mutual_info + 1e-12);
  }
}

TEST_CASE("analytic discord is monotone in phi and vanishes at phi = 0") {
  for (double eps_s : {0.0, 0.1, 0.4, 0.9}) {
    CHECK(std::abs(discord_analytic(eps_s, 0.0)) < 1e-15);
    double previous = -1.0;
    for (int k = 0; k <= 100; ++k) {
      const double d = discord_analytic(eps_s, kHalfPi * k / 100.0);
      CHECK(d >= previous - 1e-15);
      previous = d;
    }
  }
  CHECK_THROWS_AS(discord_analytic(0.4, 2.0), DomainError);
}

TEST_CASE("entanglement implies discord on protocol states") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const ProtocolParams p = qfc::test::random_params(rng);
    if (concurrence(post_measurement_state(p)) > 1e-9) CHECK(discord_analytic(p.eps_s, p.phi) > 0.0);
  }
}

TEST_CASE("minimum discord for real cooling") {
  CHECK(discord_threshold(0.4) == doctest::Approx(0.0134903).epsilon(1e-5));
  CHECK(discord_threshold(0.4) == doctest::Approx(discord_analytic(0.4, std::asin(0.4))));
  CHECK_THROWS_AS(discord_threshold(0.0), DomainError);
}

TEST_CASE("measurement basis projectors are a resolution of identity") {
  const MeasurementBasis b{0.7, 1.9};
  const ComplexMatrix sum = b.projector(+1) + b.projector(-1);
  CHECK(sum.approx_equal(identity2(), 1e-15));
  CHECK((b.projector(+1) * b.projector(+1)).approx_equal(b.projector(+1), 1e-14));
  const auto n = b.axis();
  CHECK(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] == doctest::Approx(1.0));
  CHECK_THROWS_AS(static_cast<void>(b.projector(0)), DomainError);
}

TEST_CASE("correlation report") {
  const CorrelationReport r = correlation_report({0.4, 0.8, kHalfPi, 1.0}, true);
  REQUIRE(r.discord_a);
  REQUIRE(r.discord_s);
  CHECK(*r.discord_a == doctest::Approx(r.discord_analytic).epsilon(1e-6));
  CHECK(r.concurrence == doctest::Approx(0.26).epsilon(1e-10));
  const CorrelationReport fast = correlation_report({0.4, 0.8, kHalfPi, 1.0}, false);
  CHECK_FALSE(fast.discord_a.has_value());
}
