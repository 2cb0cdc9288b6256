#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "ckosc/classical.hpp"
#include "ckosc/figures.hpp"
#include "ckosc/output.hpp"
#include "ckosc/quantum.hpp"
#include "oracles.hpp"

using namespace ckosc;
using cd = std::complex<double>;

namespace {

// mpmath, 30 digits: 0.5 / sqrt(0.9975)
constexpr double kHalfOverOmega = 0.500626174321758870069683767621;

OscillatorParams params(double gamma, double hbar = 1.0, double omega0 = 1.0, double m = 1.0) {
  return validate_params({.m = m, .omega0 = omega0, .gamma = gamma, .hbar = hbar});
}

Scenario undriven() {
  Scenario s;
  s.params = params(0.1);
  s.init = {.Q0 = 3.0, .varphi = 0.0};
  s.force = ZeroForce{};
  s.grid = {.t_end = 20, .dt = 0.01};
  return validate_scenario(s);
}

}  // namespace

TEST_CASE("zero-point energy") {
  CHECK(zero_point_energy(params(0.1, 0.0), 3.0) == 0.0);
  CHECK(zero_point_energy(params(0.1), 0.0) == doctest::Approx(kHalfOverOmega).epsilon(1e-15));
  CHECK(zero_point_energy(params(0.0), 0.0) == 0.5);
  CHECK(zero_point_energy(params(0.0), 13.0) == 0.5);
  CHECK(zero_point_energy(params(0.1), 10.0) == doctest::Approx(kHalfOverOmega * std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("energy expectation") {
  const auto p = params(0.1);
  TrajectoryPoint rest;
  rest.t = 2.0;
  CHECK(quantum_energy(p, rest).e_quantum == zero_point_energy(p, 2.0));

  // Cantilever figure at t = 0: zero point + potential 4.5 + kinetic (0.15)^2/2.
  const auto s = figure_scenario(FigureId::Fig1a);
  const auto pts = trajectory(s);
  const auto e = quantum_energy(s.params, pts.front());
  CHECK(e.e_quantum == doctest::Approx(5.01187617432175887006968).epsilon(1e-14));
  CHECK(e.zero_point == doctest::Approx(kHalfOverOmega).epsilon(1e-15));
  // RK4 starts from the same state; its energy is the classical part.
  const auto rk = rk4_integrate(s.params, s.force, initial_ode_state(s.params, s.init), {.t_end = 1, .dt = 0.5});
  CHECK(0.5 * rk[0].v * rk[0].v + 0.5 * rk[0].q * rk[0].q == doctest::Approx(e.e_classical).epsilon(1e-15));
}

TEST_CASE("classical limit and zero-point offset on every figure scenario") {
  for (FigureId id : kAllFigures) {
    const auto s = figure_scenario(id);
    OscillatorParams limit = s.params;
    limit.hbar = 0.0;
    for (const auto& pt : trajectory(s)) {
      const double ec = classical_energy(s.params, pt);
      const auto e0 = quantum_energy(limit, pt);
      CHECK(e0.zero_point == 0.0);
      CHECK(std::abs(e0.e_quantum - ec) <= 1e-12 * ec);
      const auto e = quantum_energy(s.params, pt);
      CHECK(e.e_classical == ec);
      CHECK(std::abs(e.e_quantum - (e.e_classical + e.zero_point)) <= 1e-12 * e.e_quantum);
    }
  }
}

TEST_CASE("undriven closed form") {
  const auto s = undriven();
  const auto q = quantum_energy_params(s.params, s.init);
  CHECK(q.E0 == 4.5);
  // mpmath: atan(2 sqrt(0.9975) / 0.1)
  CHECK(q.delta == doctest::Approx(1.52077546998912660456857730482).epsilon(1e-15));
  CHECK(q.Omega0 == doctest::Approx(2 * kHalfOverOmega).epsilon(1e-15));
  for (const auto& pt : trajectory(s)) {
    const double a = quantum_energy(s.params, pt).e_quantum;
    const double b = quantum_energy_undriven(s.params, s.init, pt.t);
    CHECK(std::abs(a - b) <= 1e-9 * b);
  }

  // gamma -> 0: delta = pi/2 and E = hbar omega0 / 2 + E0 for all t
  const auto p0 = params(0.0, 1.0, 1.3);
  CHECK(quantum_energy_params(p0, {2.0, 0.1}).delta == std::numbers::pi / 2);
  for (double t : {0.0, 1.0, 7.5, 19.0}) {
    CHECK(quantum_energy_undriven(p0, {2.0, 0.1}, t) == doctest::Approx(0.65 + 0.5 * 1.69 * 4.0).epsilon(1e-14));
  }
}

TEST_CASE("uncertainty product") {
  CHECK(uncertainty_product(params(0.0)) == 0.5);
  CHECK(uncertainty_product(params(0.0, 0.37, 2.2, 3.0)) == 0.37 / 2);
  CHECK(uncertainty_product(params(0.1, 0.0)) == 0.0);
  CHECK(uncertainty_product(params(0.1)) == doctest::Approx(kHalfOverOmega).epsilon(1e-15));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double w0 = 0.1 + 5 * u(rng);
    const auto p = params(1.999 * w0 * u(rng), 0.01 + u(rng), w0, 0.1 + u(rng));
    CHECK(uncertainty_product(p) >= p.hbar / 2);
    CHECK(uncertainty_product(p) == doctest::Approx(p.hbar * p.omega0 / (2 * p.omega)).epsilon(1e-12));
    const double t = 10 * u(rng);
    CHECK(position_spread(p, t) * momentum_spread(p, t) ==
          doctest::Approx(uncertainty_product(p)).epsilon(1e-13));
  }
}

TEST_CASE("uncertainty product does not depend on the force") {
  Scenario s = figure_scenario(FigureId::Fig1b);
  s.grid = {.t_end = 2, .dt = 0.1};
  const ForceModel variants[] = {ZeroForce{}, ConstantForce{-2.0}, s.force,
                                 SawtoothForce{.f0 = 2, .m = 1, .omega_d = 1.2, .n_terms = 1000},
                                 TabulatedForce{{0.0, 1.0, 2.0}, {0.0, 5.0, -1.0}}};
  const double expected = uncertainty_product(s.params);
  for (const auto& f : variants) {
    s.force = f;
    for (const auto& row : simulate(s)) CHECK(row.uncertainty_product == expected);
  }
}

TEST_CASE("wave packet width") {
  const auto p = params(0.0);
  TrajectoryPoint pt;
  const auto w = wave_packet(p, {1.0, 0.0}, pt, std::numbers::pi / 2);
  CHECK(w.sigma == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));

  const auto classical = params(0.1, 0.0);
  const auto wc = wave_packet(classical, {1.0, 0.0}, pt, std::numbers::pi / 2);
  CHECK(wc.sigma == 0.0);
  try {
    density(wc, 0.0);
    FAIL("expected DegenerateWidth");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateWidth);
  }

  const auto pd = params(0.1, 0.7, 1.0, 2.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  for (int i = 0; i < 100; ++i) {
    TrajectoryPoint q;
    q.t = u(rng);
    const auto wp = wave_packet(pd, {1.0, 0.0}, q, std::numbers::pi / 2);
    const double law = wp.sigma * wp.sigma * pd.m * pd.omega * std::exp(pd.gamma * q.t);
    CHECK(std::abs(law - pd.hbar / 2) <= 1e-12 * pd.hbar / 2);
  }
}

TEST_CASE("eigenstate centre follows the classical trajectory for chi = pi/2") {
  const auto s = undriven();
  const auto& p = s.params;
  const double hbar = p.hbar;
  for (const auto& pt : trajectory(s)) {
    const double t = pt.t;
    // Straight from the eigenstate coefficients, with hbar kept explicit.
    const double chi = std::numbers::pi / 2;
    const cd beta = cd(0, -1) * std::sqrt(p.m * p.omega / (2 * hbar)) * s.init.Q0 *
                    std::exp(cd(0, -(p.omega * t + s.init.varphi - chi)));
    const cd A = std::sqrt(2 * hbar * p.m * p.omega) * beta;
    const cd B = 0.5 * p.m * std::exp(p.gamma * t / 2) * cd(p.omega, p.gamma / 2);
    const double centre = A.real() / (2 * B.real());

    const double qh = s.init.Q0 * std::exp(-p.gamma * t / 2) * std::cos(p.omega * t + s.init.varphi);
    CHECK(centre == doctest::Approx(qh).epsilon(1e-12).scale(s.init.Q0));
    const auto w = wave_packet(p, s.init, pt, s.chi);
    CHECK(std::abs(w.center - pt.Q) <= 1e-12 * s.init.Q0);
    CHECK(w.p_center == pt.P_k);
  }

  // Any other phase convention shifts the centre away from Q(t).
  const auto pts = trajectory(s);
  const auto off = wave_packet(p, s.init, pts[50], 0.0);
  CHECK(std::abs(off.center - pts[50].Q) > 0.1);
}

TEST_CASE("eigenstate modulus is the library density up to normalization") {
  const auto s = figure_scenario(FigureId::Fig3a);
  const auto& p = s.params;
  const auto pts = trajectory(s);
  const auto& pt = pts[777];
  const double t = pt.t;
  const double qp_offset = pt.Q - homogeneous_solution(p, s.init, t).Q_h;  // Q_p(t)
  const auto c = eigenstate_coefficients(p, s.init, t, s.chi);
  const auto w = wave_packet(p, s.init, pt, s.chi);

  auto log_modulus_sq = [&](double q) {
    const double x = q - qp_offset;
    return 2.0 * (std::exp(p.gamma * t / 2) * (c.A * x - c.B * x * x) / p.hbar).real();
  };
  const double ref = log_modulus_sq(w.center) - std::log(density(w, w.center));
  for (double k : {-3.0, -1.0, -0.25, 0.5, 2.0, 4.0}) {
    const double q = w.center + k * w.sigma;
    CHECK(log_modulus_sq(q) - std::log(density(w, q)) == doctest::Approx(ref).epsilon(1e-9));
  }
}

TEST_CASE("density moments") {
  const auto s = figure_scenario(FigureId::Fig1a);
  const auto pts = trajectory(s);
  for (std::size_t i : {std::size_t{0}, std::size_t{333}, std::size_t{1999}}) {
    const auto w = wave_packet(s.params, s.init, pts[i], s.chi);
    const double lo = w.center - 8 * w.sigma;
    const double hi = w.center + 8 * w.sigma;
    const double norm = oracle::simpson([&](double q) { return density(w, q); }, lo, hi, 10000);
    const double mean = oracle::simpson([&](double q) { return q * density(w, q); }, lo, hi, 10000);
    const double var = oracle::simpson(
        [&](double q) { return (q - w.center) * (q - w.center) * density(w, q); }, lo, hi, 10000);
    CHECK(std::abs(norm - 1) <= 1e-6);
    CHECK(std::abs(mean - pts[i].Q) <= 1e-6);
    CHECK(std::abs(var - w.sigma * w.sigma) <= 1e-6 * w.sigma * w.sigma);
    CHECK(density(w, w.center) == doctest::Approx(1 / std::sqrt(2 * std::numbers::pi * w.sigma * w.sigma)));
  }
}
