#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ckosc/classical.hpp"
#include "ckosc/numerics.hpp"
#include "oracles.hpp"

using namespace ckosc;

namespace {

OscillatorParams params(double omega0, double gamma) {
  return validate_params({.m = 1.0, .omega0 = omega0, .gamma = gamma, .hbar = 1.0});
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("accumulator: zero force stays zero") {
  const auto p = params(1.0, 0.1);
  ConvolutionAccumulator acc(0.01);
  acc.extend(ZeroForce{}, p, 5.0);
  CHECK(acc.cos_integral() == 0.0);
  CHECK(acc.sin_integral() == 0.0);
  CHECK(acc.value(p, 5.0).Q_p == 0.0);
}

TEST_CASE("accumulator: empty integral at t = 0") {
  const auto p = params(1.0, 0.1);
  ConvolutionAccumulator acc(0.01);
  acc.extend(ConstantForce{1.0}, p, 0.0);
  CHECK(acc.value(p, 0.0).Q_p == 0.0);
  CHECK(acc.value(p, 0.0).Qdot_p == 0.0);
}

TEST_CASE("accumulator: constant force, gamma = 0, against exact antiderivatives") {
  const auto p = params(1.0, 0.0);
  ConvolutionAccumulator acc(std::numbers::pi / 1000);
  acc.extend(ConstantForce{1.0}, p, std::numbers::pi);
  CHECK(std::abs(acc.cos_integral() - 0.0) <= 1e-10);
  CHECK(std::abs(acc.sin_integral() - 2.0) <= 1e-10);
}

TEST_CASE("accumulator: damped constant force against adaptive quadrature") {
  // omega0 chosen so that omega = 1 exactly (up to rounding)
  const auto p = params(std::sqrt(1.01), 0.2);
  ConvolutionAccumulator acc(0.01);
  acc.extend(ConstantForce{1.0}, p, 1.0);
  const double w = p.omega;
  const double ref_c = oracle::adaptive_simpson([&](double t) { return std::exp(0.1 * t) * std::cos(w * t); }, 0, 1, 1e-14);
  const double ref_s = oracle::adaptive_simpson([&](double t) { return std::exp(0.1 * t) * std::sin(w * t); }, 0, 1, 1e-14);
  CHECK(std::abs(acc.cos_integral() - ref_c) <= 1e-8 * std::abs(ref_c));
  CHECK(std::abs(acc.sin_integral() - ref_s) <= 1e-8 * std::abs(ref_s));
}

TEST_CASE("accumulator: step response closed form") {
  for (double gamma : {0.0, 0.1, 0.7}) {
    const auto p = params(1.3, gamma);
    const oracle::StepResponse ref{0.3, 1.3, gamma};
    ConvolutionAccumulator acc(0.01);
    std::vector<double> q, qr, v, vr;
    for (int i = 0; i <= 2000; ++i) {
      const double t = i * 0.01;
      acc.extend(ConstantForce{0.3}, p, t);
      const auto r = acc.value(p, t);
      q.push_back(r.Q_p);
      v.push_back(r.Qdot_p);
      qr.push_back(ref.q(t));
      vr.push_back(ref.v(t));
    }
    CHECK(oracle::max_abs_diff(q, qr) <= 1e-9 * oracle::sup_abs(qr));
    CHECK(oracle::max_abs_diff(v, vr) <= 1e-9 * oracle::sup_abs(vr));
  }
}

TEST_CASE("accumulator: undamped constant force returns to rest after one period") {
  const auto p = params(1.0, 0.0);
  ConvolutionAccumulator acc(2 * std::numbers::pi / 1000);
  acc.extend(ConstantForce{0.3}, p, 2 * std::numbers::pi);
  CHECK(std::abs(acc.value(p, 2 * std::numbers::pi).Q_p) <= 1e-9);
}

TEST_CASE("accumulator: lattice and staleness errors") {
  const auto p = params(1.0, 0.1);
  ConvolutionAccumulator acc(0.1);
  CHECK(code_of([&] { acc.extend(ConstantForce{1}, p, 0.15); }) == ErrorCode::GridMismatch);
  acc.extend(ConstantForce{1}, p, 1.0);
  CHECK(acc.panels() == 10);
  CHECK(code_of([&] { acc.extend(ConstantForce{1}, p, 0.5); }) == ErrorCode::GridMismatch);
  CHECK(code_of([&] { acc.value(p, 0.9); }) == ErrorCode::StaleAccumulator);
  CHECK_NOTHROW(acc.value(p, 1.0));
  CHECK_THROWS_AS(ConvolutionAccumulator(0.0), Error);
}

TEST_CASE("accumulator: chunked extension is bitwise identical to one-shot") {
  const auto p = params(1.0, 0.1);
  const ForceModel f = SawtoothForce{.f0 = 1, .m = 1, .omega_d = 0.3, .n_terms = 50};
  ConvolutionAccumulator a(0.01), b(0.01);
  for (int i = 1; i <= 700; ++i) a.extend(f, p, i * 0.01);
  b.extend(f, p, 7.0);
  CHECK(a.cos_integral() == b.cos_integral());
  CHECK(a.sin_integral() == b.sin_integral());
}

TEST_CASE("accumulator: trig decomposition equals naive convolution quadrature") {
  const auto p = params(1.0, 0.1);
  const ForceModel force = TmafmForce{.F_ext = 0.3, .k = 0.5, .D0 = 0.5, .a0 = 0.3, .omega_d = 0.3, .m_eff = 1};
  const double h = 0.01;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick(1, 2000);
  std::vector<int> ks(100);
  for (auto& k : ks) k = pick(rng);
  std::sort(ks.begin(), ks.end());

  ConvolutionAccumulator acc(h);
  std::vector<double> fast, naive;
  for (int k : ks) {
    const double t = k * h;
    acc.extend(force, p, t);
    fast.push_back(acc.value(p, t).Q_p);
    // Simpson on the same nodes, directly on f(t')/w e^{-g(t-t')/2} sin(w(t-t')).
    auto g = [&](double tp) {
      return eval_force(force, tp) / p.omega * std::exp(-p.gamma * (t - tp) / 2) * std::sin(p.omega * (t - tp));
    };
    naive.push_back(oracle::simpson(g, 0.0, t, 2 * k));
  }
  CHECK(oracle::max_abs_diff(fast, naive) <= 1e-10 * oracle::sup_abs(naive));
}

TEST_CASE("rk4: undamped period") {
  const auto p = params(1.0, 0.0);
  const TimeGrid grid{.t_end = 2 * std::numbers::pi, .dt = 2 * std::numbers::pi / 6000};
  const auto s = rk4_integrate(p, ZeroForce{}, {0, 1.0, 0.0}, grid);
  REQUIRE(s.size() == 6001);
  CHECK(s.back().t == doctest::Approx(2 * std::numbers::pi));
  CHECK(std::abs(s.back().q - 1.0) <= 1e-8);
}

TEST_CASE("rk4: free decay and step response") {
  const auto p = params(1.0, 0.1);
  const TimeGrid grid{.t_end = 20, .dt = 1e-3};
  {
    const oracle::FreeDecay ref{3.0, 0.0, 1.0, 0.1};
    const auto s = rk4_integrate(p, ZeroForce{}, {0, 3.0, -0.1 / 2 * 3.0}, grid);
    std::vector<double> q, qr;
    for (const auto& x : s) {
      q.push_back(x.q);
      qr.push_back(ref.q(x.t));
    }
    CHECK(oracle::max_abs_diff(q, qr) <= 1e-7 * oracle::sup_abs(qr));
  }
  {
    const oracle::StepResponse ref{0.3, 1.0, 0.1};
    const auto s = rk4_integrate(p, ConstantForce{0.3}, {0, 0.0, 0.0}, grid);
    std::vector<double> q, qr;
    for (const auto& x : s) {
      q.push_back(x.q);
      qr.push_back(ref.q(x.t));
    }
    CHECK(oracle::max_abs_diff(q, qr) <= 1e-7 * oracle::sup_abs(qr));
  }
}

TEST_CASE("rk4: fourth-order convergence") {
  const auto p = params(1.0, 0.1);
  const oracle::FreeDecay ref{3.0, 0.0, 1.0, 0.1};
  auto error = [&](double dt) {
    const auto s = rk4_integrate(p, ZeroForce{}, {0, 3.0, -0.15}, {.t_end = 20, .dt = dt});
    double e = 0;
    for (const auto& x : s) e = std::max(e, std::abs(x.q - ref.q(x.t)));
    return e;
  };
  const double ratio = error(0.1) / error(0.05);
  CHECK(ratio >= 8.0);
  CHECK(ratio <= 20.0);
}

TEST_CASE("rk4: energy drift over ten undamped periods") {
  const auto p = params(1.0, 0.0);
  const auto s = rk4_integrate(p, ZeroForce{}, {0, 1.0, 0.0}, {.t_end = 20 * std::numbers::pi, .dt = 1e-3});
  double drift = 0;
  for (const auto& x : s) drift = std::max(drift, std::abs(0.5 * (x.v * x.v + x.q * x.q) - 0.5) / 0.5);
  CHECK(drift <= 1e-8);
}
