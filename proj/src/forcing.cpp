#include "ckosc/forcing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ckosc/error.hpp"

namespace ckosc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::InvalidForce, message);
}

}  // namespace

void validate_force(const ForceModel& model) {
  std::visit(
      overloaded{
          [](const ZeroForce&) {},
          [](const ConstantForce& c) { require(std::isfinite(c.f0), "constant force: f0 must be finite"); },
          [](const TmafmForce& f) {
            require(f.m_eff > 0.0, "tmafm force: m_eff must be > 0");
            require(f.omega_d > 0.0, "tmafm force: omega_d must be > 0");
          },
          [](const SawtoothForce& f) {
            require(f.m > 0.0, "sawtooth force: m must be > 0");
            require(f.omega_d > 0.0, "sawtooth force: omega_d must be > 0");
            require(f.n_terms >= 1, "sawtooth force: n_terms must be >= 1");
          },
          [](const TabulatedForce& f) {
            require(f.t.size() >= 2, "tabulated force: need at least two samples");
            require(f.t.size() == f.f.size(), "tabulated force: t and f lengths differ");
            for (std::size_t i = 1; i < f.t.size(); ++i) {
              require(f.t[i] > f.t[i - 1], "tabulated force: sample times must be strictly increasing");
            }
          },
      },
      model);
}

double tmafm_force(double F_ext, double k, double D0, double a0, double omega_d,
                   double m_eff, double t) {
  return (F_ext + k * (D0 - a0 * std::sin(omega_d * t))) / m_eff;
}

double sawtooth_series(double f0, double m, double omega_d, int n_terms, double t) {
  const double tau = 2.0 * std::numbers::pi / omega_d;
  // remainder() is exact and odd, so wrapping keeps both symmetries.
  const double x = omega_d * std::remainder(t, tau);
  double sum = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    const double sign = (n % 2 == 1) ? 1.0 : -1.0;
    sum += sign / n * std::sin(n * x);
  }
  return f0 / (std::numbers::pi * m) * sum;
}

double sawtooth_ramp_oracle(double f0, double m, double omega_d, double t) {
  const double tau = 2.0 * std::numbers::pi / omega_d;
  double wrapped = std::remainder(t, tau);
  if (wrapped <= -tau / 2) wrapped += tau;
  return f0 * wrapped / (m * tau);
}

double tabulated_force(const TabulatedForce& table, double t) {
  const auto& ts = table.t;
  if (ts.size() < 2 || t < ts.front() || t > ts.back()) {
    throw Error(ErrorCode::OutOfRange,
                "tabulated force queried at t=" + std::to_string(t) + " outside the sample window");
  }
  auto upper = std::upper_bound(ts.begin(), ts.end(), t);
  if (upper == ts.end()) return table.f.back();
  const auto i = static_cast<std::size_t>(upper - ts.begin()) - 1;
  const double w = (t - ts[i]) / (ts[i + 1] - ts[i]);
  return table.f[i] + w * (table.f[i + 1] - table.f[i]);
}

double eval_force(const ForceModel& model, double t) {
  return std::visit(
      overloaded{
          [](const ZeroForce&) { return 0.0; },
          [](const ConstantForce& c) { return c.f0; },
          [t](const TmafmForce& f) {
            return tmafm_force(f.F_ext, f.k, f.D0, f.a0, f.omega_d, f.m_eff, t);
          },
          [t](const SawtoothForce& f) {
            return sawtooth_series(f.f0, f.m, f.omega_d, f.n_terms, t);
          },
          [t](const TabulatedForce& f) { return tabulated_force(f, t); },
      },
      model);
}

const char* force_name(const ForceModel& model) {
  static constexpr const char* names[] = {"zero", "constant", "tmafm", "sawtooth", "tabulated"};
  return names[model.index()];
}

}  // namespace ckosc
