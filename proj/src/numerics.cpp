#include "ckosc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ckosc {

namespace {

struct Integrand {
  double c;
  double s;
};

Integrand integrand(const ForceModel& force, const OscillatorParams& params, double t) {
  const double weighted = eval_force(force, t) * std::exp(params.gamma * t / 2.0);
  return {weighted * std::cos(params.omega * t), weighted * std::sin(params.omega * t)};
}

}  // namespace

ConvolutionAccumulator::ConvolutionAccumulator(double step) : step_(step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::InvalidGrid, "accumulator step must be positive");
  }
}

void ConvolutionAccumulator::extend(const ForceModel& force, const OscillatorParams& params,
                                    double t_new) {
  const double k_real = (t_new - t_last()) / step_;
  const double k_round = std::round(k_real);
  if (k_round < 0.0 || std::abs(k_real - k_round) > 1e-9 * std::max(1.0, std::abs(k_real))) {
    std::ostringstream os;
    os << "t_new=" << t_new << " is not on the step lattice after t_last=" << t_last()
       << " (step " << step_ << ")";
    throw Error(ErrorCode::GridMismatch, os.str());
  }
  const auto k = static_cast<std::int64_t>(k_round);
  if (k == 0) return;

  if (!have_left_) {
    const Integrand left = integrand(force, params, t_last());
    left_c_ = left.c;
    left_s_ = left.s;
    have_left_ = true;
  }
  for (std::int64_t i = 0; i < k; ++i) {
    const double a = static_cast<double>(panels_) * step_;
    const double b = static_cast<double>(panels_ + 1) * step_;
    const Integrand mid = integrand(force, params, 0.5 * (a + b));
    const Integrand right = integrand(force, params, b);
    s_c_ += step_ / 6.0 * (left_c_ + 4.0 * mid.c + right.c);
    s_s_ += step_ / 6.0 * (left_s_ + 4.0 * mid.s + right.s);
    left_c_ = right.c;
    left_s_ = right.s;
    ++panels_;
  }
}

ParticularResponse ConvolutionAccumulator::value(const OscillatorParams& params, double t) const {
  if (std::abs(t - t_last()) > 1e-9 * std::max(step_, std::abs(t))) {
    std::ostringstream os;
    os << "accumulator is at t=" << t_last() << ", queried at t=" << t;
    throw Error(ErrorCode::StaleAccumulator, os.str());
  }
  const double envelope = std::exp(-params.gamma * t / 2.0);
  const double c = std::cos(params.omega * t);
  const double s = std::sin(params.omega * t);
  ParticularResponse r;
  r.Q_p = envelope / params.omega * (s * s_c_ - c * s_s_);
  // d/dt under the integral; the boundary term carries sin(0) and vanishes.
  r.Qdot_p = -params.gamma / 2.0 * r.Q_p + envelope * (c * s_c_ + s * s_s_);
  return r;
}

std::vector<OdeState> rk4_integrate(const OscillatorParams& params, const ForceModel& force,
                                    const OdeState& init, const TimeGrid& grid) {
  const double w2 = params.omega0 * params.omega0;
  const double gamma = params.gamma;
  auto accel = [&](double t, double q, double v) {
    return eval_force(force, t) - gamma * v - w2 * q;
  };

  const std::size_t n = grid.size();
  const double h = grid.dt;
  std::vector<OdeState> out;
  out.reserve(n);
  OdeState s{0.0, init.q, init.v};
  out.push_back(s);
  for (std::size_t i = 1; i < n; ++i) {
    const double t = s.t;
    const double k1q = s.v;
    const double k1v = accel(t, s.q, s.v);
    const double k2q = s.v + 0.5 * h * k1v;
    const double k2v = accel(t + 0.5 * h, s.q + 0.5 * h * k1q, k2q);
    const double k3q = s.v + 0.5 * h * k2v;
    const double k3v = accel(t + 0.5 * h, s.q + 0.5 * h * k2q, k3q);
    const double k4q = s.v + h * k3v;
    const double k4v = accel(t + h, s.q + h * k3q, k4q);
    s.q += h / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
    s.v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    s.t = grid.time(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace ckosc
