#include "ckosc/quantum.hpp"

#include <cmath>
#include <numbers>

#include "ckosc/classical.hpp"

namespace ckosc {

QuantumEnergyParams quantum_energy_params(const OscillatorParams& params, const InitialState& init) {
  QuantumEnergyParams q;
  q.E0 = 0.5 * params.m * params.omega0 * params.omega0 * init.Q0 * init.Q0;
  q.delta = std::atan2(2.0 * params.omega, params.gamma);
  q.Omega0 = params.omega0 * params.omega0 / params.omega;
  return q;
}

double zero_point_energy(const OscillatorParams& params, double t) {
  return 0.5 * params.hbar * (params.omega0 * params.omega0 / params.omega) *
         std::exp(-params.gamma * t);
}

EnergyRecord quantum_energy(const OscillatorParams& params, const TrajectoryPoint& point) {
  const double t = point.t;
  EnergyRecord r;
  r.t = t;
  r.zero_point = zero_point_energy(params, t);
  r.e_classical = classical_energy(params, point);
  const double kinetic = std::exp(-2.0 * params.gamma * t) * point.P * point.P / (2.0 * params.m);
  const double potential = 0.5 * params.m * params.omega0 * params.omega0 * point.Q * point.Q;
  r.e_quantum = r.zero_point + kinetic + potential;
  return r;
}

double quantum_energy_undriven(const OscillatorParams& params, const InitialState& init, double t) {
  const auto q = quantum_energy_params(params, init);
  const double phase = 2.0 * (params.omega * t + init.varphi) - q.delta;
  return zero_point_energy(params, t) +
         q.E0 * std::exp(-params.gamma * t) *
             (1.0 + params.gamma / (2.0 * params.omega0) * std::cos(phase));
}

double uncertainty_product(const OscillatorParams& params) {
  return 0.5 * params.hbar * (params.omega0 / params.omega);
}

double position_spread(const OscillatorParams& params, double t) {
  return std::sqrt(params.hbar / (2.0 * params.m * params.omega * std::exp(params.gamma * t)));
}

double momentum_spread(const OscillatorParams& params, double t) {
  return std::sqrt(params.hbar * params.m * params.omega * std::exp(params.gamma * t) / 2.0) *
         params.omega0 / params.omega;
}

EigenstateCoefficients eigenstate_coefficients(const OscillatorParams& params,
                                               const InitialState& init, double t, double chi) {
  using namespace std::complex_literals;
  const double phase = params.omega * t + init.varphi - chi;
  EigenstateCoefficients c;
  c.A = -1.0i * params.m * params.omega * init.Q0 * std::exp(std::complex<double>(0.0, -phase));
  c.B = 0.5 * params.m * std::exp(params.gamma * t / 2.0) *
        std::complex<double>(params.omega, params.gamma / 2.0);
  return c;
}

double eigenstate_center_offset(const OscillatorParams& params, const InitialState& init, double t,
                                double chi) {
  const auto c = eigenstate_coefficients(params, init, t, chi);
  return c.A.real() / (2.0 * c.B.real());
}

WavePacket wave_packet(const OscillatorParams& params, const InitialState& init,
                       const TrajectoryPoint& point, double chi) {
  const double t = point.t;
  const double particular = point.Q - homogeneous_solution(params, init, t).Q_h;
  WavePacket w;
  w.t = t;
  w.center = particular + eigenstate_center_offset(params, init, t, chi);
  w.sigma = position_spread(params, t);
  w.p_center = params.m * point.Qdot;
  return w;
}

double density(const WavePacket& packet, double q) {
  if (!(packet.sigma > 0.0)) {
    throw Error(ErrorCode::DegenerateWidth, "wave packet has zero width (hbar = 0)");
  }
  const double var = packet.sigma * packet.sigma;
  const double d = q - packet.center;
  return std::exp(-d * d / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

}  // namespace ckosc
