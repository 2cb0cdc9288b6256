#include "ckosc/classical.hpp"

#include <cmath>

namespace ckosc {

HomogeneousResponse homogeneous_solution(const OscillatorParams& params, const InitialState& init,
                                         double t) {
  const double envelope = init.Q0 * std::exp(-params.gamma * t / 2.0);
  const double phase = params.omega * t + init.varphi;
  const double c = std::cos(phase);
  const double s = std::sin(phase);
  return {envelope * c, envelope * (-params.gamma / 2.0 * c - params.omega * s)};
}

OdeState initial_ode_state(const OscillatorParams& params, const InitialState& init) {
  const auto h = homogeneous_solution(params, init, 0.0);
  return {0.0, h.Q_h, h.Qdot_h};
}

std::vector<TrajectoryPoint> trajectory(const Scenario& scenario) {
  const auto& params = scenario.params;
  const auto& grid = scenario.grid;
  const std::size_t n = grid.size();

  std::vector<TrajectoryPoint> points;
  points.reserve(n);
  ConvolutionAccumulator acc(grid.dt);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = grid.time(i);
    acc.extend(scenario.force, params, t);
    const auto p = acc.value(params, t);
    const auto h = homogeneous_solution(params, scenario.init, t);

    TrajectoryPoint pt;
    pt.t = t;
    pt.Q = h.Q_h + p.Q_p;
    pt.Qdot = h.Qdot_h + p.Qdot_p;
    pt.P_k = params.m * pt.Qdot;
    pt.P = pt.P_k * std::exp(params.gamma * t);
    points.push_back(pt);
  }
  return points;
}

double classical_energy(const OscillatorParams& params, const TrajectoryPoint& point) {
  return 0.5 * params.m * point.Qdot * point.Qdot +
         0.5 * params.m * params.omega0 * params.omega0 * point.Q * point.Q;
}

}  // namespace ckosc
