#pragma once

#include <vector>

#include "ckosc/model.hpp"
#include "ckosc/numerics.hpp"

namespace ckosc {

struct HomogeneousResponse {
  double Q_h = 0.0;
  double Qdot_h = 0.0;
};

/// Free decaying oscillation Q0 e^{-gamma t/2} cos(omega t + varphi) and its
/// derivative.
HomogeneousResponse homogeneous_solution(const OscillatorParams& params, const InitialState& init,
                                         double t);

/// Initial state matching the homogeneous solution at t = 0, for seeding RK4.
OdeState initial_ode_state(const OscillatorParams& params, const InitialState& init);

/// Q = Q_h + Q_p at every grid time, streaming the convolution once.
/// The scenario must already be validated.
std::vector<TrajectoryPoint> trajectory(const Scenario& scenario);

/// (1/2) m Qdot^2 + (1/2) m omega0^2 Q^2.
double classical_energy(const OscillatorParams& params, const TrajectoryPoint& point);

}  // namespace ckosc
