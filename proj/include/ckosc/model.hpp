#pragma once

#include <cstddef>
#include <numbers>

#include "ckosc/error.hpp"
#include "ckosc/forcing.hpp"

namespace ckosc {

/// Physical parameters of the damped oscillator. Units are dimensionless.
///
/// `omega` is derived (sqrt(omega0^2 - gamma^2/4)) and is only meaningful
/// after `validate_params`. Everything downstream reads `omega` from here
/// rather than recomputing it.
struct OscillatorParams {
  double m = 1.0;
  double omega0 = 1.0;
  double gamma = 0.0;
  double hbar = 1.0;
  double omega = 0.0;
};

struct InitialState {
  double Q0 = 0.0;      // amplitude at t = 0
  double varphi = 0.0;  // phase, radians
};

/// Uniform output grid starting at t = 0.
struct TimeGrid {
  double t_end = 20.0;
  double dt = 0.01;

  std::size_t steps() const;
  std::size_t size() const { return steps() + 1; }
  double time(std::size_t i) const { return static_cast<double>(i) * dt; }
};

struct Scenario {
  OscillatorParams params;
  InitialState init;
  ForceModel force;
  TimeGrid grid;
  double chi = std::numbers::pi / 2;
};

struct TrajectoryPoint {
  double t = 0.0;
  double Q = 0.0;
  double Qdot = 0.0;
  double P = 0.0;    // canonical momentum m*Qdot*e^{gamma t}
  double P_k = 0.0;  // physical momentum m*Qdot
};

struct EnergyRecord {
  double t = 0.0;
  double e_classical = 0.0;
  double e_quantum = 0.0;
  double zero_point = 0.0;
};

double derived_omega(const OscillatorParams& params);

/// Checks the physical preconditions and returns a copy with `omega` filled.
/// Throws ckosc::Error (NonPositiveMass, NonPositiveFrequency, Overdamped,
/// NegativeHbar).
OscillatorParams validate_params(const OscillatorParams& params);

void validate_initial_state(const InitialState& init);
void validate_grid(const TimeGrid& grid);

/// Validates every component and returns the scenario with derived fields.
Scenario validate_scenario(const Scenario& scenario);

}  // namespace ckosc
