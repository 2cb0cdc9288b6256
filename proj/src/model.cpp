#include "ckosc/model.hpp"

#include <cmath>
#include <sstream>

namespace ckosc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositiveMass: return "NonPositiveMass";
    case ErrorCode::NonPositiveFrequency: return "NonPositiveFrequency";
    case ErrorCode::Overdamped: return "Overdamped";
    case ErrorCode::NegativeDamping: return "NegativeDamping";
    case ErrorCode::NegativeHbar: return "NegativeHbar";
    case ErrorCode::InvalidInitialState: return "InvalidInitialState";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::InvalidForce: return "InvalidForce";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::StaleAccumulator: return "StaleAccumulator";
    case ErrorCode::DegenerateWidth: return "DegenerateWidth";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::UnknownFigure: return "UnknownFigure";
  }
  return "Unknown";
}

std::size_t TimeGrid::steps() const {
  return static_cast<std::size_t>(std::llround(t_end / dt));
}

double derived_omega(const OscillatorParams& params) {
  // (omega0 - gamma/2)(omega0 + gamma/2) avoids squaring large values.
  const double half = params.gamma / 2.0;
  return std::sqrt((params.omega0 - half) * (params.omega0 + half));
}

OscillatorParams validate_params(const OscillatorParams& params) {
  if (!(params.m > 0.0) || !std::isfinite(params.m)) {
    throw Error(ErrorCode::NonPositiveMass, "mass m must be positive and finite");
  }
  if (!(params.omega0 > 0.0) || !std::isfinite(params.omega0)) {
    throw Error(ErrorCode::NonPositiveFrequency, "natural frequency omega0 must be positive and finite");
  }
  if (!(params.gamma >= 0.0) || !std::isfinite(params.gamma)) {
    throw Error(ErrorCode::NegativeDamping, "damping gamma must be non-negative and finite");
  }
  if (params.gamma >= 2.0 * params.omega0) {
    std::ostringstream os;
    os << "gamma=" << params.gamma << " >= 2*omega0=" << 2.0 * params.omega0
       << ": only the underdamped regime is supported";
    throw Error(ErrorCode::Overdamped, os.str());
  }
  if (!(params.hbar >= 0.0) || !std::isfinite(params.hbar)) {
    throw Error(ErrorCode::NegativeHbar, "hbar must be non-negative and finite");
  }
  OscillatorParams out = params;
  out.omega = derived_omega(params);
  return out;
}

void validate_initial_state(const InitialState& init) {
  if (!(init.Q0 >= 0.0) || !std::isfinite(init.Q0) || !std::isfinite(init.varphi)) {
    throw Error(ErrorCode::InvalidInitialState, "Q0 must be finite and >= 0, varphi finite");
  }
}

void validate_grid(const TimeGrid& grid) {
  if (!(grid.t_end > 0.0) || !(grid.dt > 0.0) || !std::isfinite(grid.t_end)) {
    throw Error(ErrorCode::InvalidGrid, "t_end and dt must be positive");
  }
  if (grid.dt > grid.t_end) throw Error(ErrorCode::InvalidGrid, "dt must not exceed t_end");
  if (grid.steps() < 2) throw Error(ErrorCode::InvalidGrid, "grid needs at least two steps");
}

Scenario validate_scenario(const Scenario& scenario) {
  Scenario out = scenario;
  out.params = validate_params(scenario.params);
  validate_initial_state(scenario.init);
  validate_grid(scenario.grid);
  validate_force(scenario.force);
  if (!std::isfinite(scenario.chi)) {
    throw Error(ErrorCode::InvalidInitialState, "chi must be finite");
  }
  return out;
}

}  // namespace ckosc
