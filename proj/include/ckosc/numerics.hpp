#pragma once

#include <cstdint>
#include <vector>

#include "ckosc/forcing.hpp"
#include "ckosc/model.hpp"

namespace ckosc {

struct ParticularResponse {
  double Q_p = 0.0;
  double Qdot_p = 0.0;
};

/// Streaming evaluation of the driven-response convolution
///
///   Q_p(t) = int_0^t f(t')/omega * e^{-gamma (t-t')/2} sin(omega (t-t')) dt'.
///
/// Expanding sin(omega(t - t')) with the angle-difference identity leaves two
/// integrals that depend only on t':
///
///   S_c(t) = int_0^t f(t') e^{gamma t'/2} cos(omega t') dt'
///   S_s(t) = int_0^t f(t') e^{gamma t'/2} sin(omega t') dt'
///
/// which are advanced panel by panel with Simpson's rule (panel width `step`,
/// node spacing step/2). Extending to a later time never revisits earlier
/// panels. The e^{gamma t'/2} growth is undone by e^{-gamma t/2} in `value`;
/// double precision is adequate for gamma*t up to roughly 50.
class ConvolutionAccumulator {
 public:
  explicit ConvolutionAccumulator(double step);

  /// Advances S_c and S_s to t_new, which must lie on the step lattice at or
  /// after t_last. Throws Error(GridMismatch) otherwise.
  void extend(const ForceModel& force, const OscillatorParams& params, double t_new);

  /// Q_p and its analytic time derivative at t; t must equal t_last
  /// (Error(StaleAccumulator) otherwise).
  ParticularResponse value(const OscillatorParams& params, double t) const;

  double step() const { return step_; }
  double t_last() const { return static_cast<double>(panels_) * step_; }
  std::int64_t panels() const { return panels_; }
  double cos_integral() const { return s_c_; }
  double sin_integral() const { return s_s_; }

 private:
  double step_;
  std::int64_t panels_ = 0;
  double s_c_ = 0.0;
  double s_s_ = 0.0;
  // Integrand values at t_last, reused as the left node of the next panel.
  bool have_left_ = false;
  double left_c_ = 0.0;
  double left_s_ = 0.0;
};

struct OdeState {
  double t = 0.0;
  double q = 0.0;
  double v = 0.0;
};

/// Classical RK4 for q'' + gamma q' + omega0^2 q = f(t). Returns grid.size()
/// states, the first being `init` (its t is taken as 0).
std::vector<OdeState> rk4_integrate(const OscillatorParams& params, const ForceModel& force,
                                    const OdeState& init, const TimeGrid& grid);

}  // namespace ckosc
