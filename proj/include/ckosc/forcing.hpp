#pragma once

#include <cstddef>
#include <variant>
#include <vector>

namespace ckosc {

// Every law returns force per unit mass.

struct ZeroForce {};

struct ConstantForce {
  double f0 = 0.0;
};

/// Tapping-mode AFM cantilever drive.
struct TmafmForce {
  double F_ext = 0.0;
  double k = 0.0;
  double D0 = 0.0;
  double a0 = 0.0;
  double omega_d = 1.0;
  double m_eff = 1.0;
};

/// Truncated Fourier sine series of a periodic ramp with period 2*pi/omega_d.
struct SawtoothForce {
  double f0 = 1.0;
  double m = 1.0;
  double omega_d = 1.0;
  int n_terms = 1000;
};

/// Piecewise-linear interpolation of sampled values.
struct TabulatedForce {
  std::vector<double> t;
  std::vector<double> f;
};

using ForceModel =
    std::variant<ZeroForce, ConstantForce, TmafmForce, SawtoothForce, TabulatedForce>;

/// Throws ckosc::Error(InvalidForce) when a model violates its invariants.
void validate_force(const ForceModel& model);

/// f(t) for the selected law. Tabulated queries outside the sample window
/// throw ckosc::Error(OutOfRange).
double eval_force(const ForceModel& model, double t);

double tmafm_force(double F_ext, double k, double D0, double a0, double omega_d,
                   double m_eff, double t);

/// (f0/(pi m)) * sum_{n=1..n_terms} (-1)^{n+1}/n * sin(n omega_d t),
/// summed in order n = 1..N. Odd in t and exactly periodic in the wrapped
/// argument.
double sawtooth_series(double f0, double m, double omega_d, int n_terms, double t);

/// Exact periodic ramp f0*t_w/(m*tau), t_w = t reduced into (-tau/2, tau/2].
double sawtooth_ramp_oracle(double f0, double m, double omega_d, double t);

double tabulated_force(const TabulatedForce& table, double t);

const char* force_name(const ForceModel& model);

}  // namespace ckosc
