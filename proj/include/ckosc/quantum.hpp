#pragma once

#include <complex>

#include "ckosc/model.hpp"

namespace ckosc {

/// Scalars of the closed-form undriven energy.
struct QuantumEnergyParams {
  double E0 = 0.0;      // m omega0^2 Q0^2 / 2
  double delta = 0.0;   // atan2(2 omega, gamma); pi/2 at gamma = 0
  double Omega0 = 0.0;  // omega0^2 / omega
};

QuantumEnergyParams quantum_energy_params(const OscillatorParams& params, const InitialState& init);

/// (1/2) hbar (omega0^2/omega) e^{-gamma t}.
double zero_point_energy(const OscillatorParams& params, double t);

/// Energy expectation from the canonical momentum:
///   E = (1/2) hbar Omega + e^{-2 gamma t} P^2/(2m) + (1/2) m omega0^2 Q^2.
/// The record also carries the classical energy (from the physical momentum)
/// and the zero-point term, computed separately.
EnergyRecord quantum_energy(const OscillatorParams& params, const TrajectoryPoint& point);

/// Closed form for f = 0:
///   (1/2) hbar Omega + E0 e^{-gamma t} (1 + gamma/(2 omega0) cos(2(omega t + varphi) - delta)).
double quantum_energy_undriven(const OscillatorParams& params, const InitialState& init, double t);

/// Delta q * Delta p = hbar omega0 / (2 omega). Independent of t and of the
/// driving force.
double uncertainty_product(const OscillatorParams& params);

/// Delta q = sqrt(hbar / (2 m omega e^{gamma t})).
double position_spread(const OscillatorParams& params, double t);

/// Canonical momentum spread, uncertainty_product / position_spread written
/// in a form that stays finite at hbar = 0.
double momentum_spread(const OscillatorParams& params, double t);

/// Coefficients of the Gaussian eigenstate of the linear invariant,
///   <q|phi> ~ exp[e^{gamma t/2} (A q_p - B q_p^2)/hbar + C],  q_p = q - Q_p(t).
/// A = sqrt(2 hbar m omega) beta is stored in its hbar-free reduced form
/// -i m omega Q0 e^{-i(omega t + varphi - chi)}.
struct EigenstateCoefficients {
  std::complex<double> A;
  std::complex<double> B;
};

EigenstateCoefficients eigenstate_coefficients(const OscillatorParams& params,
                                               const InitialState& init, double t, double chi);

/// Peak of |<q|phi>|^2 relative to Q_p(t), i.e. Re(A) / (2 Re(B)).
/// Equals the homogeneous solution Q_h(t) exactly when chi = pi/2.
double eigenstate_center_offset(const OscillatorParams& params, const InitialState& init, double t,
                                double chi);

struct WavePacket {
  double t = 0.0;
  double center = 0.0;
  double sigma = 0.0;
  double p_center = 0.0;
};

/// Position density of the coherent state at the time of `point`. The centre
/// is assembled from the eigenstate (particular part taken from `point`), so
/// it reproduces point.Q only under the chi = pi/2 convention.
WavePacket wave_packet(const OscillatorParams& params, const InitialState& init,
                       const TrajectoryPoint& point, double chi);

/// Normalized Gaussian density. Throws Error(DegenerateWidth) if sigma == 0.
double density(const WavePacket& packet, double q);

}  // namespace ckosc
