#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <vector>

#include "aqv/decay_coefficients.hpp"
#include "aqv/density_matrix.hpp"
#include "aqv/green_sample.hpp"

namespace aqv {

struct TrajectoryPoint {
  double t;
  DensityMatrix3 rho;
};

/* Long-time state of pure spontaneous decay from |0>:
 *   rho_ii = gamma_i / (gamma_1 + gamma_2),
 *   rho_12 = kappa_12 / (gamma_1 + gamma_2),
 * excited population and optical coherences gone. */
DensityMatrix3 steady_state(const DecayCoefficients& c);

/* Closed-form solution at t >= 0 for the initial state |0><0|. */
DensityMatrix3 evolve_analytic(const DecayCoefficients& c, double t);

/* Fixed-step RK4 integration of the same master equation, one snapshot per
 * step starting at t = 0. A trace drift beyond 1e-6 means the step size was
 * too coarse and is reported as a NumericalError. */
std::vector<TrajectoryPoint> evolve_numeric(const DecayCoefficients& c,
                                            double t_end, double dt);

/* Header t,rho00,rho11,rho22,re_rho12,im_rho12; full double precision. */
void write_trajectory_csv(std::ostream& os,
                          const std::vector<TrajectoryPoint>& traj);

/* Joint emitter-photon state once the excited population has fully decayed,
 * written over {|1,X>, |1,Y>, |2,X>, |2,Y>} with X/Y the two linear photon
 * polarizations. Tracing out the photon reproduces the ground block of the
 * master-equation steady state. */
class DressedState {
 public:
  using Complex = std::complex<double>;

  explicit DressedState(const std::array<Complex, 4>& amplitudes);

  const std::array<Complex, 4>& amplitudes() const { return a_; }

  /* Reduced 2x2 emitter matrix {rho11, rho12; rho21, rho22}, row-major. */
  std::array<Complex, 4> atomic_block() const;
  double atomic_purity() const;

  /* Reduced state embedded in the three-level basis (excited row/col zero). */
  DensityMatrix3 reduced_density_matrix() const;

 private:
  std::array<Complex, 4> a_;
};

/* Emitter-photon state selected by an anisotropic vacuum with Im Gxy = 0. */
DressedState dressed_state(const GreenSample& g, double d01, double d02);

/* c / (2 gamma0): how far the emitted photon's coherence stretches. */
double photonic_coherence_length(double gamma0, double c);

}  // namespace aqv
