#pragma once

#include <complex>
#include <iosfwd>

#include "aqv/decay_coefficients.hpp"
#include "aqv/green_sample.hpp"

namespace aqv {

/* Transition-dipole magnitudes of the two decay channels. Units are
 * arbitrary; everything computed from the pair depends only on the ratio. */
class DipolePair {
 public:
  DipolePair(double d01, double d02);
  double d01() const { return d01_; }
  double d02() const { return d02_; }

 private:
  double d01_;
  double d02_;
};

/* Dipole overlap factor d01 d02 / (d01^2 + d02^2), in (0, 1/2]. */
double coefficient_R(const DipolePair& d);

/* Vacuum anisotropy contrast (Im Gxx - Im Gyy) / (Im Gxx + Im Gyy) for a
 * mirror-symmetric environment (Im Gxy = 0); in [-1, 1]. */
double coefficient_A(const GreenSample& g);

/* General contrast including the off-diagonal component,
 * (Im Gxx - Im Gyy - 2i Im Gxy) / (Im Gxx + Im Gyy). */
std::complex<double> coefficient_A_general(const GreenSample& g);

/* Steady ground-state coherence R * A reached by spontaneous decay alone. */
double coherence(const GreenSample& g, const DipolePair& d);
std::complex<double> coherence_general(const GreenSample& g,
                                       const DipolePair& d);

/* Emission coefficients in the given environment, in units of gamma0 (decay
 * rate of a two-level emitter with the same dipole magnitude in free space):
 *   gamma_i  = gamma0 * 2 d0i^2 / (d01^2 + d02^2) * (Im Gxx + Im Gyy) / 2
 *   kappa_12 = gamma0 * 2 d01 d02 / (d01^2 + d02^2) * (Im Gxx - Im Gyy) / 2
 * so free space with equal dipoles gives gamma_1 = gamma_2 = gamma0 / 2 and
 * kappa_12 = 0, and steady_state recovers coherence() exactly. */
DecayCoefficients decay_coefficients(const GreenSample& g, const DipolePair& d,
                                     double gamma0 = 1.0);

/* JSON form: {"basis": "cartesian", "im_gxx": ..., "im_gyy": ...,
 * "im_gxy": ...} or {"basis": "circular", "im_gpp": ..., "im_gpm": ...}. */
GreenSample green_sample_from_json(std::istream& is);
void green_sample_to_json(std::ostream& os, const GreenSample& g);

}  // namespace aqv
