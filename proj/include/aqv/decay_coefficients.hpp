#pragma once

#include <complex>

namespace aqv {

/* Spontaneous-emission coefficients of the three-level emitter: the two
 * transition rates, the cross-damping amplitude kappa_12 that emission pumps
 * into the ground coherence, and the ground-state splitting omega_0. Rates
 * are in whatever unit the caller chose (typically the free-space rate).
 *
 * Construction enforces gamma_i >= 0, gamma_1 + gamma_2 > 0 and the
 * physicality bound |kappa_12| <= sqrt(gamma_1 gamma_2); anything outside it
 * would make the long-time state non-positive. */
class DecayCoefficients {
 public:
  DecayCoefficients(double gamma1, double gamma2, std::complex<double> kappa12,
                    double omega0 = 0.0);

  double gamma1() const { return gamma1_; }
  double gamma2() const { return gamma2_; }
  std::complex<double> kappa12() const { return kappa12_; }
  double omega0() const { return omega0_; }

  /* total decay rate of the excited state */
  double total() const { return gamma1_ + gamma2_; }

 private:
  double gamma1_;
  double gamma2_;
  std::complex<double> kappa12_;
  double omega0_;
};

}  // namespace aqv
