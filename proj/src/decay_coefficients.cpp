#include "aqv/decay_coefficients.hpp"

#include <cmath>

#include "aqv/errors.hpp"
#include "aqv/text.hpp"

namespace aqv {

DecayCoefficients::DecayCoefficients(double gamma1, double gamma2,
                                     std::complex<double> kappa12,
                                     double omega0)
    : gamma1_(gamma1), gamma2_(gamma2), kappa12_(kappa12), omega0_(omega0) {
  if (!std::isfinite(gamma1) || !std::isfinite(gamma2) ||
      !std::isfinite(kappa12.real()) || !std::isfinite(kappa12.imag()) ||
      !std::isfinite(omega0))
    throw ValidationError("decay coefficients must be finite");
  if (gamma1 < 0.0 || gamma2 < 0.0)
    throw ValidationError("decay rates must be nonnegative, got gamma1=" +
                          format_full(gamma1) + " gamma2=" +
                          format_full(gamma2));
  if (gamma1 + gamma2 <= 0.0)
    throw ValidationError("total decay rate must be positive");
  /* |kappa_12| <= sqrt(gamma_1 gamma_2), with a hair of slack so inputs
   * computed at the bound are not rejected over rounding. */
  double bound = std::sqrt(gamma1 * gamma2);
  if (std::abs(kappa12) > bound * (1.0 + 1e-9) + 1e-300)
    throw ValidationError("cross-damping |kappa12|=" +
                          format_full(std::abs(kappa12)) +
                          " exceeds sqrt(gamma1*gamma2)=" + format_full(bound));
}

}  // namespace aqv
