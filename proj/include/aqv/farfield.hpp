#pragma once

#include <iosfwd>
#include <vector>

#include "aqv/reflectance_profile.hpp"

namespace aqv {

/* Node counts for the hemisphere integral: Gauss-Legendre in cos(theta) per
 * smooth segment of the reflectance profile, uniform trapezoid around phi.
 * Both must be at least 16. */
struct QuadratureSpec {
  int nodes_theta = 256;
  int nodes_phi = 256;
};

struct EstimateResult {
  double na = 0.0;
  double gamma_x_ratio = 1.0;  // gamma_x / gamma0
  double gamma_y_ratio = 1.0;  // the y dipole never sees the mirror
  double coherence = 0.0;      // signed, (gamma_x - gamma_y)/(2(gamma_x + gamma_y))
};

/* Modified x-dipole decay rate over the free-space rate,
 *   gamma_x / gamma0 = 3 Int dOmega/4pi [1 - sin^2(theta) cos^2(phi)]
 *                        * (1 - Rx(theta)),
 * over the upper hemisphere. Rx == 0 returns exactly 1. */
double gamma_x_ratio(const ReflectanceProfile& p, const QuadratureSpec& q = {});

/* Closed form for a perfect mirror filling the aperture:
 *   sqrt(1 - NA^2) * (1 - NA^2 / 4). */
double gamma_x_ratio_ideal(double na);

/* Ground-state coherence from two linear-dipole rates,
 * (gamma_x - gamma_y) / (2 (gamma_x + gamma_y)); in [-1/2, 1/2]. */
double coherence_from_rates(double gamma_x, double gamma_y);

/* gamma_x and coherence per aperture value, profile truncated at each NA.
 * gamma_x is monotone nonincreasing in NA. */
std::vector<EstimateResult> na_sweep(const ReflectanceProfile& p,
                                     const std::vector<double>& nas,
                                     const QuadratureSpec& q = {});

/* 0.05, 0.10, ..., 1.00 */
std::vector<double> default_na_grid();

/* Header na,gamma_x_over_gamma0,gamma_x_ideal,coherence_signed,coherence_abs;
 * 12 significant digits. */
void write_sweep_csv(std::ostream& os, const std::vector<EstimateResult>& rows);

}  // namespace aqv
