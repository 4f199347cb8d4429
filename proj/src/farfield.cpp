#include "aqv/farfield.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "aqv/errors.hpp"
#include "aqv/quadrature.hpp"
#include "aqv/text.hpp"

namespace aqv {

namespace {

void check_quadrature(const QuadratureSpec& q) {
  if (q.nodes_theta < 16 || q.nodes_phi < 16)
    throw ValidationError("quadrature node counts must be at least 16");
}

/* Periodic-trapezoid average of cos^2(phi) over the full circle. Exact (1/2)
 * for any n >= 3, but kept numeric so the node-count knob means what it
 * says; the phi dependence of the pattern factors out as
 *   (1/2pi) Int dphi [1 - sin^2(theta) cos^2(phi)]
 *     = 1 - sin^2(theta) * <cos^2>. */
double cos2_phi_average(int nodes_phi) {
  double acc = 0.0;
  for (int j = 0; j < nodes_phi; ++j) {
    double c = std::cos(2.0 * M_PI * j / nodes_phi);
    acc += c * c;
  }
  return acc / nodes_phi;
}

}  // namespace

double gamma_x_ratio(const ReflectanceProfile& p, const QuadratureSpec& q) {
  check_quadrature(q);
  /* gamma_x / gamma0 = 1 - defect, with the defect
   *   (3/4pi) Int dOmega [1 - sin^2 cos^2] Rx(theta)
   * supported only inside the collection cone. Integrating the defect
   * instead of the full pattern makes Rx == 0 return exactly 1. The
   * cos(theta) integral runs Gauss-Legendre per smooth profile segment, so
   * plateau edges never sit inside a quadrature panel. */
  double theta_cut_deg = std::asin(std::min(p.na(), 1.0)) * 180.0 / M_PI;
  double cos2_avg = cos2_phi_average(q.nodes_phi);
  double defect = 0.0;
  for (const auto& seg : p.segments_up_to(theta_cut_deg)) {
    double c_hi = std::cos(seg.theta_start_deg * M_PI / 180.0);
    double c_lo = std::cos(seg.theta_end_deg * M_PI / 180.0);
    if (!(c_hi > c_lo)) continue;
    for (const auto& node : gauss_legendre(q.nodes_theta, c_lo, c_hi)) {
      double theta_deg = std::acos(node.x) * 180.0 / M_PI;
      double rx = seg.eval(theta_deg);
      double sin2 = 1.0 - node.x * node.x;
      defect += node.w * rx * 1.5 * (1.0 - sin2 * cos2_avg);
    }
  }
  double ratio = 1.0 - defect;
  /* a full perfect mirror drives the ratio to zero; clip quadrature dust */
  if (ratio < 0.0 && ratio > -1e-12) ratio = 0.0;
  return ratio;
}

double gamma_x_ratio_ideal(double na) {
  if (!(na > 0.0) || na > 1.0)
    throw ValidationError("numerical aperture must lie in (0, 1], got " +
                          format_full(na));
  double c2 = 1.0 - na * na;
  return std::sqrt(c2) * (1.0 - na * na / 4.0);
}

double coherence_from_rates(double gamma_x, double gamma_y) {
  if (gamma_x < 0.0 || gamma_y < 0.0)
    throw ValidationError("rates must be nonnegative");
  if (gamma_x + gamma_y <= 0.0)
    throw ValidationError("at least one rate must be positive");
  return (gamma_x - gamma_y) / (2.0 * (gamma_x + gamma_y));
}

std::vector<EstimateResult> na_sweep(const ReflectanceProfile& p,
                                     const std::vector<double>& nas,
                                     const QuadratureSpec& q) {
  std::vector<EstimateResult> out;
  out.reserve(nas.size());
  for (double na : nas) {
    EstimateResult r;
    r.na = na;
    r.gamma_x_ratio = gamma_x_ratio(p.truncated(na), q);
    r.gamma_y_ratio = 1.0;
    r.coherence = coherence_from_rates(r.gamma_x_ratio, r.gamma_y_ratio);
    out.push_back(r);
  }
  return out;
}

std::vector<double> default_na_grid() {
  std::vector<double> nas;
  for (int i = 1; i <= 20; ++i) nas.push_back(i / 20.0);
  return nas;
}

void write_sweep_csv(std::ostream& os,
                     const std::vector<EstimateResult>& rows) {
  os << "na,gamma_x_over_gamma0,gamma_x_ideal,coherence_signed,coherence_abs\n";
  for (const auto& r : rows) {
    os << format_sig(r.na) << ',' << format_sig(r.gamma_x_ratio) << ','
       << format_sig(gamma_x_ratio_ideal(r.na)) << ','
       << format_sig(r.coherence) << ',' << format_sig(std::abs(r.coherence))
       << '\n';
  }
}

}  // namespace aqv
