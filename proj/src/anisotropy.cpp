#include "aqv/anisotropy.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "aqv/errors.hpp"
#include "aqv/text.hpp"

namespace aqv {

DipolePair::DipolePair(double d01, double d02) : d01_(d01), d02_(d02) {
  if (!std::isfinite(d01) || !std::isfinite(d02) || d01 <= 0.0 || d02 <= 0.0)
    throw ValidationError("dipole magnitudes must be positive and finite");
}

double coefficient_R(const DipolePair& d) {
  double a = d.d01();
  double b = d.d02();
  return a * b / (a * a + b * b);
}

double coefficient_A(const GreenSample& g) {
  GreenSample cart = g.to_cartesian();
  if (cart.im_gxy() != 0.0)
    throw ValidationError("coefficient A requires Im Gxy = 0; use the general "
                          "form for Im Gxy = " + format_full(cart.im_gxy()));
  double gx = cart.im_gxx();
  double gy = cart.im_gyy();
  if (gx + gy <= 0.0)
    throw ValidationError("coefficient A undefined for Im Gxx + Im Gyy = 0");
  return (gx - gy) / (gx + gy);
}

std::complex<double> coefficient_A_general(const GreenSample& g) {
  GreenSample cart = g.to_cartesian();
  double gx = cart.im_gxx();
  double gy = cart.im_gyy();
  if (gx + gy <= 0.0)
    throw ValidationError("coefficient A undefined for Im Gxx + Im Gyy = 0");
  return std::complex<double>(gx - gy, -2.0 * cart.im_gxy()) / (gx + gy);
}

double coherence(const GreenSample& g, const DipolePair& d) {
  return coefficient_R(d) * coefficient_A(g);
}

std::complex<double> coherence_general(const GreenSample& g,
                                       const DipolePair& d) {
  return coefficient_R(d) * coefficient_A_general(g);
}

DecayCoefficients decay_coefficients(const GreenSample& g, const DipolePair& d,
                                     double gamma0) {
  if (!(gamma0 > 0.0))
    throw ValidationError("gamma0 must be positive, got " +
                          format_full(gamma0));
  GreenSample cart = g.to_cartesian();
  double gx = cart.im_gxx();
  double gy = cart.im_gyy();
  if (gx + gy <= 0.0)
    throw ValidationError("Green sample must have Im Gxx + Im Gyy > 0");
  double a = d.d01();
  double b = d.d02();
  double sum2 = a * a + b * b;
  /* Normalized so the isotropic vacuum (Im Gxx = Im Gyy = 1/2) with equal
   * dipoles gives gamma_1 = gamma_2 = gamma0 / 2: each circular transition
   * couples to half the free-space density of states. Joint rescaling of
   * both dipoles cancels. */
  double gamma1 = gamma0 * 2.0 * a * a / sum2 * (gx + gy) / 2.0;
  double gamma2 = gamma0 * 2.0 * b * b / sum2 * (gx + gy) / 2.0;
  std::complex<double> kappa12 =
      gamma0 * 2.0 * a * b / sum2 *
      std::complex<double>((gx - gy) / 2.0, -cart.im_gxy());
  return DecayCoefficients(gamma1, gamma2, kappa12, 0.0);
}

GreenSample green_sample_from_json(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("Green sample JSON malformed: ") +
                          e.what());
  }
  if (!j.is_object() || !j.contains("basis"))
    throw ValidationError("Green sample JSON needs a 'basis' key");
  std::string basis = j["basis"].get<std::string>();
  auto num = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number())
      throw ValidationError(std::string("Green sample JSON needs numeric '") +
                            key + "'");
    return j[key].get<double>();
  };
  if (basis == "cartesian") {
    double gxy = j.contains("im_gxy") ? num("im_gxy") : 0.0;
    return GreenSample::cartesian(num("im_gxx"), num("im_gyy"), gxy);
  }
  if (basis == "circular")
    return GreenSample::circular(num("im_gpp"), num("im_gpm"));
  throw ValidationError("Green sample basis must be 'cartesian' or "
                        "'circular', got '" + basis + "'");
}

void green_sample_to_json(std::ostream& os, const GreenSample& g) {
  nlohmann::ordered_json j;
  if (g.basis() == GreenBasis::cartesian) {
    j["basis"] = "cartesian";
    j["im_gxx"] = g.im_gxx();
    j["im_gyy"] = g.im_gyy();
    j["im_gxy"] = g.im_gxy();
  } else {
    j["basis"] = "circular";
    j["im_gpp"] = g.im_gpp();
    j["im_gpm"] = g.im_gpm();
  }
  os << j.dump(2) << '\n';
}

}  // namespace aqv
