#include "aqv/green_sample.hpp"

#include <algorithm>
#include <cmath>

#include "aqv/errors.hpp"
#include "aqv/text.hpp"

namespace aqv {

GreenSample::GreenSample(GreenBasis basis, double a, double b, double c)
    : basis_(basis), a_(a), b_(b), c_(c) {}

GreenSample GreenSample::cartesian(double im_gxx, double im_gyy,
                                   double im_gxy) {
  if (!std::isfinite(im_gxx) || !std::isfinite(im_gyy) ||
      !std::isfinite(im_gxy))
    throw ValidationError("Green components must be finite");
  /* Passivity: the local density of states cannot be negative, and the
   * off-diagonal part cannot exceed what positivity of Im G allows. */
  if (im_gxx < 0.0 || im_gyy < 0.0)
    throw ValidationError("Im Gxx and Im Gyy must be nonnegative, got " +
                          format_full(im_gxx) + ", " + format_full(im_gyy));
  if (im_gxy * im_gxy > im_gxx * im_gyy * (1.0 + 1e-12) + 1e-300)
    throw ValidationError("Im Gxy^2 exceeds Im Gxx * Im Gyy");
  return GreenSample(GreenBasis::cartesian, im_gxx, im_gyy, im_gxy);
}

GreenSample GreenSample::circular(double im_gpp, double im_gpm) {
  if (!std::isfinite(im_gpp) || !std::isfinite(im_gpm))
    throw ValidationError("Green components must be finite");
  if (im_gpp < 0.0)
    throw ValidationError("Im G++ must be nonnegative, got " +
                          format_full(im_gpp));
  if (std::abs(im_gpm) > im_gpp * (1.0 + 1e-12) + 1e-300)
    throw ValidationError("|Im G+-| exceeds Im G++");
  return GreenSample(GreenBasis::circular, im_gpp, im_gpm, 0.0);
}

GreenSample GreenSample::free_space() { return cartesian(0.5, 0.5, 0.0); }

static void require_basis(GreenBasis have, GreenBasis want, const char* name) {
  if (have != want)
    throw ValidationError(std::string(name) + " read on the wrong basis");
}

double GreenSample::im_gxx() const {
  require_basis(basis_, GreenBasis::cartesian, "im_gxx");
  return a_;
}

double GreenSample::im_gyy() const {
  require_basis(basis_, GreenBasis::cartesian, "im_gyy");
  return b_;
}

double GreenSample::im_gxy() const {
  require_basis(basis_, GreenBasis::cartesian, "im_gxy");
  return c_;
}

double GreenSample::im_gpp() const {
  require_basis(basis_, GreenBasis::circular, "im_gpp");
  return a_;
}

double GreenSample::im_gpm() const {
  require_basis(basis_, GreenBasis::circular, "im_gpm");
  return b_;
}

GreenSample GreenSample::to_cartesian() const {
  if (basis_ == GreenBasis::cartesian) return *this;
  /* Im Gxx = Im G++ + Im G+-, Im Gyy = Im G++ - Im G+-, Gxy = 0 context.
   * Clamp ulp-level negatives from samples sitting on the |G+-| = G++ edge. */
  return cartesian(std::max(0.0, a_ + b_), std::max(0.0, a_ - b_), 0.0);
}

GreenSample GreenSample::to_circular() const {
  if (basis_ == GreenBasis::circular) return *this;
  if (c_ != 0.0)
    throw ValidationError(
        "circular components are only defined for Im Gxy = 0, got " +
        format_full(c_));
  return circular((a_ + b_) / 2.0, (a_ - b_) / 2.0);
}

}  // namespace aqv
