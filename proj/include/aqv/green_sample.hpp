#pragma once

namespace aqv {

enum class GreenBasis { cartesian, circular };

/* Imaginary part of the in-plane electromagnetic Green tensor at the emitter
 * position, which is what spontaneous emission actually probes. Components
 * are dimensionless, normalized so the isotropic vacuum has
 * Im Gxx = Im Gyy = 1/2. Either the Cartesian components (Im Gxx, Im Gyy,
 * Im Gxy) or the circular combinations
 *     Im G++ = (Im Gxx + Im Gyy) / 2,   Im G+- = (Im Gxx - Im Gyy) / 2
 * are stored, tagged by basis. Accessors are strict about the basis; convert
 * explicitly. */
class GreenSample {
 public:
  static GreenSample cartesian(double im_gxx, double im_gyy,
                               double im_gxy = 0.0);
  static GreenSample circular(double im_gpp, double im_gpm);

  /* isotropic vacuum (Im Gxx = Im Gyy = 1/2, Im Gxy = 0) */
  static GreenSample free_space();

  GreenBasis basis() const { return basis_; }

  double im_gxx() const;
  double im_gyy() const;
  double im_gxy() const;

  double im_gpp() const;
  double im_gpm() const;

  GreenSample to_cartesian() const;

  /* Only defined for mirror-symmetric environments; throws when Im Gxy != 0. */
  GreenSample to_circular() const;

 private:
  GreenSample(GreenBasis basis, double a, double b, double c);

  GreenBasis basis_;
  double a_;  // Im Gxx   or Im G++
  double b_;  // Im Gyy   or Im G+-
  double c_;  // Im Gxy   or unused
};

}  // namespace aqv
