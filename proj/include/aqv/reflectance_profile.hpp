#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace aqv {

/* How the reflectance continues past the last tabulated angle: taper
 * linearly to zero at grazing incidence, or hold the last value until the
 * collection cutoff. */
enum class TaperRule { linear, hold };

TaperRule taper_rule_from_string(const std::string& s);
const char* to_string(TaperRule t);

struct ProfileSegment {
  double theta_start_deg;
  double theta_end_deg;
  double rx_start;
  double rx_end;

  /* Linear in theta; constant when the endpoint values match. */
  double eval(double theta_deg) const;
};

/* Power reflectance back toward the emitter for x-polarized emission as a
 * function of the polar emission angle, with a numerical-aperture cutoff
 * beyond which nothing is collected. Stored as contiguous linear segments so
 * piecewise-constant plateaus and tapers coexist in one profile. */
class ReflectanceProfile {
 public:
  /* Value at the largest breakpoint <= theta, held to 90 degrees. */
  static ReflectanceProfile piecewise_constant(
      std::vector<std::pair<double, double>> breakpoints, double na = 1.0);

  /* Linear between breakpoints, end values held outside the tabulated range. */
  static ReflectanceProfile piecewise_linear(
      std::vector<std::pair<double, double>> breakpoints, double na = 1.0);

  /* Rx = 1 for sin(theta) <= na, 0 beyond. */
  static ReflectanceProfile ideal_mirror(double na);

  double na() const { return na_; }
  const std::vector<ProfileSegment>& segments() const { return segments_; }

  /* 0 whenever sin(theta) > na. */
  double eval(double theta_deg) const;

  /* Same profile with a tighter collection cutoff. */
  ReflectanceProfile truncated(double na) const;

  /* Segments overlapping [0, theta_max_deg], clipped to it. */
  std::vector<ProfileSegment> segments_up_to(double theta_max_deg) const;

  static ReflectanceProfile from_json(std::istream& is);
  void to_json(std::ostream& os) const;

 private:
  ReflectanceProfile(std::vector<ProfileSegment> segments, double na);

  std::vector<ProfileSegment> segments_;
  double na_;

  friend ReflectanceProfile table2_profile(TaperRule taper);
};

/* The five-zone reflectance table of the resonant design (60/55/50/30/30 %
 * over the supercell annuli), extended past 33.3 degrees by the chosen taper
 * rule. */
ReflectanceProfile table2_profile(TaperRule taper = TaperRule::linear);

}  // namespace aqv
