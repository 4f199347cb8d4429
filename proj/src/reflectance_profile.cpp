#include "aqv/reflectance_profile.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "aqv/errors.hpp"
#include "aqv/text.hpp"

namespace aqv {

TaperRule taper_rule_from_string(const std::string& s) {
  if (s == "linear") return TaperRule::linear;
  if (s == "hold") return TaperRule::hold;
  throw ValidationError("taper rule must be 'linear' or 'hold', got '" + s +
                        "'");
}

const char* to_string(TaperRule t) {
  return t == TaperRule::linear ? "linear" : "hold";
}

double ProfileSegment::eval(double theta_deg) const {
  if (rx_start == rx_end) return rx_start;
  double f = (theta_deg - theta_start_deg) / (theta_end_deg - theta_start_deg);
  return rx_start + f * (rx_end - rx_start);
}

namespace {

void check_breakpoints(const std::vector<std::pair<double, double>>& bp) {
  if (bp.empty()) throw ValidationError("profile needs at least one breakpoint");
  double prev = -1.0;
  for (const auto& [theta, rx] : bp) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > 90.0)
      throw ValidationError("breakpoint angle out of [0, 90] degrees: " +
                            format_full(theta));
    if (theta <= prev)
      throw ValidationError("breakpoint angles must be strictly increasing");
    if (!std::isfinite(rx) || rx < 0.0 || rx > 1.0)
      throw ValidationError("reflectance out of [0, 1]: " + format_full(rx));
    prev = theta;
  }
}

void check_na(double na) {
  if (!std::isfinite(na) || na <= 0.0 || na > 1.0)
    throw ValidationError("numerical aperture must lie in (0, 1], got " +
                          format_full(na));
}

}  // namespace

ReflectanceProfile::ReflectanceProfile(std::vector<ProfileSegment> segments,
                                       double na)
    : segments_(std::move(segments)), na_(na) {}

ReflectanceProfile ReflectanceProfile::piecewise_constant(
    std::vector<std::pair<double, double>> bp, double na) {
  check_breakpoints(bp);
  check_na(na);
  std::vector<ProfileSegment> segs;
  /* value of the last breakpoint at or below theta, held out to 90 degrees;
   * below the first breakpoint the first value applies */
  for (size_t i = 0; i < bp.size(); ++i) {
    double start = (i == 0) ? 0.0 : bp[i].first;
    double end = (i + 1 < bp.size()) ? bp[i + 1].first : 90.0;
    if (end > start)
      segs.push_back({start, end, bp[i].second, bp[i].second});
  }
  if (segs.empty())  // single breakpoint at exactly 90 degrees
    segs.push_back({0.0, 90.0, bp.back().second, bp.back().second});
  return ReflectanceProfile(std::move(segs), na);
}

ReflectanceProfile ReflectanceProfile::piecewise_linear(
    std::vector<std::pair<double, double>> bp, double na) {
  check_breakpoints(bp);
  check_na(na);
  std::vector<ProfileSegment> segs;
  if (bp.front().first > 0.0)
    segs.push_back({0.0, bp.front().first, bp.front().second,
                    bp.front().second});
  for (size_t i = 0; i + 1 < bp.size(); ++i)
    segs.push_back(
        {bp[i].first, bp[i + 1].first, bp[i].second, bp[i + 1].second});
  if (bp.back().first < 90.0)
    segs.push_back({bp.back().first, 90.0, bp.back().second,
                    bp.back().second});
  return ReflectanceProfile(std::move(segs), na);
}

ReflectanceProfile ReflectanceProfile::ideal_mirror(double na) {
  check_na(na);
  return ReflectanceProfile({{0.0, 90.0, 1.0, 1.0}}, na);
}

double ReflectanceProfile::eval(double theta_deg) const {
  if (!std::isfinite(theta_deg) || theta_deg < 0.0 || theta_deg > 90.0)
    throw ValidationError("emission angle out of [0, 90] degrees: " +
                          format_full(theta_deg));
  if (std::sin(theta_deg * M_PI / 180.0) > na_) return 0.0;
  for (const auto& s : segments_)
    if (theta_deg < s.theta_end_deg || &s == &segments_.back())
      return s.eval(theta_deg);
  return segments_.back().eval(theta_deg);
}

ReflectanceProfile ReflectanceProfile::truncated(double na) const {
  check_na(na);
  return ReflectanceProfile(segments_, na);
}

std::vector<ProfileSegment> ReflectanceProfile::segments_up_to(
    double theta_max_deg) const {
  std::vector<ProfileSegment> out;
  for (const auto& s : segments_) {
    if (s.theta_start_deg >= theta_max_deg) break;
    ProfileSegment clipped = s;
    if (clipped.theta_end_deg > theta_max_deg) {
      clipped.rx_end = s.eval(theta_max_deg);
      clipped.theta_end_deg = theta_max_deg;
    }
    out.push_back(clipped);
  }
  return out;
}

ReflectanceProfile table2_profile(TaperRule taper) {
  /* Averaged reflectance of the five resonant supercells over their
   * annuli, from the RCWA characterization of the design. */
  std::vector<ProfileSegment> segs = {
      {0.0, 17.6, 0.60, 0.60},
      {17.6, 24.6, 0.55, 0.55},
      {24.6, 29.4, 0.50, 0.50},
      {29.4, 33.3, 0.30, 0.30},
  };
  if (taper == TaperRule::linear)
    segs.push_back({33.3, 90.0, 0.30, 0.0});
  else
    segs.push_back({33.3, 90.0, 0.30, 0.30});
  return ReflectanceProfile(std::move(segs), 1.0);
}

ReflectanceProfile ReflectanceProfile::from_json(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("profile JSON malformed: ") + e.what());
  }
  double na = j.value("na", 1.0);
  check_na(na);
  if (j.contains("segments")) {
    std::vector<ProfileSegment> segs;
    for (const auto& row : j["segments"]) {
      if (!row.is_array() || row.size() != 4)
        throw ValidationError(
            "profile segment rows must be [theta0, theta1, rx0, rx1]");
      segs.push_back({row[0].get<double>(), row[1].get<double>(),
                      row[2].get<double>(), row[3].get<double>()});
    }
    if (segs.empty()) throw ValidationError("profile has no segments");
    double prev_end = 0.0;
    for (const auto& s : segs) {
      if (s.theta_start_deg != prev_end || s.theta_end_deg <= s.theta_start_deg)
        throw ValidationError("profile segments must tile [0, 90] in order");
      if (s.rx_start < 0.0 || s.rx_start > 1.0 || s.rx_end < 0.0 ||
          s.rx_end > 1.0)
        throw ValidationError("profile reflectance out of [0, 1]");
      prev_end = s.theta_end_deg;
    }
    if (prev_end != 90.0)
      throw ValidationError("profile segments must end at 90 degrees");
    return ReflectanceProfile(std::move(segs), na);
  }
  if (!j.contains("breakpoints") || !j.contains("interpolation"))
    throw ValidationError(
        "profile JSON needs 'segments' or 'breakpoints' + 'interpolation'");
  std::vector<std::pair<double, double>> bp;
  for (const auto& row : j["breakpoints"]) {
    if (!row.is_array() || row.size() != 2)
      throw ValidationError("profile breakpoints must be [theta, rx] pairs");
    bp.emplace_back(row[0].get<double>(), row[1].get<double>());
  }
  std::string mode = j["interpolation"].get<std::string>();
  if (mode == "piecewise-constant") return piecewise_constant(std::move(bp), na);
  if (mode == "piecewise-linear") return piecewise_linear(std::move(bp), na);
  throw ValidationError("profile interpolation must be 'piecewise-constant' "
                        "or 'piecewise-linear', got '" + mode + "'");
}

void ReflectanceProfile::to_json(std::ostream& os) const {
  nlohmann::ordered_json j;
  j["na"] = na_;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& s : segments_)
    rows.push_back({s.theta_start_deg, s.theta_end_deg, s.rx_start, s.rx_end});
  j["segments"] = rows;
  os << j.dump(2) << '\n';
}

}  // namespace aqv
