#include "aqv/metasurface.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "aqv/errors.hpp"
#include "aqv/text.hpp"

namespace aqv {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kDefaultApertureHalfAngleDeg = 70.0;
}  // namespace

DesignKind design_kind_from_string(const std::string& s) {
  if (s == "resonant") return DesignKind::resonant;
  if (s == "geometric") return DesignKind::geometric;
  throw ValidationError("design kind must be 'resonant' or 'geometric', got '" +
                        s + "'");
}

const char* to_string(DesignKind k) {
  return k == DesignKind::resonant ? "resonant" : "geometric";
}

DesignSpec DesignSpec::resonant(double lambda0_nm, double d_nm) {
  DesignSpec s;
  s.kind = DesignKind::resonant;
  s.lambda0_nm = lambda0_nm;
  s.d_nm = d_nm;
  s.unit_cell_x_nm = 300.0;
  s.unit_cell_y_nm = 150.0;
  s.validate();
  return s;
}

DesignSpec DesignSpec::geometric(double lambda0_nm, double d_nm) {
  DesignSpec s;
  s.kind = DesignKind::geometric;
  s.lambda0_nm = lambda0_nm;
  s.d_nm = d_nm;
  s.unit_cell_x_nm = 300.0;
  s.unit_cell_y_nm = 300.0;
  s.validate();
  return s;
}

double DesignSpec::aperture() const {
  if (aperture_radius_nm > 0.0) return aperture_radius_nm;
  /* everything the emitter radiates within 70 degrees of the axis */
  return d_nm * std::tan(kDefaultApertureHalfAngleDeg * kPi / 180.0);
}

void DesignSpec::validate() const {
  if (!(lambda0_nm > 0.0))
    throw ValidationError("wavelength must be positive, got " +
                          format_full(lambda0_nm));
  if (!(d_nm > 0.0))
    throw ValidationError("emitter height must be positive, got " +
                          format_full(d_nm));
  if (!(unit_cell_x_nm > 0.0) || !(unit_cell_y_nm > 0.0))
    throw ValidationError("unit-cell pitch must be positive");
  if (aperture_radius_nm < 0.0)
    throw ValidationError("aperture radius must be nonnegative");
  if (aperture() < unit_cell_x_nm)
    throw ValidationError("aperture radius " + format_full(aperture()) +
                          " nm holds no unit cell");
}

double phase_profile(const DesignSpec& s, double x_nm, double y_nm) {
  double k0 = 2.0 * kPi / s.lambda0_nm;
  double dist = std::sqrt(x_nm * x_nm + y_nm * y_nm + s.d_nm * s.d_nm);
  double raw = kPi - 2.0 * k0 * dist;
  double wrapped = std::fmod(raw, 2.0 * kPi);
  if (wrapped < 0.0) wrapped += 2.0 * kPi;
  if (wrapped >= 2.0 * kPi) wrapped = 0.0;  // fmod rounding on the seam
  return wrapped;
}

std::vector<SupercellRecord> supercell_boundaries(const DesignSpec& s) {
  s.validate();
  double lam = s.lambda0_nm;
  double rim = s.aperture();
  std::vector<SupercellRecord> out;
  double r_prev = 0.0;
  for (int n = 1; r_prev < rim; ++n) {
    /* radius where the direct path has grown by n half-wavelengths, i.e.
     * the target phase has wrapped n full turns */
    double r_n = std::sqrt(n * lam * s.d_nm + n * n * lam * lam / 4.0);
    SupercellRecord rec;
    rec.n = n;
    rec.r_start_nm = r_prev;
    rec.r_end_nm = std::min(r_n, rim);
    rec.truncated = r_n > rim;
    rec.theta_inner_deg = std::atan(r_prev / s.d_nm) * 180.0 / kPi;
    /* snap to the pitch, counting a cell once >= 3/4 of it fits; plain
     * rounding would overfill the zones that end just past a half cell */
    double ratio = rec.length_nm() / s.unit_cell_x_nm;
    rec.n_unit_cells = std::max(1, static_cast<int>(std::floor(ratio + 0.25)));
    out.push_back(rec);
    r_prev = r_n;
  }
  return out;
}

std::vector<PaletteEntry> default_palette() {
  /* five gold patches stepping the reflection phase by 2pi/5 */
  return {
      {1, 30.0, 100.0, 0.0},
      {2, 105.0, 100.0, 2.0 * kPi / 5.0},
      {3, 125.0, 100.0, 4.0 * kPi / 5.0},
      {4, 145.0, 100.0, 6.0 * kPi / 5.0},
      {5, 250.0, 100.0, 8.0 * kPi / 5.0},
  };
}

static void check_palette(const std::vector<PaletteEntry>& palette) {
  if (palette.empty()) throw ValidationError("palette is empty");
  int prev_index = 0;
  for (const auto& e : palette) {
    if (e.index <= prev_index)
      throw ValidationError("palette indices must be positive and increasing");
    if (!(e.lx_nm > 0.0) || !(e.ly_nm > 0.0))
      throw ValidationError("palette antenna dimensions must be positive");
    if (!std::isfinite(e.phase_rad) || e.phase_rad < 0.0 ||
        e.phase_rad >= 2.0 * kPi)
      throw ValidationError("palette phases must lie in [0, 2pi)");
    prev_index = e.index;
  }
}

std::vector<PaletteEntry> palette_from_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) ||
      split_csv_line(line) !=
          std::vector<std::string>{"index", "lx_nm", "ly_nm", "phase_rad"})
    throw ValidationError(
        "palette CSV must start with header index,lx_nm,ly_nm,phase_rad");
  std::vector<PaletteEntry> palette;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 4)
      throw ValidationError("palette CSV row needs 4 fields: '" + line + "'");
    palette.push_back({parse_int(f[0], "palette index"),
                       parse_double(f[1], "palette lx_nm"),
                       parse_double(f[2], "palette ly_nm"),
                       parse_double(f[3], "palette phase_rad")});
  }
  check_palette(palette);
  return palette;
}

void palette_to_csv(std::ostream& os, const std::vector<PaletteEntry>& p) {
  os << "index,lx_nm,ly_nm,phase_rad\n";
  for (const auto& e : p)
    os << e.index << ',' << format_sig(e.lx_nm) << ',' << format_sig(e.ly_nm)
       << ',' << format_sig(e.phase_rad) << '\n';
}

namespace {

double circular_distance(double a, double b) {
  double d = std::fabs(std::fmod(a - b, 2.0 * kPi));
  return std::min(d, 2.0 * kPi - d);
}

const PaletteEntry& nearest_palette_entry(
    const std::vector<PaletteEntry>& palette, double phase) {
  /* scan in index order and replace only on a strictly smaller distance, so
   * an exact tie (phase halfway between two entries) keeps the lower index */
  const PaletteEntry* best = &palette.front();
  double best_dist = circular_distance(phase, best->phase_rad);
  for (const auto& e : palette) {
    double dist = circular_distance(phase, e.phase_rad);
    if (dist < best_dist - 1e-12) {
      best = &e;
      best_dist = dist;
    }
  }
  return *best;
}

}  // namespace

MetasurfaceLayout build_resonant_layout(
    const DesignSpec& s, const std::vector<PaletteEntry>& palette) {
  s.validate();
  if (s.kind != DesignKind::resonant)
    throw ValidationError("resonant builder fed a non-resonant spec");
  check_palette(palette);

  MetasurfaceLayout layout;
  layout.spec = s;
  layout.supercells = supercell_boundaries(s);

  /* one radial row of cells from the center out; the pattern repeats in y */
  int n_cells = static_cast<int>(std::floor(s.aperture() / s.unit_cell_x_nm));
  layout.elements.reserve(static_cast<size_t>(n_cells));
  for (int i = 0; i < n_cells; ++i) {
    double x = (i + 0.5) * s.unit_cell_x_nm;
    double phase = phase_profile(s, x, 0.0);
    const PaletteEntry& e = nearest_palette_entry(palette, phase);
    AntennaElement el;
    el.x_nm = x;
    el.y_nm = 0.0;
    el.encoded_phase_rad = e.phase_rad;
    el.geometry = ResonantGeometry{e.index, e.lx_nm, e.ly_nm};
    layout.elements.push_back(el);
  }
  return layout;
}

MetasurfaceLayout build_geometric_layout(const DesignSpec& s) {
  s.validate();
  if (s.kind != DesignKind::geometric)
    throw ValidationError("geometric builder fed a non-geometric spec");

  MetasurfaceLayout layout;
  layout.spec = s;
  layout.supercells = supercell_boundaries(s);

  double rim = s.aperture();
  double px = s.unit_cell_x_nm;
  double py = s.unit_cell_y_nm;
  int i_max = static_cast<int>(std::ceil(rim / px));
  int j_max = static_cast<int>(std::ceil(rim / py));
  /* row-major over the grid, y then x ascending, so rebuilding the same spec
   * always lists elements in the same order */
  for (int j = -j_max; j < j_max; ++j) {
    double y = (j + 0.5) * py;
    for (int i = -i_max; i < i_max; ++i) {
      double x = (i + 0.5) * px;
      if (std::hypot(x, y) > rim) continue;
      double phase = phase_profile(s, x, y);
      AntennaElement el;
      el.x_nm = x;
      el.y_nm = y;
      el.geometry = GeometricGeometry{phase / 2.0};
      el.encoded_phase_rad = geometric_phase(phase / 2.0);
      layout.elements.push_back(el);
    }
  }
  return layout;
}

double geometric_phase(double rot_rad) {
  if (!std::isfinite(rot_rad))
    throw ValidationError("rotation angle must be finite");
  double phase = std::fmod(2.0 * rot_rad, 2.0 * kPi);
  if (phase < 0.0) phase += 2.0 * kPi;
  if (phase >= 2.0 * kPi) phase = 0.0;
  return phase;
}

ReflectionResult snell_reflection_angle(double theta_i_deg, double lambda0_nm,
                                        double gradient_rad_per_nm) {
  if (!std::isfinite(theta_i_deg) || std::fabs(theta_i_deg) > 90.0)
    throw ValidationError("incidence angle must lie in [-90, 90] degrees");
  if (!(lambda0_nm > 0.0))
    throw ValidationError("wavelength must be positive");
  if (!std::isfinite(gradient_rad_per_nm))
    throw ValidationError("phase gradient must be finite");
  ReflectionResult r;
  r.sin_theta_r = std::sin(theta_i_deg * kPi / 180.0) +
                  lambda0_nm / (2.0 * kPi) * gradient_rad_per_nm;
  if (std::fabs(r.sin_theta_r) > 1.0) {
    r.evanescent = true;
    r.theta_r_deg = 0.0;
  } else {
    r.evanescent = false;
    r.theta_r_deg = std::asin(r.sin_theta_r) * 180.0 / kPi;
  }
  return r;
}

namespace {

nlohmann::ordered_json design_json(const DesignSpec& s) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(s.kind);
  j["lambda0_nm"] = s.lambda0_nm;
  j["d_nm"] = s.d_nm;
  j["unit_cell_x_nm"] = s.unit_cell_x_nm;
  j["unit_cell_y_nm"] = s.unit_cell_y_nm;
  j["aperture_radius_nm"] = s.aperture();
  return j;
}

}  // namespace

void layout_to_json(std::ostream& os, const MetasurfaceLayout& l) {
  nlohmann::ordered_json j;
  j["design"] = design_json(l.spec);
  auto cells = nlohmann::ordered_json::array();
  for (const auto& c : l.supercells) {
    nlohmann::ordered_json row;
    row["n"] = c.n;
    row["r_start_nm"] = c.r_start_nm;
    row["r_end_nm"] = c.r_end_nm;
    row["n_unit_cells"] = c.n_unit_cells;
    row["theta_inner_deg"] = c.theta_inner_deg;
    row["truncated"] = c.truncated;
    cells.push_back(row);
  }
  j["supercells"] = cells;
  auto elements = nlohmann::ordered_json::array();
  for (const auto& e : l.elements) {
    nlohmann::ordered_json row;
    row["x_nm"] = e.x_nm;
    row["y_nm"] = e.y_nm;
    row["encoded_phase_rad"] = e.encoded_phase_rad;
    if (const auto* res = std::get_if<ResonantGeometry>(&e.geometry)) {
      row["palette_index"] = res->palette_index;
      row["lx_nm"] = res->lx_nm;
      row["ly_nm"] = res->ly_nm;
    } else {
      const auto& geo = std::get<GeometricGeometry>(e.geometry);
      row["rotation_rad"] = geo.rotation_rad;
    }
    elements.push_back(row);
  }
  j["elements"] = elements;
  os << j.dump(2) << '\n';
}

void layout_to_csv(std::ostream& os, const MetasurfaceLayout& l) {
  os << "x_nm,y_nm,lx_nm,ly_nm,rotation_deg,phase_rad\n";
  for (const auto& e : l.elements) {
    double lx, ly, rot_deg;
    if (const auto* res = std::get_if<ResonantGeometry>(&e.geometry)) {
      lx = res->lx_nm;
      ly = res->ly_nm;
      rot_deg = 0.0;
    } else {
      const auto& geo = std::get<GeometricGeometry>(e.geometry);
      lx = kGeometricRodLxNm;
      ly = kGeometricRodLyNm;
      rot_deg = geo.rotation_rad * 180.0 / kPi;
    }
    os << format_sig(e.x_nm) << ',' << format_sig(e.y_nm) << ','
       << format_sig(lx) << ',' << format_sig(ly) << ',' << format_sig(rot_deg)
       << ',' << format_sig(e.encoded_phase_rad) << '\n';
  }
}

void layout_to_svg(std::ostream& os, const MetasurfaceLayout& l) {
  /* 1 px per 100 nm, origin at the aperture center */
  const double scale = 0.01;
  double rim = l.spec.aperture() * scale;
  double side = 2.0 * rim;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_sig(-rim)
     << ' ' << format_sig(-rim) << ' ' << format_sig(side) << ' '
     << format_sig(side) << "\">\n";
  os << "  <circle cx=\"0\" cy=\"0\" r=\"" << format_sig(rim)
     << "\" fill=\"#f4f1e8\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
  for (const auto& e : l.elements) {
    double lx, ly, rot_deg;
    if (const auto* res = std::get_if<ResonantGeometry>(&e.geometry)) {
      lx = res->lx_nm;
      ly = res->ly_nm;
      rot_deg = 0.0;
    } else {
      const auto& geo = std::get<GeometricGeometry>(e.geometry);
      lx = kGeometricRodLxNm;
      ly = kGeometricRodLyNm;
      rot_deg = geo.rotation_rad * 180.0 / kPi;
    }
    double cx = e.x_nm * scale;
    double cy = -e.y_nm * scale;  // SVG y axis points down
    double w = lx * scale;
    double h = ly * scale;
    os << "  <rect x=\"" << format_sig(cx - w / 2.0) << "\" y=\""
       << format_sig(cy - h / 2.0) << "\" width=\"" << format_sig(w)
       << "\" height=\"" << format_sig(h) << "\"";
    if (rot_deg != 0.0)
      os << " transform=\"rotate(" << format_sig(-rot_deg) << ' '
         << format_sig(cx) << ' ' << format_sig(cy) << ")\"";
    os << " fill=\"#8b6f2f\"/>\n";
  }
  os << "</svg>\n";
}

}  // namespace aqv
