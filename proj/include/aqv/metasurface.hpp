#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace aqv {

enum class DesignKind { resonant, geometric };

DesignKind design_kind_from_string(const std::string& s);
const char* to_string(DesignKind k);

/* Fixed rod footprint of the geometric design. */
inline constexpr double kGeometricRodLxNm = 200.0;
inline constexpr double kGeometricRodLyNm = 80.0;

/* Geometry inputs of one mirror design: working wavelength, emitter height
 * above the surface, unit-cell pitch, and the radius out to which antennas
 * are placed (0 means the default d * tan(70 deg)). */
struct DesignSpec {
  DesignKind kind = DesignKind::resonant;
  double lambda0_nm = 852.0;
  double d_nm = 8520.0;
  double unit_cell_x_nm = 300.0;
  double unit_cell_y_nm = 150.0;
  double aperture_radius_nm = 0.0;

  static DesignSpec resonant(double lambda0_nm, double d_nm);
  static DesignSpec geometric(double lambda0_nm, double d_nm);

  double aperture() const;
  void validate() const;
};

/* Phase the mirror must imprint at in-plane position (x, y) so the reflected
 * field converges back onto the emitter sitting at height d on the axis:
 *   (pi - 2 k0 sqrt(x^2 + y^2 + d^2)) wrapped to [0, 2pi). */
double phase_profile(const DesignSpec& s, double x_nm, double y_nm);

/* One radial zone over which the target phase wraps through 2pi. */
struct SupercellRecord {
  int n = 0;  // 1-based zone index
  double r_start_nm = 0.0;
  double r_end_nm = 0.0;
  int n_unit_cells = 0;
  double theta_inner_deg = 0.0;  // emitter-to-inner-edge polar angle
  bool truncated = false;        // cut short by the aperture rim

  double length_nm() const { return r_end_nm - r_start_nm; }
};

/* Phase zones tiling [0, aperture) exactly; the zone boundaries sit at
 * r_n = sqrt(n lambda0 d + n^2 lambda0^2 / 4) and the outermost record is
 * cut (and flagged) at the rim. The cell count snaps the exact length to the
 * pitch, counting a cell once at least three quarters of it fits. */
std::vector<SupercellRecord> supercell_boundaries(const DesignSpec& s);

struct PaletteEntry {
  int index;
  double lx_nm;
  double ly_nm;
  double phase_rad;
};

/* The five-antenna reflection-phase palette of the resonant design, phases
 * evenly spaced by 2pi/5. */
std::vector<PaletteEntry> default_palette();

/* Header index,lx_nm,ly_nm,phase_rad. */
std::vector<PaletteEntry> palette_from_csv(std::istream& is);
void palette_to_csv(std::ostream& os, const std::vector<PaletteEntry>& p);

struct ResonantGeometry {
  int palette_index;
  double lx_nm;
  double ly_nm;
};

struct GeometricGeometry {
  double rotation_rad;  // in [0, pi)
};

struct AntennaElement {
  double x_nm = 0.0;
  double y_nm = 0.0;
  double encoded_phase_rad = 0.0;
  std::variant<ResonantGeometry, GeometricGeometry> geometry;
};

struct MetasurfaceLayout {
  DesignSpec spec;
  std::vector<SupercellRecord> supercells;
  std::vector<AntennaElement> elements;
};

/* Radial row of unit cells from the center outward, each carrying the
 * palette antenna whose phase is circularly nearest the target profile at
 * the cell center (ties resolve to the lower palette index). The row repeats
 * periodically in y at the unit_cell_y pitch. */
MetasurfaceLayout build_resonant_layout(const DesignSpec& s,
                                        const std::vector<PaletteEntry>& palette);

/* Square grid of identical rods covering the aperture disk, each rotated by
 * half the local target phase so its Pancharatnam-Berry phase encodes the
 * profile exactly. */
MetasurfaceLayout build_geometric_layout(const DesignSpec& s);

/* Phase picked up by a circularly polarized wave crossing a rod rotated by
 * rot_rad: 2 * rot_rad, wrapped to [0, 2pi). */
double geometric_phase(double rot_rad);

struct ReflectionResult {
  bool evanescent = false;
  double sin_theta_r = 0.0;
  double theta_r_deg = 0.0;  // meaningless when evanescent
};

/* Anomalous reflection off a constant lateral phase gradient (rad per nm):
 * sin(theta_r) = sin(theta_i) + (lambda0 / 2pi) * gradient. |sin| > 1 marks
 * the reflected order evanescent. */
ReflectionResult snell_reflection_angle(double theta_i_deg, double lambda0_nm,
                                        double gradient_rad_per_nm);

/* Deterministic exports; identical layouts serialize to identical bytes. */
void layout_to_json(std::ostream& os, const MetasurfaceLayout& l);
void layout_to_csv(std::ostream& os, const MetasurfaceLayout& l);
void layout_to_svg(std::ostream& os, const MetasurfaceLayout& l);

}  // namespace aqv
