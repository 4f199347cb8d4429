/* aqv: spontaneous-emission engineering for a three-level emitter over an
 * anisotropic vacuum. Subcommands cover the master-equation dynamics, the
 * two metasurface mirror designs, and the far-field estimate of the
 * achievable ground-state coherence. */

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "aqv/anisotropy.hpp"
#include "aqv/errors.hpp"
#include "aqv/farfield.hpp"
#include "aqv/lambda_dynamics.hpp"
#include "aqv/metasurface.hpp"
#include "aqv/reflectance_profile.hpp"
#include "aqv/text.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct GlobalOpts {
  std::string out_dir = ".";
  double lambda0_nm = 852.0;
  double d_over_lambda0 = 10.0;
  std::string design = "resonant";
  double na = 0.7;
  int nodes_theta = 256;
  int nodes_phi = 256;
  std::string taper = "linear";

  double d_nm() const { return d_over_lambda0 * lambda0_nm; }
  aqv::TaperRule taper_rule() const {
    return aqv::taper_rule_from_string(taper);
  }
  aqv::QuadratureSpec quadrature() const { return {nodes_theta, nodes_phi}; }
};

std::filesystem::path out_path(const GlobalOpts& g, const std::string& name) {
  std::filesystem::path dir = g.out_dir.empty() ? "." : g.out_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw aqv::ValidationError("cannot create output directory '" +
                               dir.string() + "': " + ec.message());
  return dir / name;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream os(path, std::ios::binary);
  if (!os)
    throw aqv::ValidationError("cannot open '" + path.string() +
                               "' for writing");
  os << body;
  if (!os) throw aqv::ValidationError("short write to '" + path.string() + "'");
  std::cout << "wrote " << path.string() << "\n";
}

/* ---------------------------------------------------------------- steady */

struct SteadyOpts {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double kappa12_re = 0.0;
  double kappa12_im = 0.0;
};

void run_steady_state(const GlobalOpts& g, const SteadyOpts& o) {
  aqv::DecayCoefficients c(o.gamma1, o.gamma2,
                           {o.kappa12_re, o.kappa12_im});
  aqv::DensityMatrix3 rho = aqv::steady_state(c);
  std::ostringstream report;
  report << "gamma1=" << aqv::format_sig(c.gamma1()) << '\n'
         << "gamma2=" << aqv::format_sig(c.gamma2()) << '\n'
         << "kappa12_re=" << aqv::format_sig(c.kappa12().real()) << '\n'
         << "kappa12_im=" << aqv::format_sig(c.kappa12().imag()) << '\n'
         << "rho00=" << aqv::format_sig(rho(0, 0).real()) << '\n'
         << "rho11=" << aqv::format_sig(rho(1, 1).real()) << '\n'
         << "rho22=" << aqv::format_sig(rho(2, 2).real()) << '\n'
         << "re_rho12=" << aqv::format_sig(rho(1, 2).real()) << '\n'
         << "im_rho12=" << aqv::format_sig(rho(1, 2).imag()) << '\n'
         << "coherence_abs=" << aqv::format_sig(std::abs(rho(1, 2))) << '\n'
         << "purity=" << aqv::format_sig(rho.purity()) << '\n';
  std::cout << report.str();
  write_file(out_path(g, "steady_state.txt"), report.str());
}

/* ---------------------------------------------------------------- evolve */

struct EvolveOpts {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double kappa12_re = 0.0;
  double kappa12_im = 0.0;
  double omega0 = 0.0;
  double t_end = 10.0;
  double dt = 1e-3;
};

void run_evolve(const GlobalOpts& g, const EvolveOpts& o) {
  aqv::DecayCoefficients c(o.gamma1, o.gamma2, {o.kappa12_re, o.kappa12_im},
                           o.omega0);
  auto traj = aqv::evolve_numeric(c, o.t_end, o.dt);

  std::ostringstream csv;
  csv << "t,rho00,rho11,rho22,re_rho12,im_rho12,"
         "rho00_exact,rho11_exact,rho22_exact,re_rho12_exact,im_rho12_exact\n";
  double max_gap = 0.0;
  for (const auto& pt : traj) {
    aqv::DensityMatrix3 exact = aqv::evolve_analytic(c, pt.t);
    double gap = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        gap = std::max(gap, std::abs(pt.rho(i, j) - exact(i, j)));
    max_gap = std::max(max_gap, gap);
    csv << aqv::format_sig(pt.t) << ','
        << aqv::format_sig(pt.rho(0, 0).real()) << ','
        << aqv::format_sig(pt.rho(1, 1).real()) << ','
        << aqv::format_sig(pt.rho(2, 2).real()) << ','
        << aqv::format_sig(pt.rho(1, 2).real()) << ','
        << aqv::format_sig(pt.rho(1, 2).imag()) << ','
        << aqv::format_sig(exact(0, 0).real()) << ','
        << aqv::format_sig(exact(1, 1).real()) << ','
        << aqv::format_sig(exact(2, 2).real()) << ','
        << aqv::format_sig(exact(1, 2).real()) << ','
        << aqv::format_sig(exact(1, 2).imag()) << '\n';
  }
  write_file(out_path(g, "trajectory.csv"), csv.str());

  const auto& last = traj.back();
  std::cout << "steps=" << traj.size() - 1 << '\n'
            << "t_final=" << aqv::format_sig(last.t) << '\n'
            << "rho11=" << aqv::format_sig(last.rho(1, 1).real()) << '\n'
            << "rho22=" << aqv::format_sig(last.rho(2, 2).real()) << '\n'
            << "re_rho12=" << aqv::format_sig(last.rho(1, 2).real()) << '\n'
            << "im_rho12=" << aqv::format_sig(last.rho(1, 2).imag()) << '\n'
            << "max_gap_vs_analytic=" << aqv::format_sig(max_gap) << '\n';
}

/* ---------------------------------------------------------------- design */

struct DesignOpts {
  std::string palette_path;
  double aperture_lambda0 = 0.0;  // 0 = default 70-degree cone
  bool svg = false;
};

std::string supercell_table_csv(const aqv::MetasurfaceLayout& layout,
                                const aqv::ReflectanceProfile& profile) {
  std::ostringstream os;
  os << "n,length_lambda0,N,theta_deg,reflectance\n";
  for (const auto& c : layout.supercells) {
    os << c.n << ','
       << aqv::format_sig(c.length_nm() / layout.spec.lambda0_nm) << ','
       << c.n_unit_cells << ',' << aqv::format_sig(c.theta_inner_deg) << ','
       << aqv::format_sig(profile.eval(c.theta_inner_deg)) << '\n';
  }
  return os.str();
}

void run_design(const GlobalOpts& g, const DesignOpts& o) {
  aqv::DesignKind kind = aqv::design_kind_from_string(g.design);
  aqv::DesignSpec spec = (kind == aqv::DesignKind::resonant)
                             ? aqv::DesignSpec::resonant(g.lambda0_nm, g.d_nm())
                             : aqv::DesignSpec::geometric(g.lambda0_nm, g.d_nm());
  if (o.aperture_lambda0 != 0.0) {
    spec.aperture_radius_nm = o.aperture_lambda0 * g.lambda0_nm;
    spec.validate();
  }

  aqv::MetasurfaceLayout layout;
  if (kind == aqv::DesignKind::resonant) {
    std::vector<aqv::PaletteEntry> palette;
    if (o.palette_path.empty()) {
      palette = aqv::default_palette();
    } else {
      std::ifstream is(o.palette_path);
      if (!is)
        throw aqv::ValidationError("cannot read palette file '" +
                                   o.palette_path + "'");
      palette = aqv::palette_from_csv(is);
    }
    layout = aqv::build_resonant_layout(spec, palette);
  } else {
    layout = aqv::build_geometric_layout(spec);
  }

  std::ostringstream json;
  aqv::layout_to_json(json, layout);
  write_file(out_path(g, "layout.json"), json.str());

  std::ostringstream csv;
  aqv::layout_to_csv(csv, layout);
  write_file(out_path(g, "layout.csv"), csv.str());

  std::string table = supercell_table_csv(layout, aqv::table2_profile(g.taper_rule()));
  write_file(out_path(g, "supercells.csv"), table);

  if (o.svg) {
    std::ostringstream svg;
    aqv::layout_to_svg(svg, layout);
    write_file(out_path(g, "layout.svg"), svg.str());
  }

  std::cout << "design=" << aqv::to_string(kind) << '\n'
            << "elements=" << layout.elements.size() << '\n'
            << "supercells=" << layout.supercells.size() << '\n'
            << table;
}

/* ------------------------------------------------------------------ fig8 */

struct Fig8Opts {
  std::string profile = "builtin:table2";
};

aqv::ReflectanceProfile load_profile(const std::string& name,
                                     aqv::TaperRule taper) {
  if (name == "builtin:table2") return aqv::table2_profile(taper);
  std::ifstream is(name);
  if (!is)
    throw aqv::ValidationError("cannot read reflectance profile '" + name +
                               "'");
  return aqv::ReflectanceProfile::from_json(is);
}

void run_fig8(const GlobalOpts& g, const Fig8Opts& o) {
  aqv::ReflectanceProfile profile = load_profile(o.profile, g.taper_rule());
  auto rows = aqv::na_sweep(profile, aqv::default_na_grid(), g.quadrature());

  std::ostringstream csv;
  aqv::write_sweep_csv(csv, rows);
  write_file(out_path(g, "fig8.csv"), csv.str());

  /* echo the grid row closest to the headline aperture */
  const aqv::EstimateResult* pick = &rows.front();
  for (const auto& r : rows)
    if (std::abs(r.na - g.na) < std::abs(pick->na - g.na)) pick = &r;
  std::cout << "na=" << aqv::format_sig(pick->na) << '\n'
            << "gamma_x_over_gamma0=" << aqv::format_sig(pick->gamma_x_ratio)
            << '\n'
            << "gamma_x_ideal="
            << aqv::format_sig(aqv::gamma_x_ratio_ideal(pick->na)) << '\n'
            << "coherence_signed=" << aqv::format_sig(pick->coherence) << '\n'
            << "coherence_abs=" << aqv::format_sig(std::abs(pick->coherence))
            << '\n';
}

/* ----------------------------------------------------------------- snell */

struct SnellOpts {
  double theta_i_deg = 0.0;
  double supercell_nm = 1500.0;
};

void run_snell(const GlobalOpts& g, const SnellOpts& o) {
  if (!(o.supercell_nm > 0.0))
    throw aqv::ValidationError("supercell length must be positive");
  /* the supercell steps the phase down by 2pi over its length */
  double gradient = -2.0 * kPi / o.supercell_nm;
  auto r = aqv::snell_reflection_angle(o.theta_i_deg, g.lambda0_nm, gradient);
  std::ostringstream report;
  report << "theta_i_deg=" << aqv::format_sig(o.theta_i_deg) << '\n'
         << "gradient_rad_per_nm=" << aqv::format_sig(gradient) << '\n'
         << "sin_theta_r=" << aqv::format_sig(r.sin_theta_r) << '\n';
  if (r.evanescent)
    report << "evanescent=true\n";
  else
    report << "evanescent=false\ntheta_r_deg=" << aqv::format_sig(r.theta_r_deg)
           << '\n';
  std::cout << report.str();
  write_file(out_path(g, "snell.txt"), report.str());
}

/* ---------------------------------------------------------------- table2 */

void run_table2(const GlobalOpts& g) {
  aqv::ReflectanceProfile profile = aqv::table2_profile(g.taper_rule());
  std::ostringstream csv;
  csv << "theta_start_deg,theta_end_deg,rx_start,rx_end\n";
  for (const auto& s : profile.segments())
    csv << aqv::format_sig(s.theta_start_deg) << ','
        << aqv::format_sig(s.theta_end_deg) << ','
        << aqv::format_sig(s.rx_start) << ',' << aqv::format_sig(s.rx_end)
        << '\n';
  std::cout << csv.str();
  write_file(out_path(g, "table2.csv"), csv.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Ground-state coherence tooling for a three-level emitter over an "
      "anisotropic vacuum: decay dynamics, metasurface mirror layouts and "
      "far-field coherence estimates."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Key/value config file; sections name subcommands");

  GlobalOpts g;
  app.add_option("--out,-o", g.out_dir, "Output directory")
      ->envname("AQV_OUT_DIR")
      ->capture_default_str();
  app.add_option("--lambda0-nm", g.lambda0_nm, "Working wavelength in nm")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--d-over-lambda0", g.d_over_lambda0,
                 "Emitter height in units of the wavelength")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--design", g.design, "Mirror design")
      ->check(CLI::IsMember({"resonant", "geometric"}))
      ->capture_default_str();
  app.add_option("--na", g.na, "Headline numerical aperture")
      ->check(CLI::Range(1e-6, 1.0))
      ->capture_default_str();
  app.add_option("--nodes-theta", g.nodes_theta,
                 "Polar quadrature nodes per profile segment")
      ->check(CLI::Range(16, 1 << 20))
      ->capture_default_str();
  app.add_option("--nodes-phi", g.nodes_phi, "Azimuthal quadrature nodes")
      ->check(CLI::Range(16, 1 << 20))
      ->capture_default_str();
  app.add_option("--taper", g.taper,
                 "Reflectance continuation past the last tabulated angle")
      ->check(CLI::IsMember({"linear", "hold"}))
      ->capture_default_str();

  SteadyOpts steady;
  CLI::App* cmd_steady =
      app.add_subcommand("steady-state", "Long-time state of pure decay");
  cmd_steady->add_option("--gamma1", steady.gamma1, "Decay rate to |1>")
      ->required();
  cmd_steady->add_option("--gamma2", steady.gamma2, "Decay rate to |2>")
      ->required();
  cmd_steady->add_option("--kappa12-re", steady.kappa12_re,
                         "Cross-damping, real part")
      ->capture_default_str();
  cmd_steady->add_option("--kappa12-im", steady.kappa12_im,
                         "Cross-damping, imaginary part")
      ->capture_default_str();
  cmd_steady->callback([&] { run_steady_state(g, steady); });

  EvolveOpts evolve;
  CLI::App* cmd_evolve = app.add_subcommand(
      "evolve", "Integrate the decay master equation from |0><0|");
  cmd_evolve->add_option("--gamma1", evolve.gamma1, "Decay rate to |1>")
      ->required();
  cmd_evolve->add_option("--gamma2", evolve.gamma2, "Decay rate to |2>")
      ->required();
  cmd_evolve->add_option("--kappa12-re", evolve.kappa12_re,
                         "Cross-damping, real part")
      ->capture_default_str();
  cmd_evolve->add_option("--kappa12-im", evolve.kappa12_im,
                         "Cross-damping, imaginary part")
      ->capture_default_str();
  cmd_evolve->add_option("--omega0", evolve.omega0, "Ground-state splitting")
      ->capture_default_str();
  cmd_evolve->add_option("--t-end", evolve.t_end, "Integration horizon")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd_evolve->add_option("--dt", evolve.dt, "RK4 step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_evolve->callback([&] { run_evolve(g, evolve); });

  DesignOpts design;
  CLI::App* cmd_design = app.add_subcommand(
      "design", "Build a mirror layout and its supercell table");
  cmd_design->add_option("--palette", design.palette_path,
                         "Antenna palette CSV (resonant design)");
  cmd_design->add_option("--aperture-lambda0", design.aperture_lambda0,
                         "Aperture radius in wavelengths (0 = 70-degree cone)")
      ->check(CLI::NonNegativeNumber);
  cmd_design->add_flag("--svg", design.svg, "Also write an SVG sketch");
  cmd_design->callback([&] { run_design(g, design); });

  Fig8Opts fig8;
  CLI::App* cmd_fig8 = app.add_subcommand(
      "fig8", "Sweep collection aperture vs decay rate and coherence");
  cmd_fig8->add_option("--profile", fig8.profile,
                       "Reflectance profile JSON path or builtin:table2")
      ->capture_default_str();
  cmd_fig8->callback([&] { run_fig8(g, fig8); });

  SnellOpts snell;
  CLI::App* cmd_snell = app.add_subcommand(
      "snell", "Anomalous reflection off one supercell's phase gradient");
  cmd_snell->add_option("--theta-i", snell.theta_i_deg,
                        "Incidence angle in degrees")
      ->capture_default_str();
  cmd_snell->add_option("--supercell-nm", snell.supercell_nm,
                        "Supercell length in nm")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_snell->callback([&] { run_snell(g, snell); });

  CLI::App* cmd_table2 = app.add_subcommand(
      "table2", "Print the built-in five-zone reflectance profile");
  cmd_table2->callback([&] { run_table2(g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const aqv::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const aqv::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
