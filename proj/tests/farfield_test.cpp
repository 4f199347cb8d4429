#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "aqv/anisotropy.hpp"
#include "aqv/errors.hpp"
#include "aqv/farfield.hpp"
#include "aqv/quadrature.hpp"
#include "aqv/reflectance_profile.hpp"

namespace {

double integrate(const std::vector<aqv::QuadNode>& nodes,
                 double (*f)(double)) {
  double acc = 0.0;
  for (const auto& n : nodes) acc += n.w * f(n.x);
  return acc;
}

}  // namespace

TEST_CASE("gauss-legendre nodes integrate polynomials exactly") {
  auto nodes = aqv::gauss_legendre(5, -1.0, 1.0);
  REQUIRE(nodes.size() == 5);
  double wsum = 0.0;
  for (const auto& n : nodes) wsum += n.w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(integrate(nodes, [](double x) { return x * x * x * x; }) ==
        doctest::Approx(0.4).epsilon(1e-13));
  /* order n is exact through degree 2n-1 */
  CHECK(std::abs(integrate(nodes, [](double x) { return std::pow(x, 9); })) <
        1e-14);

  auto shifted = aqv::gauss_legendre(16, 0.0, 3.0);
  CHECK(integrate(shifted, [](double x) { return x * x * x * x * x; }) ==
        doctest::Approx(121.5).epsilon(1e-13));

  CHECK_THROWS_AS(aqv::gauss_legendre(0, 0.0, 1.0), const aqv::ValidationError&);
  CHECK_THROWS_AS(aqv::gauss_legendre(4, 1.0, 1.0), const aqv::ValidationError&);
}

TEST_CASE("reflectance profiles evaluate with annulus semantics") {
  aqv::ReflectanceProfile p = aqv::table2_profile(aqv::TaperRule::linear);

  SUBCASE("plateau values, boundaries belonging to the outer zone") {
    CHECK(p.eval(0.0) == 0.60);
    CHECK(p.eval(10.0) == 0.60);
    CHECK(p.eval(17.6) == 0.55);
    CHECK(p.eval(24.6) == 0.50);
    CHECK(p.eval(29.4) == 0.30);
    CHECK(p.eval(33.3) == doctest::Approx(0.30).epsilon(1e-14));
  }

  SUBCASE("linear taper to grazing incidence") {
    CHECK(p.eval(60.0) == doctest::Approx(0.30 * (90.0 - 60.0) / (90.0 - 33.3))
                              .epsilon(1e-13));
    CHECK(p.eval(90.0) == doctest::Approx(0.0).epsilon(1e-13));
  }

  SUBCASE("hold keeps the last tabulated value") {
    aqv::ReflectanceProfile h = aqv::table2_profile(aqv::TaperRule::hold);
    CHECK(h.eval(60.0) == 0.30);
    CHECK(h.eval(90.0) == 0.30);
  }

  SUBCASE("the collection cutoff zeroes everything beyond the aperture") {
    aqv::ReflectanceProfile t = p.truncated(0.5);
    CHECK(t.na() == 0.5);
    CHECK(t.eval(25.0) == 0.50);  // sin(25 deg) = 0.42 still collected
    CHECK(t.eval(40.0) == 0.0);   // sin(40 deg) = 0.64 beyond the cutoff
    CHECK_THROWS_AS(p.truncated(0.0), const aqv::ValidationError&);
    CHECK_THROWS_AS(p.truncated(1.1), const aqv::ValidationError&);
  }

  SUBCASE("angles outside the hemisphere are rejected") {
    CHECK_THROWS_AS(p.eval(-1.0), const aqv::ValidationError&);
    CHECK_THROWS_AS(p.eval(90.5), const aqv::ValidationError&);
  }

  SUBCASE("piecewise construction") {
    auto pc = aqv::ReflectanceProfile::piecewise_constant(
        {{0.0, 0.6}, {17.6, 0.55}});
    CHECK(pc.eval(5.0) == 0.6);
    CHECK(pc.eval(17.6) == 0.55);
    CHECK(pc.eval(89.0) == 0.55);

    auto pl = aqv::ReflectanceProfile::piecewise_linear({{0.0, 1.0}, {90.0, 0.0}});
    CHECK(pl.eval(45.0) == doctest::Approx(0.5).epsilon(1e-14));

    /* values are held flat outside the tabulated range */
    auto held = aqv::ReflectanceProfile::piecewise_linear(
        {{10.0, 0.5}, {20.0, 0.3}});
    CHECK(held.eval(5.0) == 0.5);
    CHECK(held.eval(50.0) == 0.3);

    auto im = aqv::ReflectanceProfile::ideal_mirror(0.7);
    CHECK(im.eval(44.0) == 1.0);  // sin(44 deg) = 0.694 inside
    CHECK(im.eval(45.0) == 0.0);  // sin(45 deg) = 0.707 outside
    REQUIRE(im.segments().size() == 1);

    CHECK_THROWS_AS(aqv::ReflectanceProfile::piecewise_linear({}),
                    const aqv::ValidationError&);
    CHECK_THROWS_AS(
        aqv::ReflectanceProfile::piecewise_linear({{20.0, 0.5}, {10.0, 0.3}}),
        const aqv::ValidationError&);
    CHECK_THROWS_AS(aqv::ReflectanceProfile::piecewise_linear({{0.0, 1.5}}),
                    const aqv::ValidationError&);
    CHECK_THROWS_AS(aqv::ReflectanceProfile::piecewise_linear({{95.0, 0.5}}),
                    const aqv::ValidationError&);
    CHECK_THROWS_AS(aqv::ReflectanceProfile::ideal_mirror(-0.5),
                    const aqv::ValidationError&);
  }

  SUBCASE("taper rule names") {
    CHECK(aqv::taper_rule_from_string("linear") == aqv::TaperRule::linear);
    CHECK(aqv::taper_rule_from_string("hold") == aqv::TaperRule::hold);
    CHECK_THROWS_AS(aqv::taper_rule_from_string("quadratic"),
                    const aqv::ValidationError&);
    CHECK(std::string(aqv::to_string(aqv::TaperRule::hold)) == "hold");
  }
}

TEST_CASE("profile json round-trips") {
  aqv::ReflectanceProfile p = aqv::table2_profile(aqv::TaperRule::linear).truncated(0.7);
  std::ostringstream os;
  p.to_json(os);
  std::istringstream is(os.str());
  aqv::ReflectanceProfile back = aqv::ReflectanceProfile::from_json(is);
  CHECK(back.na() == p.na());
  REQUIRE(back.segments().size() == p.segments().size());
  for (size_t i = 0; i < p.segments().size(); ++i) {
    CHECK(back.segments()[i].theta_start_deg == p.segments()[i].theta_start_deg);
    CHECK(back.segments()[i].theta_end_deg == p.segments()[i].theta_end_deg);
    CHECK(back.segments()[i].rx_start == p.segments()[i].rx_start);
    CHECK(back.segments()[i].rx_end == p.segments()[i].rx_end);
  }

  SUBCASE("breakpoint form") {
    std::istringstream bp(R"({
      "breakpoints": [[0.0, 0.6], [33.3, 0.3]],
      "interpolation": "piecewise-linear",
      "na": 0.7
    })");
    aqv::ReflectanceProfile q = aqv::ReflectanceProfile::from_json(bp);
    CHECK(q.na() == 0.7);
    CHECK(q.eval(0.0) == 0.6);
    CHECK(q.eval(33.3) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(q.eval(40.0) == 0.3);  // held past the last breakpoint

    std::istringstream bc(R"({
      "breakpoints": [[0.0, 0.6], [30.0, 0.2]],
      "interpolation": "piecewise-constant"
    })");
    aqv::ReflectanceProfile qc = aqv::ReflectanceProfile::from_json(bc);
    CHECK(qc.eval(29.0) == 0.6);
    CHECK(qc.eval(30.0) == 0.2);
  }

  SUBCASE("malformed documents are rejected") {
    auto reject = [](const std::string& text) {
      std::istringstream bad(text);
      CHECK_THROWS_AS(aqv::ReflectanceProfile::from_json(bad),
                      const aqv::ValidationError&);
    };
    reject("");
    reject("{}");
    reject(R"({"segments": []})");
    reject(R"({"segments": [[0, 45, 0.5, 0.5]]})");            // stops short of 90
    reject(R"({"segments": [[0, 45, 0.5, 0.5], [50, 90, 0.5, 0.5]]})");  // gap
    reject(R"({"segments": [[0, 90, 1.5, 0.5]]})");            // Rx out of range
    reject(R"({"segments": [[0, 90, 0.5]]})");                 // short row
    reject(R"({"breakpoints": [[0, 0.5]]})");                  // no interpolation
    reject(R"({"breakpoints": [[0, 0.5]], "interpolation": "spline"})");
    reject(R"({"segments": [[0, 90, 0.5, 0.5]], "na": 1.5})");
  }
}

TEST_CASE("a transparent surface leaves the decay rate untouched") {
  auto vacuum = aqv::ReflectanceProfile::piecewise_constant({{0.0, 0.0}});
  CHECK(aqv::gamma_x_ratio(vacuum) == 1.0);
  CHECK(aqv::gamma_x_ratio(vacuum.truncated(0.3)) == 1.0);
}

TEST_CASE("ideal mirror quadrature matches the closed form") {
  CHECK(aqv::gamma_x_ratio_ideal(0.1) ==
        doctest::Approx(0.9924999685138534).epsilon(1e-15));
  CHECK(aqv::gamma_x_ratio_ideal(0.7) ==
        doctest::Approx(0.62666034460463509).epsilon(1e-15));
  CHECK(aqv::gamma_x_ratio_ideal(1.0) == 0.0);
  CHECK_THROWS_AS(aqv::gamma_x_ratio_ideal(0.0), const aqv::ValidationError&);
  CHECK_THROWS_AS(aqv::gamma_x_ratio_ideal(1.5), const aqv::ValidationError&);

  for (int i = 1; i <= 20; ++i) {
    double na = i / 20.0;
    double quad = aqv::gamma_x_ratio(aqv::ReflectanceProfile::ideal_mirror(na));
    CHECK(std::abs(quad - aqv::gamma_x_ratio_ideal(na)) < 1e-12);
  }

  SUBCASE("full collection pins the coherence at the extreme") {
    double r = aqv::gamma_x_ratio(aqv::ReflectanceProfile::ideal_mirror(1.0));
    CHECK(std::abs(r) < 1e-12);
    CHECK(std::abs(aqv::coherence_from_rates(r, 1.0) + 0.5) < 1e-12);
  }
}

TEST_CASE("five-zone profile estimate at the headline aperture") {
  aqv::QuadratureSpec q;  // 256 x 256

  SUBCASE("linear taper") {
    double g = aqv::gamma_x_ratio(
        aqv::table2_profile(aqv::TaperRule::linear).truncated(0.7), q);
    CHECK(g == doctest::Approx(0.84619709470727552).epsilon(1e-12));
    CHECK(aqv::coherence_from_rates(g, 1.0) ==
          doctest::Approx(-0.041653977718210731).epsilon(1e-12));
  }

  SUBCASE("held taper") {
    double g = aqv::gamma_x_ratio(
        aqv::table2_profile(aqv::TaperRule::hold).truncated(0.7), q);
    CHECK(g == doctest::Approx(0.84180580205959587).epsilon(1e-12));
    CHECK(aqv::coherence_from_rates(g, 1.0) ==
          doctest::Approx(-0.042945406557929117).epsilon(1e-12));
  }

  SUBCASE("node counts are already converged") {
    aqv::ReflectanceProfile p =
        aqv::table2_profile(aqv::TaperRule::linear).truncated(0.7);
    double coarse = aqv::gamma_x_ratio(p, {256, 256});
    double fine = aqv::gamma_x_ratio(p, {512, 512});
    CHECK(std::abs(coarse - fine) < 1e-12);
  }

  SUBCASE("node counts below the floor are rejected") {
    aqv::ReflectanceProfile p = aqv::table2_profile();
    CHECK_THROWS_AS(aqv::gamma_x_ratio(p, {8, 256}), const aqv::ValidationError&);
    CHECK_THROWS_AS(aqv::gamma_x_ratio(p, {256, 8}), const aqv::ValidationError&);
  }
}

TEST_CASE("the rate estimate is monotone and linear in the reflectance") {
  SUBCASE("more reflectance, slower decay") {
    std::vector<std::pair<double, double>> hi = {
        {0.0, 0.8}, {20.0, 0.6}, {45.0, 0.4}, {90.0, 0.2}};
    std::vector<std::pair<double, double>> lo;
    for (auto [t, r] : hi) lo.emplace_back(t, 0.5 * r);
    double g_hi = aqv::gamma_x_ratio(
        aqv::ReflectanceProfile::piecewise_linear(hi, 0.8));
    double g_lo = aqv::gamma_x_ratio(
        aqv::ReflectanceProfile::piecewise_linear(lo, 0.8));
    CHECK(g_hi < g_lo);
    CHECK(g_lo < 1.0);
  }

  SUBCASE("the map from reflectance to rate is affine") {
    std::vector<std::pair<double, double>> a = {
        {0.0, 0.6}, {20.0, 0.4}, {45.0, 0.1}, {90.0, 0.0}};
    std::vector<std::pair<double, double>> b = {
        {0.0, 0.2}, {20.0, 0.5}, {45.0, 0.3}, {90.0, 0.1}};
    double alpha = 0.25;
    std::vector<std::pair<double, double>> mix;
    for (size_t i = 0; i < a.size(); ++i)
      mix.emplace_back(a[i].first,
                       alpha * a[i].second + (1.0 - alpha) * b[i].second);
    double ga = aqv::gamma_x_ratio(aqv::ReflectanceProfile::piecewise_linear(a, 0.9));
    double gb = aqv::gamma_x_ratio(aqv::ReflectanceProfile::piecewise_linear(b, 0.9));
    double gm = aqv::gamma_x_ratio(aqv::ReflectanceProfile::piecewise_linear(mix, 0.9));
    CHECK(gm == doctest::Approx(alpha * ga + (1.0 - alpha) * gb).epsilon(1e-13));
  }

  SUBCASE("opening the aperture only slows the dipole down") {
    auto rows = aqv::na_sweep(aqv::table2_profile(aqv::TaperRule::linear),
                              aqv::default_na_grid());
    REQUIRE(rows.size() == 20);
    for (size_t i = 0; i < rows.size(); ++i) {
      CHECK(rows[i].na == (i + 1) / 20.0);
      CHECK(rows[i].gamma_y_ratio == 1.0);
      CHECK(rows[i].coherence <= 0.0);
      CHECK(std::abs(rows[i].coherence) <= 0.5);
      if (i > 0) CHECK(rows[i].gamma_x_ratio <= rows[i - 1].gamma_x_ratio + 1e-12);
    }
  }
}

TEST_CASE("rate asymmetry maps to coherence") {
  CHECK(aqv::coherence_from_rates(0.0, 1.0) == -0.5);
  CHECK(aqv::coherence_from_rates(1.0, 1.0) == 0.0);
  CHECK(aqv::coherence_from_rates(1.0, 0.0) == 0.5);
  CHECK(aqv::coherence_from_rates(0.8, 1.0) ==
        doctest::Approx(-0.2 / 3.6).epsilon(1e-15));
  CHECK_THROWS_AS(aqv::coherence_from_rates(-0.1, 1.0),
                  const aqv::ValidationError&);
  CHECK_THROWS_AS(aqv::coherence_from_rates(0.0, 0.0),
                  const aqv::ValidationError&);

  SUBCASE("agrees with the environment-side formula for equal dipoles") {
    /* a mirror that scales the x response by q while leaving y alone is the
     * same anisotropy as Im Gxx : Im Gyy = q : 1 */
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> ratio(0.0, 2.0);
    std::uniform_real_distribution<double> scale(0.1, 3.0);
    for (int trial = 0; trial < 1000; ++trial) {
      double q = ratio(rng);
      double c = scale(rng);
      double from_rates = aqv::coherence_from_rates(q, 1.0);
      double from_green = aqv::coherence(
          aqv::GreenSample::cartesian(q * c, c), {1.0, 1.0});
      CHECK(std::abs(from_rates - from_green) < 1e-12);
    }
  }
}

TEST_CASE("aperture sweep csv schema is stable") {
  auto rows = aqv::na_sweep(aqv::table2_profile(aqv::TaperRule::linear),
                            aqv::default_na_grid());
  std::ostringstream os;
  aqv::write_sweep_csv(os, rows);
  std::string text = os.str();

  std::istringstream is(text);
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line ==
        "na,gamma_x_over_gamma0,gamma_x_ideal,coherence_signed,coherence_abs");
  size_t n = 0;
  std::string row_na07;
  while (std::getline(is, line)) {
    if (n == 0) CHECK(line.substr(0, 5) == "0.05,");
    if (line.substr(0, 4) == "0.7,") row_na07 = line;
    ++n;
  }
  CHECK(n == 20);

  /* spot-check the headline row against the independent estimate */
  REQUIRE_FALSE(row_na07.empty());
  std::vector<double> fields;
  std::istringstream cells(row_na07);
  std::string cell;
  while (std::getline(cells, cell, ',')) fields.push_back(std::stod(cell));
  REQUIRE(fields.size() == 5);
  CHECK(fields[1] == doctest::Approx(0.84619709470727552).epsilon(1e-11));
  CHECK(fields[2] == doctest::Approx(0.62666034460463509).epsilon(1e-11));
  CHECK(fields[3] == doctest::Approx(-0.041653977718210731).epsilon(1e-10));
  CHECK(fields[4] == doctest::Approx(0.041653977718210731).epsilon(1e-10));

  /* byte-for-byte deterministic */
  std::ostringstream os2;
  aqv::write_sweep_csv(os2, aqv::na_sweep(aqv::table2_profile(aqv::TaperRule::linear),
                                          aqv::default_na_grid()));
  CHECK(text == os2.str());
}
