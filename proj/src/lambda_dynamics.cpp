#include "aqv/lambda_dynamics.hpp"

#include <cmath>
#include <ostream>

#include "aqv/errors.hpp"
#include "aqv/text.hpp"

namespace aqv {

using Complex = std::complex<double>;

DensityMatrix3 steady_state(const DecayCoefficients& c) {
  double total = c.total();
  DensityMatrix3 rho;
  rho(1, 1) = c.gamma1() / total;
  rho(2, 2) = c.gamma2() / total;
  rho(1, 2) = c.kappa12() / total;
  rho(2, 1) = std::conj(rho(1, 2));
  return rho;
}

DensityMatrix3 evolve_analytic(const DecayCoefficients& c, double t) {
  if (!(t >= 0.0))
    throw ValidationError("time must be nonnegative, got " + format_full(t));
  double total = c.total();
  double decayed = 1.0 - std::exp(-total * t);
  DensityMatrix3 rho;
  rho(0, 0) = std::exp(-total * t);
  rho(1, 1) = c.gamma1() / total * decayed;
  rho(2, 2) = c.gamma2() / total * decayed;
  rho(1, 2) = c.kappa12() / total * decayed;
  rho(2, 1) = std::conj(rho(1, 2));
  /* optical coherences stay zero for the |0><0| initial state */
  return rho;
}

namespace {

/* State layout for the integrator: (rho00, rho11, rho22, rho12, rho10,
 * rho20). The remaining entries follow from Hermiticity. */
using State = std::array<Complex, 6>;

State derivative(const DecayCoefficients& c, const State& s) {
  double total = c.total();
  Complex drho00 = -total * s[0];
  Complex drho11 = c.gamma1() * s[0];
  Complex drho22 = c.gamma2() * s[0];
  Complex drho12 = c.kappa12() * s[0];
  Complex upper = Complex(-total / 2.0, c.omega0());
  Complex drho10 = upper * s[4];
  Complex drho20 = upper * s[5];
  return {drho00, drho11, drho22, drho12, drho10, drho20};
}

State rk4_step(const DecayCoefficients& c, const State& s, double dt) {
  State k1 = derivative(c, s);
  State tmp;
  for (int i = 0; i < 6; ++i) tmp[i] = s[i] + 0.5 * dt * k1[i];
  State k2 = derivative(c, tmp);
  for (int i = 0; i < 6; ++i) tmp[i] = s[i] + 0.5 * dt * k2[i];
  State k3 = derivative(c, tmp);
  for (int i = 0; i < 6; ++i) tmp[i] = s[i] + dt * k3[i];
  State k4 = derivative(c, tmp);
  State out;
  for (int i = 0; i < 6; ++i)
    out[i] = s[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

DensityMatrix3 to_matrix(const State& s) {
  DensityMatrix3 rho;
  rho(0, 0) = s[0];
  rho(1, 1) = s[1];
  rho(2, 2) = s[2];
  rho(1, 2) = s[3];
  rho(2, 1) = std::conj(s[3]);
  rho(1, 0) = s[4];
  rho(0, 1) = std::conj(s[4]);
  rho(2, 0) = s[5];
  rho(0, 2) = std::conj(s[5]);
  return rho;
}

}  // namespace

std::vector<TrajectoryPoint> evolve_numeric(const DecayCoefficients& c,
                                            double t_end, double dt) {
  if (!(t_end >= 0.0))
    throw ValidationError("t_end must be nonnegative, got " +
                          format_full(t_end));
  if (!(dt > 0.0))
    throw ValidationError("dt must be positive, got " + format_full(dt));

  State s{};
  s[0] = 1.0;  // all population excited at t = 0

  std::vector<TrajectoryPoint> traj;
  traj.reserve(static_cast<size_t>(t_end / dt) + 2);
  traj.push_back({0.0, to_matrix(s)});

  double t = 0.0;
  while (t < t_end) {
    /* land exactly on t_end; the tail step may be shorter */
    double step = std::min(dt, t_end - t);
    s = rk4_step(c, s, step);
    t += step;
    if (t_end - t < 1e-12 * t_end) t = t_end;

    double drift = std::abs(s[0] + s[1] + s[2] - Complex(1.0));
    if (drift > 1e-6)
      throw NumericalError("trace drifted by " + format_full(drift) +
                           " at t=" + format_full(t) +
                           "; step size too large for RK4");
    traj.push_back({t, to_matrix(s)});
  }
  return traj;
}

void write_trajectory_csv(std::ostream& os,
                          const std::vector<TrajectoryPoint>& traj) {
  os << "t,rho00,rho11,rho22,re_rho12,im_rho12\n";
  for (const auto& pt : traj) {
    os << format_full(pt.t) << ',' << format_full(pt.rho(0, 0).real()) << ','
       << format_full(pt.rho(1, 1).real()) << ','
       << format_full(pt.rho(2, 2).real()) << ','
       << format_full(pt.rho(1, 2).real()) << ','
       << format_full(pt.rho(1, 2).imag()) << '\n';
  }
}

DressedState::DressedState(const std::array<Complex, 4>& amplitudes)
    : a_(amplitudes) {
  double norm2 = 0.0;
  for (const auto& a : a_) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw ValidationError("dressed-state amplitudes not normalized, |a|^2=" +
                          format_full(norm2));
}

std::array<Complex, 4> DressedState::atomic_block() const {
  /* trace over the photon polarization: indices {1X, 1Y, 2X, 2Y} */
  Complex r11 = a_[0] * std::conj(a_[0]) + a_[1] * std::conj(a_[1]);
  Complex r12 = a_[0] * std::conj(a_[2]) + a_[1] * std::conj(a_[3]);
  Complex r22 = a_[2] * std::conj(a_[2]) + a_[3] * std::conj(a_[3]);
  return {r11, r12, std::conj(r12), r22};
}

double DressedState::atomic_purity() const {
  auto b = atomic_block();
  return (b[0] * b[0] + 2.0 * b[1] * b[2] + b[3] * b[3]).real();
}

DensityMatrix3 DressedState::reduced_density_matrix() const {
  auto b = atomic_block();
  DensityMatrix3 rho;
  rho(1, 1) = b[0];
  rho(1, 2) = b[1];
  rho(2, 1) = b[2];
  rho(2, 2) = b[3];
  return rho;
}

DressedState dressed_state(const GreenSample& g, double d01, double d02) {
  if (!(d01 > 0.0) || !(d02 > 0.0))
    throw ValidationError("dipole magnitudes must be positive");
  GreenSample cart = g.to_cartesian();
  if (cart.im_gxy() != 0.0)
    throw ValidationError("dressed state requires Im Gxy = 0, got " +
                          format_full(cart.im_gxy()));
  double gx = cart.im_gxx();
  double gy = cart.im_gyy();
  if (gx + gy <= 0.0)
    throw ValidationError("Green sample must have Im Gxx + Im Gyy > 0");

  /* Each decay channel writes its dipole orientation into the photon:
   * sigma+ emits (sqrt(Im Gxx) |X> + i sqrt(Im Gyy) |Y>), sigma- the
   * conjugate, weighted by the dipole magnitudes. */
  double norm = std::sqrt((d01 * d01 + d02 * d02) * (gx + gy));
  double sx = std::sqrt(gx) / norm;
  double sy = std::sqrt(gy) / norm;
  std::array<Complex, 4> a = {
      Complex(d01 * sx, 0.0),
      Complex(0.0, d01 * sy),
      Complex(d02 * sx, 0.0),
      Complex(0.0, -d02 * sy),
  };
  return DressedState(a);
}

double photonic_coherence_length(double gamma0, double c) {
  if (!(gamma0 > 0.0))
    throw ValidationError("gamma0 must be positive, got " +
                          format_full(gamma0));
  if (!(c > 0.0))
    throw ValidationError("propagation speed must be positive, got " +
                          format_full(c));
  return c / (2.0 * gamma0);
}

}  // namespace aqv
