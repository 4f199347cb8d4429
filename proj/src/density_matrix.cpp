#include "aqv/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "aqv/errors.hpp"
#include "aqv/text.hpp"

namespace aqv {

DensityMatrix3 DensityMatrix3::excited() {
  DensityMatrix3 rho;
  rho(0, 0) = 1.0;
  return rho;
}

DensityMatrix3::Complex DensityMatrix3::trace() const {
  return m_[0] + m_[4] + m_[8];
}

double DensityMatrix3::trace_real() const { return trace().real(); }

double DensityMatrix3::purity() const {
  /* tr(rho^2) = sum_ij rho_ij rho_ji */
  Complex p = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p += (*this)(i, j) * (*this)(j, i);
  return p.real();
}

double DensityMatrix3::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

std::array<double, 3> DensityMatrix3::eigenvalues() const {
  Eigen::Matrix3cd h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      h(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver(h,
                                                         Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2)};
}

void DensityMatrix3::require_physical(double trace_tol, double herm_tol,
                                      double psd_tol) const {
  double tr_err = std::abs(trace() - Complex(1.0));
  if (tr_err > trace_tol)
    throw ValidationError("density matrix trace off unity by " +
                          format_full(tr_err));
  double herm = hermiticity_defect();
  if (herm > herm_tol)
    throw ValidationError("density matrix not Hermitian, defect " +
                          format_full(herm));
  double lowest = eigenvalues()[0];
  if (lowest < -psd_tol)
    throw ValidationError("density matrix not positive, eigenvalue " +
                          format_full(lowest));
}

}  // namespace aqv
