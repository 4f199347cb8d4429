#pragma once

#include <array>
#include <complex>

namespace aqv {

/* Density matrix of the three-level emitter in the basis {|0>, |1>, |2>},
 * with |0> the excited state and |1>, |2> the two ground sublevels. */
class DensityMatrix3 {
 public:
  using Complex = std::complex<double>;

  DensityMatrix3() = default;

  /* All population in the excited state; the spontaneous-decay initial
   * condition used throughout. */
  static DensityMatrix3 excited();

  Complex& operator()(int i, int j) { return m_[3 * i + j]; }
  const Complex& operator()(int i, int j) const { return m_[3 * i + j]; }

  Complex trace() const;
  double trace_real() const;

  /* Re tr(rho^2); 1 for a pure state, 1/2 for an even two-level mixture. */
  double purity() const;

  /* max_ij |rho_ij - conj(rho_ji)| */
  double hermiticity_defect() const;

  /* Eigenvalues of the Hermitian part, ascending. */
  std::array<double, 3> eigenvalues() const;

  /* Throws ValidationError unless trace ~ 1, Hermitian and positive
   * semidefinite within the given slacks. */
  void require_physical(double trace_tol = 1e-10, double herm_tol = 1e-10,
                        double psd_tol = 1e-10) const;

 private:
  std::array<Complex, 9> m_{};
};

}  // namespace aqv
