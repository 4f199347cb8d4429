#include "aqv/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <memory>

#include "aqv/errors.hpp"

namespace aqv {

std::vector<QuadNode> gauss_legendre(int n, double a, double b) {
  if (n < 1) throw ValidationError("quadrature order must be at least 1");
  if (!(b > a)) throw ValidationError("quadrature interval must be nonempty");
  std::unique_ptr<gsl_integration_glfixed_table,
                  decltype(&gsl_integration_glfixed_table_free)>
      table(gsl_integration_glfixed_table_alloc(static_cast<size_t>(n)),
            &gsl_integration_glfixed_table_free);
  if (!table) throw NumericalError("failed to build Gauss-Legendre table");
  std::vector<QuadNode> nodes(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &nodes[i].x,
                                  &nodes[i].w, table.get());
  return nodes;
}

}  // namespace aqv
