#pragma once

#include <vector>

namespace aqv {

struct QuadNode {
  double x;
  double w;
};

/* Gauss-Legendre nodes and weights on [a, b], n >= 1. */
std::vector<QuadNode> gauss_legendre(int n, double a, double b);

}  // namespace aqv
