#pragma once

#include <functional>
#include <vector>

#include "boxflow/types.hpp"

namespace boxflow {

/// Nodes and weights of the q-point Gauss-Legendre rule on [-1, 1].
/// Computed once per q and cached; exact for polynomials of degree 2q-1.
struct GaussRule {
  Vector nodes;
  Vector weights;
};

const GaussRule& gauss_legendre(int q);

enum class QuadratureRule {
  kGauss,     // tensor Gauss-Legendre, for smooth integrands
  kMidpoint,  // tensor midpoint grid, for indicator-like integrands
};

struct BoxQuadrature {
  QuadratureRule rule = QuadratureRule::kGauss;
  int points_per_axis = 4;
};

/// Integrates f over the axis-aligned box [lo, hi] with a tensor rule.
Scalar integrate_box(const std::function<Scalar(const Point&)>& f,
                     const Vector& lo, const Vector& hi,
                     const BoxQuadrature& quad);

/// Visits every node (with its weight) of the tensor rule on [lo, hi].
void for_each_node(const Vector& lo, const Vector& hi,
                   const BoxQuadrature& quad,
                   const std::function<void(const Point&, Scalar)>& visit);

/// Odd-multiple offsets (2r+1)/(2k), r = 0..k-1, scaled to [lo, hi]:
/// the deterministic box-interior sample grid.
std::vector<Scalar> interior_offsets(Scalar lo, Scalar hi, int k);

}  // namespace boxflow
