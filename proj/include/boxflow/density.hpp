#pragma once

#include <functional>

#include "boxflow/covering.hpp"
#include "boxflow/quadrature.hpp"
#include "boxflow/types.hpp"

namespace boxflow {

/// Coefficients of a piecewise-constant function on the active boxes of
/// one covering, with L1 semantics: ||u||_1 = box_measure * sum|values|.
/// A density is bound to the covering level it was built on; mixing levels
/// in arithmetic is a usage error.
struct DensityVector {
  int level = 0;
  Scalar box_measure = 0;
  Vector values;
};

Scalar l1_norm(const DensityVector& u);
Scalar l1_distance(const DensityVector& u, const DensityVector& w);

/// Box-wise averages of u over the covering: values_i = (1/m) * int_box u.
/// The integrand is masked by membership at every quadrature node, which
/// realizes the zero-extension of u outside X; boxes straddling the
/// boundary therefore integrate u * chi_X.
DensityVector project(const BoxCovering& covering, const StateSpace& space,
                      const std::function<Scalar(const Point&)>& u,
                      const BoxQuadrature& quad = {}, int threads = 1);

/// Same box-wise averaging without the membership mask, for integrands
/// already supported on the covering (e.g. piecewise constants on it).
DensityVector project_unmasked(const BoxCovering& covering,
                               const std::function<Scalar(const Point&)>& u,
                               const BoxQuadrature& quad = {},
                               int threads = 1);

/// Restriction of u to X. Coefficients are kept as-is (every box meets X);
/// quantities "on X" weight each box by its sampled volume fraction, see
/// l1_norm_on_x.
DensityVector restrict_to_x(const BoxCovering& covering,
                            const DensityVector& u);

/// L1 norm of u integrated over box-intersect-X only, using the sampled
/// volume fraction of each box.
Scalar l1_norm_on_x(const BoxCovering& covering, const StateSpace& space,
                    const DensityVector& u, int samples_per_axis = 10);

/// Pointwise evaluation of the piecewise-constant function: values at the
/// containing box, 0 outside the covering.
Scalar evaluate(const BoxCovering& covering, const DensityVector& u,
                const Point& x);

}  // namespace boxflow
