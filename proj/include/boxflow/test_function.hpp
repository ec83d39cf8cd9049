#pragma once

#include <functional>

#include "boxflow/state_space.hpp"
#include "boxflow/types.hpp"

namespace boxflow {

/// Regularity class of a test function, matching the spaces the
/// convergence statements quantify over.
enum class FunctionClass {
  kC1Zero,    // C^1 with support in the interior of X; value and gradient
              // vanish on the boundary
  kC1Inflow,  // C^1 on X, vanishing on the inflow part of the boundary
  kGeneralL1, // merely integrable (indicators); no gradient available
};

struct TestFunction {
  int dim = 0;
  FunctionClass cls = FunctionClass::kGeneralL1;
  std::function<Scalar(const Point&)> eval;
  std::function<Vector(const Point&)> gradient;  // empty for kGeneralL1

  bool has_gradient() const { return static_cast<bool>(gradient); }
};

/// Tensor bump prod_k max(0, 1 - ((x_k-c_k)/r_k)^2)^p. For p >= 2 this is
/// C^1 (C^{p-1} in fact) with compact support and closed-form gradient.
/// With normalize, coefficients are scaled to unit L1 mass.
TestFunction make_bump(const Point& center, const Vector& radius,
                       int exponent = 3, bool normalize = true);

/// Indicator of the box [lo, hi] (class kGeneralL1).
TestFunction make_box_indicator(const Vector& lo, const Vector& hi);

/// Indicator of the closed ball (class kGeneralL1).
TestFunction make_ball_indicator(const Point& center, Scalar radius);

/// Exact L1 mass of the (unnormalized) tensor bump.
Scalar bump_mass(const Vector& radius, int exponent);

/// Sampled check that eval and gradient vanish outside a compact subset of
/// the interior of X (the kC1Zero contract).
bool supported_inside(const TestFunction& u, const StateSpace& space,
                      int samples_per_axis = 32);

}  // namespace boxflow
