#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "boxflow/types.hpp"

namespace boxflow {

/// Data of an affine field v(x) = A x + b. Fields that carry this admit a
/// closed-form flow map (see affine_flow in flow.hpp), which the exact
/// Ulam overlap mode exploits.
struct AffineData {
  Matrix A;
  Vector b;
};

/// A C^2 vector field on R^d with a divergence, either analytic or a
/// central finite difference fallback.
struct VectorField {
  int dim = 0;
  std::string name;
  std::function<Vector(const Point&)> eval;
  std::function<Scalar(const Point&)> divergence;
  std::function<Matrix(const Point&)> jacobian;  // optional, diagnostics only
  std::optional<AffineData> affine;
  bool analytic_divergence = false;
};

/// Wraps eval with a second-order central-difference divergence with step
/// fd_step (absolute, in state units).
std::function<Scalar(const Point&)> finite_difference_divergence(
    const std::function<Vector(const Point&)>& eval, int dim,
    Scalar fd_step = 1e-5);

// Built-in catalog. All entries carry analytic divergence.
VectorField make_constant_field(const Vector& velocity);
VectorField make_linear1d(Scalar a, Scalar b);      // v(x) = a x + b
VectorField make_rotation2d(Scalar omega = 1.0);    // v = omega * (-y, x)
VectorField make_saddle2d(Scalar rate = 1.0);       // v = rate * (x, -y)
VectorField make_shear2d(Scalar strength = 1.0);    // v = (strength * y, 0)
VectorField make_affine_field(const Matrix& A, const Vector& b);
/// Gradient flow of a smooth compactly supported bump: v = amplitude *
/// grad prod_k (1 - ((x_k-c_k)/r_k)^2)^5 on its support, 0 outside.
VectorField make_bump_flow2d(const Point& center, const Vector& radius,
                             Scalar amplitude = 1.0);

/// Catalog lookup by name: "constant", "linear1d", "rotation2d",
/// "saddle2d", "shear2d", "bumpflow2d". Parameters are field-specific
/// key/value pairs (missing keys take documented defaults); unknown names
/// throw std::invalid_argument.
VectorField field_from_name(const std::string& name,
                            const std::map<std::string, Scalar>& params = {},
                            int dim = 0);

}  // namespace boxflow
