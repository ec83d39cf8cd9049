#pragma once

#include <optional>
#include <vector>

#include "boxflow/covering.hpp"
#include "boxflow/density.hpp"
#include "boxflow/state_space.hpp"
#include "boxflow/test_function.hpp"
#include "boxflow/types.hpp"
#include "boxflow/vector_field.hpp"

namespace boxflow {

struct IntegratorOptions {
  Scalar abs_tol = 1e-10;
  Scalar rel_tol = 1e-8;
  /// Time tolerance to which the first boundary crossing is localized.
  Scalar boundary_tol = 1e-9;
  /// Absolute cap on the step size; 0 derives a cap from the space extent
  /// so membership monitoring cannot skip across X in one step.
  Scalar max_step = 0;
  Scalar t_max = 1e6;
  long max_steps = 1000000;
};

/// Outcome of integrating the flow from x0 over a signed time t. log_det
/// accumulates int_0^t div v(phi^s x0) ds along the computed path, which by
/// Liouville's formula is log |det D phi^t(x0)|.
struct TrajectoryResult {
  Point end_point;
  bool exited = false;
  /// First time s* in [0, |t|] at which the path leaves the interior of X,
  /// when exit detection is on and an exit occurred.
  std::optional<Scalar> exit_time;
  Scalar log_det = 0;
};

/// Integrates d/ds y = v(y) from x0 over signed time t with an adaptive
/// embedded Runge-Kutta 5(4) scheme, accumulating log_det alongside.
/// With a non-null space, membership is monitored at every accepted step
/// and the first crossing is localized by bisection on the dense-output
/// interpolant; integration stops at the crossing.
TrajectoryResult integrate(const VectorField& field, const Point& x0,
                           Scalar t, const StateSpace* space = nullptr,
                           const IntegratorOptions& opts = {});

/// Dense-output record of a single integration: states and log_det are
/// queryable at any time in [0, duration]. Used to share one backward
/// trajectory across several evaluation times.
class Trajectory {
 public:
  Scalar duration() const { return duration_; }
  bool exited() const { return exited_; }
  Scalar exit_time() const { return exit_time_; }

  /// State at path time s in [0, duration].
  Point state_at(Scalar s) const;
  Scalar log_det_at(Scalar s) const;

 private:
  friend Trajectory integrate_dense(const VectorField&, const Point&, Scalar,
                                    const StateSpace*,
                                    const IntegratorOptions&);
  struct Step {
    Scalar t0, h;
    // contd5 coefficients on the augmented (state, log_det) vector
    Vector r1, r2, r3, r4, r5;
  };
  std::vector<Step> steps_;
  Vector y0_;
  Scalar duration_ = 0;
  bool exited_ = false;
  Scalar exit_time_ = 0;
};

Trajectory integrate_dense(const VectorField& field, const Point& x0,
                           Scalar t, const StateSpace* space = nullptr,
                           const IntegratorOptions& opts = {});

/// Pointwise evaluation of the outflow transfer operator at x:
/// u(phi^{-t} x) |det D phi^{-t}(x)| if the backward path stays in the
/// interior of X on [0, t], else 0. Contact with the boundary at any
/// s <= t, including s = t, counts as exited.
Scalar transfer_exact(const VectorField& field, const TestFunction& u,
                      const Point& x, Scalar t, const StateSpace& space,
                      const IntegratorOptions& opts = {});

/// Projection of x -> transfer_exact(x) onto the covering, with
/// nodes_per_axis Gauss points per axis per box. One backward trajectory
/// is integrated per node.
DensityVector transfer_exact_grid(const VectorField& field,
                                  const TestFunction& u,
                                  const BoxCovering& covering, Scalar t,
                                  const StateSpace& space,
                                  int nodes_per_axis = 4,
                                  const IntegratorOptions& opts = {},
                                  int threads = 1);

/// Same for several times at once; each node's backward trajectory is
/// integrated once to max(times) and evaluated at every requested time via
/// dense output. times must be nonnegative.
std::vector<DensityVector> transfer_exact_grid_multi(
    const VectorField& field, const TestFunction& u,
    const BoxCovering& covering, const std::vector<Scalar>& times,
    const StateSpace& space, int nodes_per_axis = 4,
    const IntegratorOptions& opts = {}, int threads = 1);

/// The generator of the transfer semigroup applied to a differentiable
/// test function: -u(x) div v(x) - v(x) . grad u(x).
Scalar apply_generator_analytic(const VectorField& field,
                                const TestFunction& u, const Point& x);

/// Closed-form flow map of an affine field, phi^t x = M x + c, with
/// log |det M| = t * tr A. Computed via the exponential of the augmented
/// (d+1) x (d+1) matrix [[A, b], [0, 0]].
struct AffineFlowMap {
  Matrix M;
  Vector c;
  Scalar log_det = 0;

  Point operator()(const Point& x) const { return M * x + c; }
};

AffineFlowMap affine_flow(const AffineData& ad, Scalar t);

}  // namespace boxflow
