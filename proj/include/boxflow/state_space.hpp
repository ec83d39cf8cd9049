#pragma once

#include <functional>
#include <stdexcept>

#include "boxflow/types.hpp"

namespace boxflow {

/// A compact state space X given by a bounding box and a membership
/// predicate. The predicate tests the open interior of X: boundary points
/// answer false. This is a measure-zero distinction for all quadrature,
/// and it is the convention exit detection relies on (contact with the
/// boundary counts as having left the interior).
struct StateSpace {
  int dim = 0;
  Vector lo;  // bounding box, lo[k] < hi[k]
  Vector hi;
  std::function<bool(const Point&)> member;
  /// Optional outward unit normal on (a full-measure subset of) the
  /// boundary. Only diagnostic checks use it; may be empty.
  std::function<Vector(const Point&)> boundary_normal;

  bool in_bounding_box(const Point& x) const {
    for (int k = 0; k < dim; ++k)
      if (x[k] < lo[k] || x[k] > hi[k]) return false;
    return true;
  }
};

/// X equal to its bounding box [lo, hi].
StateSpace make_box_space(const Vector& lo, const Vector& hi);

/// Closed ball of given radius inside the bounding box [lo, hi].
StateSpace make_ball_space(const Point& center, Scalar radius,
                           const Vector& lo, const Vector& hi);

/// Sampled sanity check: every member point lies in the bounding box and
/// membership answers consistently on repeated evaluation. Throws
/// std::invalid_argument on violation.
void validate_space(const StateSpace& space, int samples_per_axis = 16);

}  // namespace boxflow
