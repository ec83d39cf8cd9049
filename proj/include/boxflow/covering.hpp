#pragma once

#include <array>
#include <vector>

#include "boxflow/state_space.hpp"
#include "boxflow/types.hpp"

namespace boxflow {

/// Marker used in the neighbor table for a face across which the covering
/// ends (the adjacent grid cell is inactive or outside the grid).
inline constexpr Index kExterior = -1;

/// Uniform covering of X by congruent axis-aligned boxes. The grid is
/// anchored to the bounding box of X, so when X equals its bounding box the
/// covering tiles X exactly. Active boxes are the grid cells judged to
/// intersect X; they are indexed in row-major order over the grid and the
/// structure is immutable after construction.
class BoxCovering {
 public:
  BoxCovering() = default;

  int level() const { return level_; }
  int dim() const { return dim_; }
  const VectorXi& boxes_per_axis() const { return boxes_per_axis_; }
  const Vector& origin() const { return origin_; }
  const Vector& box_size() const { return box_size_; }
  Index n_active() const { return static_cast<Index>(active_.size()); }
  const std::vector<Index>& active() const { return active_; }

  /// Volume of one box (all boxes are congruent).
  Scalar box_measure() const { return box_measure_; }
  Scalar min_box_size() const { return box_size_.minCoeff(); }

  /// Active index of the box adjacent to active box `i` across face
  /// (axis, side), or kExterior. side 0 = low face, side 1 = high face.
  Index neighbor(Index i, int axis, int side) const {
    return neighbors_[static_cast<size_t>(i) * 2 * dim_ + 2 * axis + side];
  }

  /// Lower corner of active box `i`.
  Vector box_lo(Index i) const;
  /// Upper corner of active box `i`.
  Vector box_hi(Index i) const;
  /// Center of active box `i`.
  Vector box_center(Index i) const;

  /// Active box containing `x` under the half-open convention
  /// [lo, hi) per axis, or -1 if `x` falls outside the covering.
  Index locate(const Point& x) const;

  /// Grid cell coordinates of active box `i`.
  VectorXi grid_coords(Index i) const;

  /// Fraction of box `i` lying inside X, estimated on a tensor midpoint
  /// grid with `samples_per_axis` points per axis (the projection rule for
  /// indicator-like integrands).
  Scalar volume_fraction(Index i, const StateSpace& space,
                         int samples_per_axis = 10) const;

  friend BoxCovering build_covering(const StateSpace& space,
                                    const VectorXi& boxes_per_axis);

 private:
  int level_ = 0;
  int dim_ = 0;
  VectorXi boxes_per_axis_;
  Vector origin_;
  Vector box_size_;
  Scalar box_measure_ = 0;
  std::vector<Index> active_;          // flat grid index per active box
  std::vector<Index> grid_to_active_;  // -1 where inactive
  std::vector<Index> neighbors_;       // n_active * 2*dim entries
};

/// Builds the uniform covering of X with the given number of boxes per
/// axis. A grid cell is active iff any point of a fixed 5^d tensor sample
/// grid inside the cell (plus the cell center) satisfies membership; this
/// is exact when X is a union of grid cells and approximate for curved X.
/// Throws std::invalid_argument if no box is active or the request is
/// malformed.
BoxCovering build_covering(const StateSpace& space,
                           const VectorXi& boxes_per_axis);

}  // namespace boxflow
