#pragma once

#include <cstdint>

#include "boxflow/covering.hpp"
#include "boxflow/flow.hpp"
#include "boxflow/types.hpp"
#include "boxflow/vector_field.hpp"

namespace boxflow {

enum class FlowMode {
  kFullFlow,  // ignore the boundary of X; drop only what leaves the covering
  kKilled,    // drop samples whose path leaves the interior of X in [0, t]
};

enum class SamplingRule {
  kDeterministicGrid,  // tensor sub-grid at box-interior offsets
  kMonteCarlo,         // seeded uniform samples, counter-based generator
  kExactAffine,        // closed-form box-image overlap; affine fields,
                       // full-flow mode only
};

struct SamplingSpec {
  SamplingRule rule = SamplingRule::kDeterministicGrid;
  int points_per_axis = 8;   // deterministic grid resolution
  int samples_per_box = 64;  // Monte Carlo sample count
  std::uint64_t seed = 0;
};

/// Estimate of the discretized transfer operator pi_n P^t pi_n (full flow)
/// or pi_n Ptilde^t pi_n (killed flow). Entry (i, j) is the mass fraction
/// of box j mapped into box i after time t; column sums never exceed 1.
struct UlamMatrix {
  int level = 0;
  Scalar t = 0;
  FlowMode mode = FlowMode::kFullFlow;
  SamplingRule rule = SamplingRule::kDeterministicGrid;
  int samples_per_box = 0;
  std::uint64_t seed = 0;
  SpMatrix matrix;
};

/// Builds the Ulam estimate by integrating sample points of every box
/// forward over time t and tallying landing boxes, or, under
/// kExactAffine, by clipping the affine image of each box against the
/// grid, which realizes pi_n P^t pi_n to machine precision. The exact rule
/// requires field.affine and mode kFullFlow. `space` is consulted only in
/// killed mode.
UlamMatrix estimate(const VectorField& field, const BoxCovering& covering,
                    Scalar t, FlowMode mode, const SamplingSpec& sampling,
                    const StateSpace* space = nullptr,
                    const IntegratorOptions& opts = {}, int threads = 1);

/// The finite-t generator estimate (U - I) / t. Requires U.t > 0.
SpMatrix quotient_matrix(const UlamMatrix& U);

}  // namespace boxflow
