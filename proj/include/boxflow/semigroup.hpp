#pragma once

#include "boxflow/density.hpp"
#include "boxflow/generator.hpp"
#include "boxflow/types.hpp"

namespace boxflow {

enum class EvolutionMethod {
  kScaledTaylor,  // substepped truncated Taylor action (default)
  kKrylov,        // Arnoldi approximation of the exponential action
  kDensePade,     // dense scaling-and-squaring, small dimensions only
};

/// How to apply exp(t G). The semigroup is one-sided: t >= 0.
struct EvolutionSpec {
  Scalar t = 0;
  EvolutionMethod method = EvolutionMethod::kScaledTaylor;
  /// Relative L1 accuracy: the result w satisfies
  /// ||w - exp(tG) u||_1 <= tolerance * ||u||_1.
  Scalar tolerance = 1e-10;
  int max_substeps = 1000000;
};

/// Action of the generated semigroup, w = exp(tG) u. Preserves positivity
/// and contracts the L1 norm up to the requested tolerance. Throws
/// AccuracyError (with the achieved tolerance) if the substep budget is
/// exhausted, std::invalid_argument on t < 0 or level mismatch.
DensityVector evolve(const GeneratorMatrix& G, const DensityVector& u,
                     const EvolutionSpec& spec);

/// Resolvent action w = (lambda I - G)^{-1} u for lambda > 0, by sparse LU
/// with iterative refinement to 1e-10 relative residual. Throws
/// SolverError if the residual cannot be met.
DensityVector resolvent(const GeneratorMatrix& G, const DensityVector& u,
                        Scalar lambda);

/// || evolve(u, s + t) - evolve(evolve(u, t), s) ||_1, the defect of the
/// semigroup law at (s, t).
Scalar semigroup_defect(const GeneratorMatrix& G, const DensityVector& u,
                        Scalar s, Scalar t,
                        const EvolutionSpec& base = EvolutionSpec{});

}  // namespace boxflow
