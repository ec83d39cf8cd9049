#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace boxflow {

using Scalar = double;
using Index = Eigen::Index;

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using VectorXi = Eigen::VectorXi;
using SpMatrix = Eigen::SparseMatrix<Scalar>;  // column-major
using Triplet = Eigen::Triplet<Scalar>;

/// A point in state space; dimension is carried at runtime.
using Point = Eigen::VectorXd;

}  // namespace boxflow
