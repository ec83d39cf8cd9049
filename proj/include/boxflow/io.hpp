#pragma once

#include <string>

#include "boxflow/covering.hpp"
#include "boxflow/density.hpp"
#include "boxflow/types.hpp"
#include "boxflow/ulam.hpp"

namespace boxflow {

// Sparse matrices: Matrix Market coordinate format and a (row, col, value)
// CSV with a header line. Indices are 1-based in Matrix Market, 0-based in
// CSV.
void write_matrix_market(const std::string& path, const SpMatrix& m);
SpMatrix read_matrix_market(const std::string& path);
void write_coo_csv(const std::string& path, const SpMatrix& m);
SpMatrix read_coo_csv(const std::string& path);

// Density vectors: "index,value" CSV and a binary column of 64-bit
// little-endian floats preceded by an 8-byte little-endian entry count.
void write_density_csv(const std::string& path, const DensityVector& u);
Vector read_density_csv(const std::string& path);
void write_density_binary(const std::string& path, const DensityVector& u);
Vector read_density_binary(const std::string& path);

/// Covering description as a JSON document: dim, bounds, boxes_per_axis,
/// active indices.
std::string covering_to_json(const BoxCovering& covering,
                             const StateSpace& space);
void write_covering_json(const std::string& path, const BoxCovering& covering,
                         const StateSpace& space);

/// Sidecar metadata for an exported Ulam matrix (mode, rule, seed, t).
void write_ulam_metadata(const std::string& path, const UlamMatrix& U);

}  // namespace boxflow
