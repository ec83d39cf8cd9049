#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "boxflow/test_function.hpp"
#include "boxflow/types.hpp"
#include "boxflow/vector_field.hpp"

namespace boxflow {

/// Test-function entry of a study: a smooth bump or an indicator.
struct FunctionSpec {
  std::string kind = "bump";  // bump | box_indicator | ball_indicator
  std::string name = "u";
  Vector center;
  Vector radius;  // per-axis radii; indicator boxes use [center-r, center+r]
  int exponent = 3;
};

struct StudySpec {
  std::string field = "constant";
  std::map<std::string, Scalar> field_params;
  std::string space = "box";  // box | ball
  Vector space_lo, space_hi;
  Vector ball_center;
  Scalar ball_radius = 0;
  std::vector<VectorXi> levels;  // boxes per axis, strictly increasing
  std::vector<Scalar> times;
  std::vector<FunctionSpec> functions;
  Scalar evolve_tolerance = 1e-10;
  int reference_nodes_per_axis = 4;
  int projection_points_per_axis = 4;
  int face_quadrature_points = 6;
  int quotient_points_per_axis = 8;
  std::uint64_t seed = 0;
  int threads = 1;

  void validate() const;  // throws std::invalid_argument
};

StudySpec parse_study(const std::string& json_text);
std::string study_to_json(const StudySpec& spec);

/// One (level, time, function) coordinate of a convergence study.
struct ConvergenceEntry {
  int level = 0;
  Scalar t = 0;
  std::string function;
  Scalar e_l1 = 0;        // || exp(t G_n) pi_n u - pi_n Ptilde^t u ||_1
  Scalar order_hat = 0;   // log2(e at previous level / e); NaN at the first
  Scalar reference_norm = 0;
  Scalar evolved_mass = 0;
};

struct LevelDiagnostics {
  int level = 0;
  Index n_active = 0;
  std::map<std::string, Scalar> consistency_error;  // per smooth function
  Scalar contraction_margin = 0;  // max of ||w||_1 - ||u||_1 over runs
  bool failed = false;
  std::string error;
};

struct ConvergenceReport {
  StudySpec spec;
  std::vector<ConvergenceEntry> entries;
  std::vector<LevelDiagnostics> levels;
  /// Mass of the evolved density over time on the finest level, per
  /// function: rows (t, mass).
  std::vector<std::pair<Scalar, Scalar>> mass_curve;
};

/// Runs the convergence study: per level, build the covering, assemble the
/// generator, project every function, evolve to every time and compare
/// against the trajectory-based reference in L1. A failing level is
/// recorded and the study continues.
ConvergenceReport run_convergence(const StudySpec& spec);

/// Writes report.json, errors.csv (level, t, function, e_l1, order_hat)
/// and massloss.csv (t, mass) under out_dir.
void write_report(const ConvergenceReport& report, const std::string& out_dir);

struct CheckResult {
  std::string name;
  bool pass = false;
  Scalar margin = 0;     // signed distance to the tolerance; >= 0 passes
  Scalar tolerance = 0;
  std::string detail;
};

struct LevelCheckReport {
  int level = 0;
  bool pass = false;
  std::vector<CheckResult> checks;
  std::string first_failure;
};

struct InvariantReport {
  bool pass = false;
  std::vector<LevelCheckReport> levels;
};

/// Runs the structural checks behind the contraction-semigroup property on
/// every level of the study: generator sign pattern, column sums,
/// contraction, positivity, semigroup law, resolvent identity, and the
/// finite-t quotient oracle. Violations are reported, not thrown.
InvariantReport run_invariant_suite(const StudySpec& spec);

std::string invariant_report_to_json(const InvariantReport& report);

// Helpers shared by the CLI and the suites.
StateSpace space_from_study(const StudySpec& spec);
VectorField field_from_study(const StudySpec& spec);
TestFunction function_from_spec(const FunctionSpec& fs);

}  // namespace boxflow
