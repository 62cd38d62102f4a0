#pragma once

#include "nullsol/rational.hpp"

#include <cstddef>

namespace nullsol {

/// Solver knobs shared by the emptiness engine, the classifier and the CLI.
struct SolverConfig {
  int max_depth = 24;
  Rational default_box_halfwidth = 16;
  int denominator_bound = 64;
  int lattice_radius = 16;
  std::size_t groebner_cap = 50'000;
  /// Largest subdivision frontier kept at one depth; beyond it the search stops
  /// and reports the current boxes as unresolved.
  std::size_t max_boxes = 1 << 16;
  /// Largest number of lattice points enumerated by the periodic test.
  std::size_t max_lattice_points = 1 << 20;
  /// 1 runs the serial reference kernel; 0 lets OpenMP choose.
  int threads = 0;

  /// Throws std::invalid_argument when a cap is not positive.
  void validate() const;
};

}  // namespace nullsol
