#pragma once

#include "nullsol/interval.hpp"
#include "nullsol/symbol.hpp"

#include <optional>
#include <span>
#include <vector>

namespace nullsol {

/// Lexicographic order on points using canonical_compare per coordinate, so
/// simple coordinates (0, then 1, -1, 1/2, ...) come first.
bool canonical_point_less(std::span<const Rational> a, std::span<const Rational> b);

/// Rational points tried for an exact zero inside `box`: per coordinate the
/// midpoint, the simplest rational with denominator <= bound, and 0 when the
/// side contains it; the product of those choices when small, otherwise the
/// three uniform choices.
std::vector<std::vector<Rational>> candidate_points(const IntervalBox& box, int denominator_bound);

struct BoxOutcome {
  /// Some polynomial's enclosure excludes zero over the box.
  bool discarded = false;
  /// Smallest candidate (canonical_point_less) at which every polynomial vanishes.
  std::optional<std::vector<Rational>> zero;

  friend bool operator==(const BoxOutcome&, const BoxOutcome&) = default;
};

namespace kernels {

/// Reference implementation: examines boxes one after another.
std::vector<BoxOutcome> examine_boxes_serial(std::span<const CompiledPoly> system, std::span<const IntervalBox> boxes,
                                             int denominator_bound);

/// OpenMP version of examine_boxes_serial; output is element-wise identical.
/// threads == 0 uses the OpenMP default team size.
std::vector<BoxOutcome> examine_boxes_parallel(std::span<const CompiledPoly> system,
                                               std::span<const IntervalBox> boxes, int denominator_bound,
                                               int threads);

}  // namespace kernels

enum class SubdivisionKind { NoZeroInBox, CandidateBoxes, ExactZero };

struct LevelStats {
  int depth = 0;
  std::size_t examined = 0;
  std::size_t discarded = 0;
};

struct SubdivisionOptions {
  int max_depth = 24;
  int denominator_bound = 64;
  std::size_t max_boxes = 1 << 16;
  /// 1 selects the serial kernel.
  int threads = 0;
};

struct SubdivisionResult {
  SubdivisionKind kind = SubdivisionKind::CandidateBoxes;
  std::vector<Rational> zero;
  std::vector<IntervalBox> candidates;
  std::vector<LevelStats> levels;
  bool frontier_capped = false;

  std::size_t boxes_examined() const;
};

/// Breadth-first branch and bound over `box`. Every depth is examined as one
/// batch; the search stops at the first depth that yields an exact zero and
/// returns the canonically smallest one, so the result does not depend on
/// the thread count.
SubdivisionResult subdivision_search(std::span<const CompiledPoly> system, const IntervalBox& box,
                                     const SubdivisionOptions& options);
SubdivisionResult subdivision_search(const RealPolySystem& system, const IntervalBox& box,
                                     const SubdivisionOptions& options);

std::vector<CompiledPoly> compile(const RealPolySystem& system);

const char* to_string(SubdivisionKind kind);

}  // namespace nullsol
