#pragma once

#include "nullsol/config.hpp"
#include "nullsol/groebner.hpp"
#include "nullsol/interval.hpp"
#include "nullsol/subdivision.hpp"
#include "nullsol/symbol.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nullsol {

enum class EmptinessStatus { Empty, Nonempty, Unknown };
/// DefiniteTerms: some polynomial is c + sum c_a xi^a with every a even and
/// every c_a of the sign of c != 0, so it never vanishes.
enum class CertificateKind { None, UnitIdeal, ExhaustiveSubdivision, ExactPoint, DefiniteTerms };

struct EmptinessDiagnostics {
  /// Pipeline step that produced the verdict.
  std::string stage;
  /// Coordinates no polynomial depends on; the search ran without them.
  std::vector<int> free_variables;
  std::optional<UnitIdealStatus> groebner;
  std::size_t groebner_reductions = 0;
  std::optional<Rational> boundedness_radius;
  /// Half-width of the cube that was subdivided, when a search ran.
  std::optional<Rational> searched_halfwidth;
  std::vector<LevelStats> levels;
  std::size_t boxes_examined = 0;
  bool frontier_capped = false;
  std::size_t unresolved_count = 0;
  /// First few unresolved boxes, for the report.
  std::vector<IntervalBox> unresolved;
};

struct EmptinessVerdict {
  EmptinessStatus status = EmptinessStatus::Unknown;
  /// Exact common zero (Nonempty only).
  std::optional<std::vector<Rational>> witness;
  CertificateKind certificate = CertificateKind::None;
  /// Every real zero satisfies max|xi_k| <= bound (ExhaustiveSubdivision only).
  std::optional<Rational> bound;
  EmptinessDiagnostics diagnostics;
};

inline constexpr std::size_t kReportedUnresolvedBoxes = 8;

/// With F = sum q_k^2 of top degree 2D, certifies F_top >= c > 0 on the
/// max-norm unit sphere by subdivision of its 2d faces. With C_k the absolute
/// coefficient sum of the degree-k part of F, returns the smallest integer
/// R0 >= 1 with c R0^{2D} > sum_k C_k R0^k (at most max(1, sum C_k / c)).
/// Every real common zero then lies in [-R0, R0]^d. nullopt when positivity
/// cannot be certified within the configured depth.
std::optional<Rational> boundedness_radius(const RealPolySystem& sys, const SolverConfig& config);

/// Three-valued decision of whether the system has a common real zero:
/// constant or sign-definite generator, unit-ideal test, then subdivision over
/// the certified cube (or the default cube when unbounded). Coordinates that
/// no polynomial uses are dropped first. An UNKNOWN system is retried one
/// polynomial at a time, since any empty member empties the system.
/// Requires a nonempty system.
EmptinessVerdict decide_emptiness(const RealPolySystem& sys, const SolverConfig& config);

const char* to_string(EmptinessStatus s);
const char* to_string(CertificateKind k);

}  // namespace nullsol
