#pragma once

#include "nullsol/config.hpp"
#include "nullsol/multipoly.hpp"
#include "nullsol/pi_poly.hpp"
#include "nullsol/real_variety.hpp"
#include "nullsol/symbol.hpp"
#include "nullsol/witness.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nullsol {

enum class SpaceTag {
  Smooth,                ///< C^infinity(R^{d+1})
  Distributions,         ///< D'(R^{d+1})
  TestFunctions,         ///< D(R^{d+1})
  CompactDistributions,  ///< E'(R^{d+1})
  SpatiallyTempered,     ///< L(D(R), S'(R^d))
  Besov,                 ///< L(D(R), B_{p,k}(R^d))
  Sobolev,               ///< L(D(R), H_s(R^d))
  SchwartzSpatial,       ///< L(D(R), S(R^d))
  CompactSpatial,        ///< L(D(R), E'(R^d))
  Periodic,              ///< D'_A(R^{d+1}), spatially periodic for the lattice A
};

/// d x d rational matrix whose rows are the period vectors. Always invertible.
class LatticeSpec {
 public:
  /// Throws std::invalid_argument unless the rows form an invertible square matrix.
  static LatticeSpec from_rows(std::vector<std::vector<Rational>> rows);
  /// Rows separated by ';', entries by ','; e.g. "1,0;0,2". Entries must be
  /// rationals. Throws std::invalid_argument on malformed or singular input.
  static LatticeSpec parse(std::string_view text);

  int dimension() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<std::vector<Rational>>& inverse() const { return inverse_; }
  /// A^{-1} k.
  std::vector<Rational> reduced_frequency(const std::vector<Integer>& k) const;

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::vector<Rational>> inverse_;
};

struct SolutionSpace {
  SpaceTag tag = SpaceTag::Distributions;
  std::optional<LatticeSpec> lattice;

  static SolutionSpace of(SpaceTag tag) { return {tag, std::nullopt}; }
  static SolutionSpace periodic(LatticeSpec lattice) { return {SpaceTag::Periodic, std::move(lattice)}; }
};

enum class VerdictStatus { Trivial, Nontrivial, Unknown };

struct Evidence {
  std::optional<int> total_degree;
  /// deg p(0, T).
  std::optional<int> time_axis_degree;
  std::optional<ContentGenerators> content;
  std::optional<RealPolySystem> slice;
  std::optional<EmptinessVerdict> emptiness;

  // Periodic lattice search.
  std::optional<RealPolySystem> lattice_system;
  std::optional<std::vector<Integer>> lattice_point;
  std::optional<std::vector<Rational>> reduced_frequency;
  std::optional<Rational> frequency_radius;
  std::optional<int> searched_lattice_radius;
  std::size_t lattice_points_checked = 0;
  bool enumeration_complete = false;
};

struct Verdict {
  SpaceTag space = SpaceTag::Distributions;
  VerdictStatus status = VerdictStatus::Unknown;
  /// Identifier of the criterion that decided the verdict.
  std::string rule;
  /// Human-readable statement of that criterion.
  std::string criterion;
  Evidence evidence;
  std::optional<Witness> witness;
  std::optional<ResidualReport> residual;
};

/// Decides whether p has only the zero null solution in the given space.
Verdict classify(const MultiPoly& p, const SolutionSpace& space, const SolverConfig& config);

/// Periodic rule: nontrivial iff all T-coefficients vanish at i*v for some
/// v in 2*pi*A^{-1}Z^d. Coefficients may involve pi.
Verdict periodic_test(const PiMultiPoly& p, const LatticeSpec& lattice, const SolverConfig& config);

/// Polynomials in the reduced frequency w (v = 2*pi*w) whose common rational
/// zeros are exactly the w with a_j(2*pi*i*w) = 0 for all j: each a_j is
/// expanded in powers of pi and each pi-coefficient split into real and
/// imaginary parts.
RealPolySystem resonance_system(const PiMultiPoly& p);

const char* to_string(SpaceTag tag);
std::optional<SpaceTag> parse_space_name(std::string_view name);
const char* to_string(VerdictStatus status);

/// Spaces covered by `--space all`, in report order (periodic excluded).
std::vector<SpaceTag> non_periodic_spaces();

/// True for the four spaces sharing the p != 0 spatial-profile rule.
bool is_spatial_profile(SpaceTag tag);

}  // namespace nullsol
