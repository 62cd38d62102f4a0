#pragma once

#include "nullsol/multipoly.hpp"
#include "nullsol/symbol.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace nullsol {

/// Descending graded reverse lexicographic order with X1 > X2 > ... > T.
struct GrevlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Monic Groebner basis of an ideal with respect to grevlex.
struct GroebnerBasis {
  int dimension = 0;
  std::vector<MultiPoly> polys;
};

struct GroebnerResult {
  /// Absent when the reduction cap was hit.
  std::optional<GroebnerBasis> basis;
  /// A nonzero constant was derived; the basis is then {1}.
  bool unit = false;
  bool capped = false;
  std::size_t reductions = 0;
};

/// Buchberger's algorithm with the coprime-leading-monomial criterion. Stops
/// early once a constant appears. `reduction_cap` bounds the number of
/// single-term reduction steps.
GroebnerResult groebner_basis(int dimension, std::span<const MultiPoly> polys, std::size_t reduction_cap);

/// Grevlex leading exponent; p must be nonzero.
Exponents grevlex_leading_exponents(const MultiPoly& p);
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);
/// Full remainder of p modulo `basis` under grevlex.
MultiPoly grevlex_normal_form(const MultiPoly& p, std::span<const MultiPoly> basis);

enum class UnitIdealStatus { Unit, NotUnit, Inconclusive };

struct UnitTestResult {
  UnitIdealStatus status = UnitIdealStatus::Inconclusive;
  std::size_t reductions = 0;
  /// Inconclusive counts as "not shown to be unit".
  bool is_unit() const { return status == UnitIdealStatus::Unit; }
};

/// Whether the ideal generated by the system over Q(i) contains 1. A unit
/// ideal has no complex, hence no real, common zeros.
UnitTestResult groebner_unit_test(const RealPolySystem& sys, std::size_t reduction_cap);

const char* to_string(UnitIdealStatus s);

}  // namespace nullsol
