#pragma once

#include "nullsol/multipoly.hpp"
#include "nullsol/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nullsol {

/// Closed interval with exact rational endpoints, lo <= hi.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational point) : lo(point), hi(std::move(point)) {}  // NOLINT
  Interval(Rational l, Rational h);

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

Interval pow(const Interval& x, unsigned k);
Interval scale(const Interval& x, const Rational& c);
/// Intersection of two intervals known to overlap (both enclose the same set).
Interval intersect(const Interval& a, const Interval& b);

/// Axis-aligned box [lo_k, hi_k] in R^d.
struct IntervalBox {
  std::vector<Interval> sides;

  IntervalBox() = default;
  explicit IntervalBox(std::vector<Interval> s) : sides(std::move(s)) {}
  /// [-halfwidth, halfwidth]^d.
  static IntervalBox cube(int dimension, const Rational& halfwidth);

  int dimension() const { return static_cast<int>(sides.size()); }
  bool contains(std::span<const Rational> point) const;
  std::vector<Rational> midpoint() const;
  /// Widest side, lowest index on ties.
  int widest() const;
  std::pair<IntervalBox, IntervalBox> bisect() const;

  friend bool operator==(const IntervalBox& a, const IntervalBox& b) { return a.sides == b.sides; }
};

/// Flat term list of a real polynomial in d variables, prepared for repeated
/// exact and interval evaluation.
class CompiledPoly {
 public:
  struct Term {
    Rational coeff;
    std::vector<std::uint32_t> exps;
  };

  CompiledPoly() = default;
  /// `p` must have real coefficients and no T; uses the first d slots.
  explicit CompiledPoly(const MultiPoly& p);
  CompiledPoly(int dimension, std::vector<Term> terms);

  int dimension() const { return dimension_; }
  const std::vector<Term>& terms() const { return terms_; }
  int degree() const;

  Rational eval(std::span<const Rational> x) const;
  double eval(std::span<const double> x) const;

  /// Term-wise power-basis interval evaluation.
  Interval enclose_naive(const IntervalBox& box) const;
  /// Taylor expansion around the box midpoint, each shifted monomial bounded
  /// over the half-widths.
  Interval enclose_centered(const IntervalBox& box) const;
  /// Intersection of the naive and centered enclosures.
  Interval enclose(const IntervalBox& box) const;

  /// Coefficients of p(center + h) as a polynomial in h.
  CompiledPoly shifted(std::span<const Rational> center) const;

 private:
  int dimension_ = 0;
  std::vector<Term> terms_;
};

std::string to_string(const Interval& x);

}  // namespace nullsol
