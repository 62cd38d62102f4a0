#pragma once

#include "nullsol/gaussian.hpp"

#include <climits>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace nullsol {

/// Exponents of X1..Xd followed by T; length is always dimension + 1.
using Exponents = std::vector<std::uint32_t>;

/// Degree of the zero polynomial. Compares below every real degree.
inline constexpr int kNegInfDegree = INT_MIN;

unsigned exponent_sum(const Exponents& e);

/// Descending graded-lex order with T > Xd > ... > X1.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in X1..Xd, T over the Gaussian rationals. Terms are kept
/// in canonical form (no zero coefficients), so `==` is semantic equality.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Gaussian, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(int dimension);

  static MultiPoly constant(int dimension, const Gaussian& c);
  /// `slot` in [0, dimension]; slot == dimension is T.
  static MultiPoly variable(int dimension, int slot);
  static MultiPoly monomial(int dimension, Exponents exps, const Gaussian& c);

  int dimension() const { return dimension_; }
  int slots() const { return dimension_ + 1; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Constant polynomial (including zero).
  bool is_constant() const;
  /// Coefficient of the exponent vector, zero if absent.
  Gaussian coefficient(const Exponents& e) const;

  /// Adds c * x^e, dropping the term if the coefficient cancels.
  void add_term(const Exponents& e, const Gaussian& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly scaled(const Gaussian& c) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a) { return a.scaled(Gaussian(-1)); }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.dimension_ == b.dimension_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

 private:
  void require_same_dimension(const MultiPoly& o) const;

  int dimension_ = 0;
  TermMap terms_;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly pow(const MultiPoly& base, unsigned exponent);

/// Maximum exponent sum over the terms; kNegInfDegree for zero.
int total_degree(const MultiPoly& p);
/// Highest power of the given slot; kNegInfDegree for zero.
int degree_in(const MultiPoly& p, int slot);

/// Exact evaluation; `point` holds values for X1..Xd, T.
Gaussian eval(const MultiPoly& p, std::span<const Gaussian> point);
std::complex<double> eval_numeric(const MultiPoly& p, std::span<const std::complex<double>> point);

MultiPoly partial_derivative(const MultiPoly& p, int slot);

/// [a0, ..., an] with p = sum a_k T^k; each a_k has the same dimension as p
/// and no T. Empty for p = 0; interior zero coefficients are kept.
std::vector<MultiPoly> coefficients_in_T(const MultiPoly& p);

/// Sum of the terms of exactly the given total degree.
MultiPoly homogeneous_component(const MultiPoly& p, int degree);

/// p with X1..Xd set to zero, i.e. p(0, T).
MultiPoly restrict_to_time_axis(const MultiPoly& p);

}  // namespace nullsol
