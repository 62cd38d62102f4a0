#pragma once

#include "nullsol/gaussian.hpp"
#include "nullsol/multipoly.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace nullsol {

/// Polynomial in the transcendental constant pi with coefficients in C
/// (Rational or Gaussian). Because pi is transcendental over Q(i), a value
/// is zero exactly when every coefficient is zero.
template <class C>
class PiPoly {
 public:
  PiPoly() = default;
  PiPoly(C constant) { set(0, std::move(constant)); }  // NOLINT

  static PiPoly pi_power(unsigned k, C c = C(1)) {
    PiPoly p;
    p.set(k, std::move(c));
    return p;
  }

  const std::vector<C>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  C coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C(); }

  void set(std::size_t k, C c) {
    if (coeffs_.size() <= k) coeffs_.resize(k + 1);
    coeffs_[k] = std::move(c);
    trim();
  }

  PiPoly& operator+=(const PiPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  PiPoly& operator-=(const PiPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
  friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
  friend PiPoly operator*(const PiPoly& a, const PiPoly& b) {
    PiPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, C());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    out.trim();
    return out;
  }
  friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  static bool coeff_is_zero(const C& c) {
    if constexpr (requires { c.is_zero(); }) {
      return c.is_zero();
    } else {
      return sgn(c) == 0;
    }
  }
  void trim() {
    while (!coeffs_.empty() && coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

using PiPolynomial = PiPoly<Rational>;
using PiGaussian = PiPoly<Gaussian>;

/// Text such as `0`, `3/4`, `4*PI^2`, `(1+2*i)*PI-1`.
std::string to_string(const PiGaussian& z);

std::complex<double> to_complex(const PiGaussian& z);

/// Polynomial in X1..Xd, T whose coefficients are polynomials in pi:
/// sum_k PI^k * by_pi_power[k]. Trailing zero entries are trimmed.
struct PiMultiPoly {
  int dimension = 0;
  std::vector<MultiPoly> by_pi_power;

  PiMultiPoly() = default;
  explicit PiMultiPoly(const MultiPoly& p);
  PiMultiPoly(int d, std::vector<MultiPoly> parts);

  bool is_zero() const { return by_pi_power.empty(); }
  bool has_pi() const { return by_pi_power.size() > 1; }
  /// The pi-free polynomial; throws std::logic_error when has_pi().
  MultiPoly to_plain() const;
  void trim();

  friend bool operator==(const PiMultiPoly& a, const PiMultiPoly& b) {
    return a.dimension == b.dimension && a.by_pi_power == b.by_pi_power;
  }
};

int total_degree(const PiMultiPoly& p);

/// a_j = sum_k PI^k * coefficients_in_T(by_pi_power[k])[j].
std::vector<PiMultiPoly> coefficients_in_T(const PiMultiPoly& p);

}  // namespace nullsol
