#pragma once

#include "nullsol/rational.hpp"

#include <complex>
#include <string>

namespace nullsol {

/// Exact complex number re + im*i with rational parts.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(Rational real) : re(std::move(real)) {}  // NOLINT: implicit by intent
  Gaussian(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  Gaussian(long v) : re(v) {}  // NOLINT

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  /// Throws std::domain_error on division by zero.
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

Gaussian pow(const Gaussian& base, unsigned exponent);

/// Canonical text: `a`, `a/b`, `b*i`, or `a+b*i` / `a-b*i`.
std::string to_string(const Gaussian& z);

std::complex<double> to_complex(const Gaussian& z);

}  // namespace nullsol
