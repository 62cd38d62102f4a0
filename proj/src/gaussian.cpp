#include "nullsol/gaussian.hpp"

#include <stdexcept>

namespace nullsol {

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  Rational r = re * o.re - im * o.im;
  Rational m = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(m);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  Rational norm = o.re * o.re + o.im * o.im;
  if (sgn(norm) == 0) throw std::domain_error("Gaussian division by zero");
  Rational r = (re * o.re + im * o.im) / norm;
  Rational m = (im * o.re - re * o.im) / norm;
  re = std::move(r);
  im = std::move(m);
  return *this;
}

Gaussian pow(const Gaussian& base, unsigned exponent) {
  Gaussian result(1);
  Gaussian b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::string to_string(const Gaussian& z) {
  if (z.is_real()) return to_string(z.re);
  if (sgn(z.re) == 0) return to_string(z.im) + "*i";
  std::string s = to_string(z.re);
  if (sgn(z.im) > 0) s += "+";
  return s + to_string(z.im) + "*i";
}

std::complex<double> to_complex(const Gaussian& z) { return {z.re.get_d(), z.im.get_d()}; }

}  // namespace nullsol
