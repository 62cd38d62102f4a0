#include "nullsol/pi_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace nullsol {

std::string to_string(const PiGaussian& z) {
  if (z.is_zero()) return "0";
  std::string out;
  for (std::size_t k = z.coeffs().size(); k-- > 0;) {
    const Gaussian& c = z.coeffs()[k];
    if (c.is_zero()) continue;
    std::string term;
    std::string cs = to_string(c);
    bool compound = !c.is_real() && sgn(c.re) != 0;
    if (compound) cs = "(" + cs + ")";
    if (k == 0) {
      term = cs;
    } else {
      std::string pi = k == 1 ? "PI" : "PI^" + std::to_string(k);
      if (c == Gaussian(1)) {
        term = pi;
      } else if (c == Gaussian(-1)) {
        term = "-" + pi;
      } else {
        term = cs + "*" + pi;
      }
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

std::complex<double> to_complex(const PiGaussian& z) {
  std::complex<double> sum = 0.0;
  for (std::size_t k = z.coeffs().size(); k-- > 0;) sum = sum * std::numbers::pi + to_complex(z.coeffs()[k]);
  return sum;
}

PiMultiPoly::PiMultiPoly(const MultiPoly& p) : dimension(p.dimension()), by_pi_power{p} { trim(); }

PiMultiPoly::PiMultiPoly(int d, std::vector<MultiPoly> parts) : dimension(d), by_pi_power(std::move(parts)) {
  for (const auto& part : by_pi_power) {
    if (part.dimension() != d) throw std::invalid_argument("dimension mismatch in PiMultiPoly");
  }
  trim();
}

void PiMultiPoly::trim() {
  while (!by_pi_power.empty() && by_pi_power.back().is_zero()) by_pi_power.pop_back();
}

MultiPoly PiMultiPoly::to_plain() const {
  if (has_pi()) throw std::logic_error("polynomial has pi-dependent coefficients");
  return by_pi_power.empty() ? MultiPoly(dimension) : by_pi_power.front();
}

int total_degree(const PiMultiPoly& p) {
  int best = kNegInfDegree;
  for (const auto& part : p.by_pi_power) best = std::max(best, total_degree(part));
  return best;
}

std::vector<PiMultiPoly> coefficients_in_T(const PiMultiPoly& p) {
  std::vector<std::vector<MultiPoly>> per_power;
  std::size_t n = 0;
  for (const auto& part : p.by_pi_power) {
    per_power.push_back(coefficients_in_T(part));
    n = std::max(n, per_power.back().size());
  }
  std::vector<PiMultiPoly> out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<MultiPoly> parts;
    for (const auto& coeffs : per_power) parts.push_back(j < coeffs.size() ? coeffs[j] : MultiPoly(p.dimension));
    out.emplace_back(p.dimension, std::move(parts));
  }
  return out;
}

}  // namespace nullsol
