#include "nullsol/witness.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace nullsol {

bool Witness::certificate_holds() const {
  return std::all_of(certificate.begin(), certificate.end(), [](const PiGaussian& v) { return v.is_zero(); });
}

CertificateFailure::CertificateFailure(int coefficient_index, PiGaussian value)
    : std::runtime_error("a" + std::to_string(coefficient_index) + "(i*freq) = " + to_string(value) + " != 0"),
      index_(coefficient_index),
      value_(std::move(value)) {}

std::vector<ThetaDerivPoly> theta_derivatives(int n) {
  if (n < 0) throw std::invalid_argument("theta derivative order must be nonnegative");
  std::vector<ThetaDerivPoly> out;
  out.push_back({0, {Integer(1)}});
  for (int j = 0; j < n; ++j) {
    const auto& p = out.back().coeffs;
    // s^2 * (P - P'): coefficient of s^(k+2) is p[k] - (k+1) p[k+1].
    std::vector<Integer> next(p.size() + 2, Integer(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 2] += p[k];
      if (k >= 1) next[k + 1] -= Integer(static_cast<unsigned long>(k)) * p[k];
    }
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    out.push_back({j + 1, std::move(next)});
  }
  return out;
}

double theta_derivative_value(const ThetaDerivPoly& pj, double t) {
  if (t <= 0.0) return 0.0;
  const double s = 1.0 / t;
  double acc = 0.0;
  for (std::size_t k = pj.coeffs.size(); k-- > 0;) acc = acc * s + pj.coeffs[k].get_d();
  return acc * std::exp(-s);
}

std::string to_string(const ThetaDerivPoly& pj) {
  std::string out;
  for (std::size_t k = pj.coeffs.size(); k-- > 0;) {
    const Integer& c = pj.coeffs[k];
    if (c == 0) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? "s" : "s^" + std::to_string(k));
    std::string term;
    if (mono.empty()) {
      term = c.get_str();
    } else if (c == 1) {
      term = mono;
    } else if (c == -1) {
      term = "-" + mono;
    } else {
      term = c.get_str() + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

namespace {

// Evaluates a T-free PiMultiPoly at X_k = i * w_k, or at X_k = 2*pi*i * w_k
// for periodic frequencies.
PiGaussian evaluate_spatial(const PiMultiPoly& a, std::span<const Rational> w, bool two_pi) {
  PiGaussian sum;
  const int d = a.dimension;
  for (std::size_t m = 0; m < a.by_pi_power.size(); ++m) {
    for (const auto& [e, c] : a.by_pi_power[m].terms()) {
      Gaussian value = c;
      unsigned spatial = 0;
      for (int k = 0; k < d; ++k) {
        if (e[k] == 0) continue;
        value *= Gaussian(pow(w[k], e[k]));
        spatial += e[k];
      }
      // (i * 2)^spatial carries pi^spatial for periodic frequencies.
      value *= pow(Gaussian::i() * Gaussian(two_pi ? 2 : 1), spatial);
      sum += PiGaussian::pi_power(static_cast<unsigned>(m) + (two_pi ? spatial : 0U), value);
    }
  }
  return sum;
}

Witness assemble(const PiMultiPoly& p, std::span<const Rational> freq, WitnessKind kind) {
  if (freq.size() != static_cast<std::size_t>(p.dimension)) {
    throw std::invalid_argument("frequency length must equal the spatial dimension");
  }
  const bool two_pi = kind == WitnessKind::PeriodicExponentialTheta;
  Witness w;
  w.kind = kind;
  w.frequency.assign(freq.begin(), freq.end());
  auto coeffs = coefficients_in_T(p);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    PiGaussian value = evaluate_spatial(coeffs[j], freq, two_pi);
    if (!value.is_zero()) throw CertificateFailure(static_cast<int>(j), value);
    w.certificate.push_back(std::move(value));
  }
  w.theta = theta_derivatives(coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1);
  return w;
}

}  // namespace

Witness build_witness(const MultiPoly& p, std::span<const Rational> frequency) {
  bool at_origin = std::all_of(frequency.begin(), frequency.end(), [](const Rational& q) { return sgn(q) == 0; });
  return assemble(PiMultiPoly(p), frequency,
                  at_origin ? WitnessKind::ConstantTensorTheta : WitnessKind::ExponentialTensorTheta);
}

Witness build_periodic_witness(const PiMultiPoly& p, std::span<const Rational> reduced_frequency) {
  return assemble(p, reduced_frequency, WitnessKind::PeriodicExponentialTheta);
}

ResidualReport verify_residual(const Witness& w, const PiMultiPoly& p, std::span<const SamplePoint> grid) {
  const int d = p.dimension;
  if (w.frequency.size() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("witness frequency length must equal the spatial dimension");
  }
  const double scale = w.frequency_has_two_pi() ? 2.0 * std::numbers::pi : 1.0;
  std::vector<double> xi(d);
  for (int k = 0; k < d; ++k) xi[k] = scale * w.frequency[k].get_d();

  // a_j(i xi) in floating point, independent of the exact certificate.
  auto coeffs = coefficients_in_T(p);
  std::vector<std::complex<double>> point(d + 1);
  for (int k = 0; k < d; ++k) point[k] = {0.0, xi[k]};
  std::vector<std::complex<double>> numeric_coeffs;
  for (const auto& a : coeffs) {
    std::complex<double> v = 0.0;
    double pi_power = 1.0;
    for (const auto& part : a.by_pi_power) {
      v += pi_power * eval_numeric(part, point);
      pi_power *= std::numbers::pi;
    }
    numeric_coeffs.push_back(v);
  }
  auto theta = theta_derivatives(coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1);

  ResidualReport report;
  // The stored certificate belongs to the polynomial the witness was built
  // for; re-evaluate exactly against p.
  report.exact_certificate_ok = true;
  for (const auto& a : coeffs) {
    if (!evaluate_spatial(a, w.frequency, w.frequency_has_two_pi()).is_zero()) report.exact_certificate_ok = false;
  }
  for (const auto& sp : grid) {
    if (sp.t == 0.0) throw std::invalid_argument("residual grid points must have t != 0");
    if (sp.x.size() != static_cast<std::size_t>(d)) throw std::invalid_argument("grid point has wrong dimension");
    double phase = 0.0;
    for (int k = 0; k < d; ++k) phase += sp.x[k] * xi[k];
    std::complex<double> wave = std::polar(1.0, phase);
    std::complex<double> total = 0.0;
    for (std::size_t j = 0; j < numeric_coeffs.size(); ++j) {
      total += numeric_coeffs[j] * theta_derivative_value(theta[j], sp.t);
    }
    report.max_residual = std::max(report.max_residual, std::abs(total * wave));
    if (sp.t < 0.0) {
      for (const auto& pj : theta) report.past_vanishes = report.past_vanishes && theta_derivative_value(pj, sp.t) == 0.0;
    }
    ++report.points;
  }
  return report;
}

ResidualReport verify_residual(const Witness& w, const MultiPoly& p, std::span<const SamplePoint> grid) {
  return verify_residual(w, PiMultiPoly(p), grid);
}

std::vector<SamplePoint> default_residual_grid(int dimension) {
  const int varied = std::min(dimension, 3);
  int spatial_points = 1;
  for (int k = 0; k < varied; ++k) spatial_points *= 3;
  std::vector<SamplePoint> grid;
  for (double t : {0.1, 1.0, 10.0}) {
    for (int idx = 0; idx < spatial_points; ++idx) {
      SamplePoint sp;
      sp.x.assign(dimension, 0.0);
      int rest = idx;
      for (int k = 0; k < varied; ++k) {
        sp.x[k] = static_cast<double>(rest % 3) - 1.0;
        rest /= 3;
      }
      sp.t = t;
      grid.push_back(std::move(sp));
    }
  }
  return grid;
}

const char* to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::ExponentialTensorTheta: return "ExponentialTensorTheta";
    case WitnessKind::ConstantTensorTheta: return "ConstantTensorTheta";
    case WitnessKind::PeriodicExponentialTheta: return "PeriodicExponentialTheta";
  }
  return "ConstantTensorTheta";
}

}  // namespace nullsol
