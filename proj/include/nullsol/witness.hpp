#pragma once

#include "nullsol/multipoly.hpp"
#include "nullsol/pi_poly.hpp"
#include "nullsol/rational.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nullsol {

// Witnesses are null solutions of the form u(x, t) = e^{i<x, xi0>} Theta(t)
// with Theta(t) = e^{-1/t} for t > 0 and 0 otherwise. Then
//   D_p u = sum_j a_j(i xi0) e^{i<x, xi0>} Theta^{(j)}(t),
// which vanishes identically when every T-coefficient a_j vanishes at i xi0.

enum class WitnessKind { ExponentialTensorTheta, ConstantTensorTheta, PeriodicExponentialTheta };

/// Theta^{(j)}(t) = P_j(1/t) e^{-1/t} for t > 0; coeffs[k] multiplies s^k.
struct ThetaDerivPoly {
  int order = 0;
  std::vector<Integer> coeffs;
};

struct Witness {
  WitnessKind kind = WitnessKind::ConstantTensorTheta;
  /// xi0, or for periodic witnesses the rational w with v0 = 2*pi*w.
  std::vector<Rational> frequency;
  std::vector<ThetaDerivPoly> theta;
  /// a_j(i * frequency) for j = 0..deg_T p; all zero for a valid witness.
  std::vector<PiGaussian> certificate;

  bool frequency_has_two_pi() const { return kind == WitnessKind::PeriodicExponentialTheta; }
  bool certificate_holds() const;
};

/// Thrown when a proposed frequency does not annihilate every T-coefficient.
class CertificateFailure : public std::runtime_error {
 public:
  CertificateFailure(int coefficient_index, PiGaussian value);
  int coefficient_index() const { return index_; }
  const PiGaussian& value() const { return value_; }

 private:
  int index_;
  PiGaussian value_;
};

/// P_0..P_n by P_{j+1}(s) = s^2 (P_j(s) - P_j'(s)), P_0 = 1.
std::vector<ThetaDerivPoly> theta_derivatives(int n);

/// Theta^{(j)}(t) in floating point; 0 for t <= 0.
double theta_derivative_value(const ThetaDerivPoly& pj, double t);

std::string to_string(const ThetaDerivPoly& pj);

/// Witness at a real rational frequency xi0 (length d). Throws
/// CertificateFailure if some a_j(i xi0) != 0.
Witness build_witness(const MultiPoly& p, std::span<const Rational> frequency);

/// Periodic witness at v0 = 2*pi*w, certificate evaluated in Q(i)[pi].
Witness build_periodic_witness(const PiMultiPoly& p, std::span<const Rational> reduced_frequency);

struct SamplePoint {
  std::vector<double> x;
  double t = 1.0;
};

struct ResidualReport {
  bool exact_certificate_ok = false;
  double max_residual = 0.0;
  /// Theta and its derivatives vanish for t < 0 by construction.
  bool past_vanishes = true;
  std::size_t points = 0;
};

/// Re-checks the exact certificate and samples |D_p u| on the grid in
/// floating point. Throws std::invalid_argument for a grid point with t == 0
/// or a wrong spatial length.
ResidualReport verify_residual(const Witness& w, const PiMultiPoly& p, std::span<const SamplePoint> grid);
ResidualReport verify_residual(const Witness& w, const MultiPoly& p, std::span<const SamplePoint> grid);

/// x in {-1, 0, 1}^d (first three coordinates varied, the rest 0) times
/// t in {0.1, 1, 10}; 27 points for d = 2.
std::vector<SamplePoint> default_residual_grid(int dimension);

const char* to_string(WitnessKind kind);

}  // namespace nullsol
