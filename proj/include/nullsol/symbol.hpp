#pragma once

#include "nullsol/multipoly.hpp"
#include "nullsol/rational.hpp"

#include <span>
#include <vector>

namespace nullsol {

/// Nonzero T-coefficients a_0..a_n of p, as polynomials in X1..Xd.
/// Empty exactly when p = 0.
struct ContentGenerators {
  int dimension = 0;
  std::vector<MultiPoly> generators;
};

/// Real-coefficient polynomials in xi_1..xi_d (stored in the X slots, T slot
/// unused). Their common real zeros are the xi with i*xi in the content variety.
struct RealPolySystem {
  int dimension = 0;
  std::vector<MultiPoly> polys;
};

/// deg p == deg p(0, T). True for p = 0 (both sides are -inf).
bool degree_test(const MultiPoly& p);

/// Top-degree homogeneous component. Throws std::invalid_argument for p = 0.
MultiPoly principal_part(const MultiPoly& p);

/// principal_part(p)(n) == 0 for a normal n = (n_1..n_d, n_t).
/// Throws std::invalid_argument for p = 0, n = 0 or a wrong length.
bool is_characteristic_normal(const MultiPoly& p, std::span<const Rational> normal);

ContentGenerators x_content(const MultiPoly& p);

/// Substitutes X_k -> i*xi_k in every generator and splits each result into
/// real and imaginary parts. Zero parts are dropped and structural
/// duplicates removed.
RealPolySystem imaginary_slice(const ContentGenerators& g);

/// Real and imaginary part polynomials of complex polynomials, zero parts
/// dropped and duplicates removed, in input order.
RealPolySystem split_real_imaginary(int dimension, std::span<const MultiPoly> polys);

/// Whether every polynomial has real coefficients and no T.
bool is_real_system(const RealPolySystem& sys);

}  // namespace nullsol
