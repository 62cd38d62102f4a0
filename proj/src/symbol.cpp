#include "nullsol/symbol.hpp"

#include <algorithm>
#include <stdexcept>

namespace nullsol {

bool degree_test(const MultiPoly& p) { return total_degree(p) == total_degree(restrict_to_time_axis(p)); }

MultiPoly principal_part(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("principal part of the zero polynomial");
  return homogeneous_component(p, total_degree(p));
}

bool is_characteristic_normal(const MultiPoly& p, std::span<const Rational> normal) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no characteristic normals");
  if (normal.size() != static_cast<std::size_t>(p.slots())) {
    throw std::invalid_argument("normal vector length must be dimension + 1");
  }
  if (std::all_of(normal.begin(), normal.end(), [](const Rational& q) { return sgn(q) == 0; })) {
    throw std::invalid_argument("normal vector must be nonzero");
  }
  std::vector<Gaussian> point(normal.begin(), normal.end());
  return eval(principal_part(p), point).is_zero();
}

ContentGenerators x_content(const MultiPoly& p) {
  ContentGenerators out{p.dimension(), {}};
  for (auto& a : coefficients_in_T(p)) {
    if (!a.is_zero()) out.generators.push_back(std::move(a));
  }
  return out;
}

namespace {

// i^k for k mod 4.
Gaussian i_power(unsigned k) {
  switch (k % 4) {
    case 0: return Gaussian(1);
    case 1: return Gaussian(0, 1);
    case 2: return Gaussian(-1);
    default: return Gaussian(0, -1);
  }
}

void push_unique(std::vector<MultiPoly>& polys, MultiPoly q) {
  if (q.is_zero()) return;
  if (std::find(polys.begin(), polys.end(), q) == polys.end()) polys.push_back(std::move(q));
}

}  // namespace

RealPolySystem split_real_imaginary(int dimension, std::span<const MultiPoly> polys) {
  RealPolySystem out{dimension, {}};
  for (const auto& a : polys) {
    MultiPoly re(dimension);
    MultiPoly im(dimension);
    for (const auto& [e, c] : a.terms()) {
      re.add_term(e, Gaussian(c.re));
      im.add_term(e, Gaussian(c.im));
    }
    push_unique(out.polys, std::move(re));
    push_unique(out.polys, std::move(im));
  }
  return out;
}

RealPolySystem imaginary_slice(const ContentGenerators& g) {
  std::vector<MultiPoly> substituted;
  substituted.reserve(g.generators.size());
  for (const auto& a : g.generators) {
    MultiPoly s(g.dimension);
    for (const auto& [e, c] : a.terms()) {
      unsigned spatial = 0;
      for (int k = 0; k < g.dimension; ++k) spatial += e[k];
      s.add_term(e, c * i_power(spatial));
    }
    substituted.push_back(std::move(s));
  }
  return split_real_imaginary(g.dimension, substituted);
}

bool is_real_system(const RealPolySystem& sys) {
  for (const auto& q : sys.polys) {
    if (q.dimension() != sys.dimension) return false;
    for (const auto& [e, c] : q.terms()) {
      if (!c.is_real() || e[sys.dimension] != 0) return false;
    }
  }
  return true;
}

}  // namespace nullsol
