#include "nullsol/multipoly.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace nullsol {

unsigned exponent_sum(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0U);
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = exponent_sum(a);
  unsigned db = exponent_sum(b);
  if (da != db) return da > db;
  // T is the last slot and the largest variable.
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

MultiPoly::MultiPoly(int dimension) : dimension_(dimension) {
  if (dimension < 0) throw std::invalid_argument("negative dimension");
}

MultiPoly MultiPoly::constant(int dimension, const Gaussian& c) {
  MultiPoly p(dimension);
  p.add_term(Exponents(dimension + 1, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int dimension, int slot) {
  if (slot < 0 || slot > dimension) throw std::out_of_range("variable slot out of range");
  Exponents e(dimension + 1, 0);
  e[slot] = 1;
  return monomial(dimension, std::move(e), Gaussian(1));
}

MultiPoly MultiPoly::monomial(int dimension, Exponents exps, const Gaussian& c) {
  MultiPoly p(dimension);
  if (exps.size() != static_cast<std::size_t>(dimension + 1)) {
    throw std::invalid_argument("exponent vector length must be dimension + 1");
  }
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && exponent_sum(terms_.begin()->first) == 0);
}

Gaussian MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Gaussian() : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Gaussian& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_same_dimension(const MultiPoly& o) const {
  if (dimension_ != o.dimension_) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(dimension_) + " vs " +
                                std::to_string(o.dimension_));
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_dimension(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_dimension(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_dimension(b);
  MultiPoly out(a.dimension_);
  Exponents e(a.slots());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::scaled(const Gaussian& c) const {
  MultiPoly out(dimension_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, v * c);
  return out;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result = MultiPoly::constant(base.dimension(), Gaussian(1));
  MultiPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

int total_degree(const MultiPoly& p) {
  // The first term in graded order has the largest total degree.
  if (p.is_zero()) return kNegInfDegree;
  return static_cast<int>(exponent_sum(p.terms().begin()->first));
}

int degree_in(const MultiPoly& p, int slot) {
  if (slot < 0 || slot > p.dimension()) throw std::out_of_range("slot out of range");
  int best = kNegInfDegree;
  for (const auto& [e, c] : p.terms()) best = std::max(best, static_cast<int>(e[slot]));
  return best;
}

Gaussian eval(const MultiPoly& p, std::span<const Gaussian> point) {
  if (point.size() != static_cast<std::size_t>(p.slots())) {
    throw std::invalid_argument("evaluation point length must be dimension + 1");
  }
  Gaussian sum;
  for (const auto& [e, c] : p.terms()) {
    Gaussian term = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] != 0) term *= pow(point[k], e[k]);
    }
    sum += term;
  }
  return sum;
}

std::complex<double> eval_numeric(const MultiPoly& p, std::span<const std::complex<double>> point) {
  if (point.size() != static_cast<std::size_t>(p.slots())) {
    throw std::invalid_argument("evaluation point length must be dimension + 1");
  }
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : p.terms()) {
    std::complex<double> term = to_complex(c);
    for (std::size_t k = 0; k < e.size(); ++k) {
      for (std::uint32_t j = 0; j < e[k]; ++j) term *= point[k];
    }
    sum += term;
  }
  return sum;
}

MultiPoly partial_derivative(const MultiPoly& p, int slot) {
  if (slot < 0 || slot > p.dimension()) throw std::out_of_range("derivative index out of range");
  MultiPoly out(p.dimension());
  for (const auto& [e, c] : p.terms()) {
    if (e[slot] == 0) continue;
    Exponents d = e;
    d[slot] -= 1;
    out.add_term(d, c * Gaussian(static_cast<long>(e[slot])));
  }
  return out;
}

std::vector<MultiPoly> coefficients_in_T(const MultiPoly& p) {
  if (p.is_zero()) return {};
  const int d = p.dimension();
  const int n = degree_in(p, d);
  std::vector<MultiPoly> out(n + 1, MultiPoly(d));
  for (const auto& [e, c] : p.terms()) {
    Exponents x = e;
    x[d] = 0;
    out[e[d]].add_term(x, c);
  }
  return out;
}

MultiPoly homogeneous_component(const MultiPoly& p, int degree) {
  MultiPoly out(p.dimension());
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<int>(exponent_sum(e)) == degree) out.add_term(e, c);
  }
  return out;
}

MultiPoly restrict_to_time_axis(const MultiPoly& p) {
  MultiPoly out(p.dimension());
  const int d = p.dimension();
  for (const auto& [e, c] : p.terms()) {
    bool pure_time = true;
    for (int k = 0; k < d; ++k) pure_time = pure_time && e[k] == 0;
    if (pure_time) out.add_term(e, c);
  }
  return out;
}

}  // namespace nullsol
