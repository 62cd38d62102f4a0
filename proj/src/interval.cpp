#include "nullsol/interval.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nullsol {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("interval with lo > hi");
}

Rational Interval::midpoint() const {
  Rational m = (lo + hi) / 2;
  return m;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {*mn, *mx};
}

Interval pow(const Interval& x, unsigned k) {
  if (k == 0) return Interval(Rational(1));
  Rational lo_k = pow(x.lo, k);
  Rational hi_k = pow(x.hi, k);
  if (k % 2 == 1 || sgn(x.lo) >= 0) return {lo_k, hi_k};
  if (sgn(x.hi) <= 0) return {hi_k, lo_k};
  return {Rational(0), std::max(lo_k, hi_k)};
}

Interval scale(const Interval& x, const Rational& c) {
  if (sgn(c) >= 0) return {x.lo * c, x.hi * c};
  return {x.hi * c, x.lo * c};
}

Interval intersect(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

IntervalBox IntervalBox::cube(int dimension, const Rational& halfwidth) {
  return IntervalBox(std::vector<Interval>(dimension, Interval(-halfwidth, halfwidth)));
}

bool IntervalBox::contains(std::span<const Rational> point) const {
  if (point.size() != sides.size()) return false;
  for (std::size_t k = 0; k < sides.size(); ++k) {
    if (!sides[k].contains(point[k])) return false;
  }
  return true;
}

std::vector<Rational> IntervalBox::midpoint() const {
  std::vector<Rational> m;
  m.reserve(sides.size());
  for (const auto& s : sides) m.push_back(s.midpoint());
  return m;
}

int IntervalBox::widest() const {
  int best = 0;
  Rational best_width = -1;
  for (int k = 0; k < dimension(); ++k) {
    Rational w = sides[k].width();
    if (w > best_width) {
      best_width = w;
      best = k;
    }
  }
  return best;
}

std::pair<IntervalBox, IntervalBox> IntervalBox::bisect() const {
  int k = widest();
  IntervalBox left = *this;
  IntervalBox right = *this;
  Rational m = sides[k].midpoint();
  left.sides[k].hi = m;
  right.sides[k].lo = m;
  return {std::move(left), std::move(right)};
}

CompiledPoly::CompiledPoly(const MultiPoly& p) : dimension_(p.dimension()) {
  terms_.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    if (!c.is_real()) throw std::invalid_argument("CompiledPoly requires real coefficients");
    if (e[dimension_] != 0) throw std::invalid_argument("CompiledPoly requires a T-free polynomial");
    terms_.push_back({c.re, std::vector<std::uint32_t>(e.begin(), e.begin() + dimension_)});
  }
}

CompiledPoly::CompiledPoly(int dimension, std::vector<Term> terms) : dimension_(dimension), terms_(std::move(terms)) {}

int CompiledPoly::degree() const {
  int best = kNegInfDegree;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto x : t.exps) s += static_cast<int>(x);
    best = std::max(best, s);
  }
  return best;
}

Rational CompiledPoly::eval(std::span<const Rational> x) const {
  Rational sum = 0;
  Rational term;
  Rational power;
  for (const auto& t : terms_) {
    term = t.coeff;
    for (int k = 0; k < dimension_; ++k) {
      if (t.exps[k] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), x[k].get_num_mpz_t(), t.exps[k]);
      mpz_pow_ui(power.get_den_mpz_t(), x[k].get_den_mpz_t(), t.exps[k]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

double CompiledPoly::eval(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double term = t.coeff.get_d();
    for (int k = 0; k < dimension_; ++k) {
      for (std::uint32_t j = 0; j < t.exps[k]; ++j) term *= x[k];
    }
    sum += term;
  }
  return sum;
}

Interval CompiledPoly::enclose_naive(const IntervalBox& box) const {
  Interval sum(Rational(0));
  for (const auto& t : terms_) {
    Interval term(t.coeff);
    for (int k = 0; k < dimension_; ++k) {
      if (t.exps[k] != 0) term = term * pow(box.sides[k], t.exps[k]);
    }
    sum = sum + term;
  }
  return sum;
}

CompiledPoly CompiledPoly::shifted(std::span<const Rational> center) const {
  // (c + h)^e = sum_j binom(e, j) c^(e-j) h^j, expanded coordinate by coordinate.
  std::map<std::vector<std::uint32_t>, Rational> acc;
  for (const auto& t : terms_) {
    std::vector<std::pair<std::vector<std::uint32_t>, Rational>> partial{{std::vector<std::uint32_t>(dimension_, 0), t.coeff}};
    for (int k = 0; k < dimension_; ++k) {
      const std::uint32_t e = t.exps[k];
      if (e == 0) continue;
      std::vector<std::pair<std::vector<std::uint32_t>, Rational>> next;
      next.reserve(partial.size() * (e + 1));
      for (std::uint32_t j = 0; j <= e; ++j) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), e, j);
        Rational factor = pow(center[k], e - j) * binom;
        if (sgn(factor) == 0) continue;
        for (const auto& [exps, c] : partial) {
          auto ne = exps;
          ne[k] = j;
          next.emplace_back(std::move(ne), c * factor);
        }
      }
      partial = std::move(next);
    }
    for (auto& [exps, c] : partial) acc[exps] += c;
  }
  std::vector<Term> out;
  for (auto& [exps, c] : acc) {
    if (sgn(c) != 0) out.push_back({std::move(c), exps});
  }
  return CompiledPoly(dimension_, std::move(out));
}

Interval CompiledPoly::enclose_centered(const IntervalBox& box) const {
  std::vector<Rational> center = box.midpoint();
  std::vector<Rational> radius;
  radius.reserve(dimension_);
  for (int k = 0; k < dimension_; ++k) radius.push_back(box.sides[k].hi - center[k]);
  CompiledPoly local = shifted(center);
  Rational lo = 0;
  Rational hi = 0;
  Rational mag;
  for (const auto& t : local.terms_) {
    bool constant = true;
    bool all_even = true;
    mag = abs(t.coeff);
    for (int k = 0; k < dimension_; ++k) {
      if (t.exps[k] == 0) continue;
      constant = false;
      all_even = all_even && t.exps[k] % 2 == 0;
      mag *= pow(radius[k], t.exps[k]);
    }
    if (constant) {
      lo += t.coeff;
      hi += t.coeff;
    } else if (all_even) {
      // h^e ranges over [0, r^e]
      if (sgn(t.coeff) > 0) {
        hi += mag;
      } else {
        lo -= mag;
      }
    } else {
      lo -= mag;
      hi += mag;
    }
  }
  return {lo, hi};
}

Interval CompiledPoly::enclose(const IntervalBox& box) const {
  return intersect(enclose_naive(box), enclose_centered(box));
}

std::string to_string(const Interval& x) { return "[" + to_string(x.lo) + ", " + to_string(x.hi) + "]"; }

}  // namespace nullsol
