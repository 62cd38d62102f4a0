#include "nullsol/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nullsol {

bool GrevlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = exponent_sum(a);
  unsigned db = exponent_sum(b);
  if (da != db) return da > db;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return false;
}

namespace {

struct Term {
  Exponents exps;
  Gaussian coeff;
};

// Terms sorted by GrevlexGreater, no zero coefficients.
struct GPoly {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  const Term& lead() const { return terms.front(); }
  bool is_constant() const { return !terms.empty() && exponent_sum(terms.front().exps) == 0; }
};

GPoly to_gpoly(const MultiPoly& p) {
  GPoly g;
  for (const auto& [e, c] : p.terms()) g.terms.push_back({e, c});
  std::sort(g.terms.begin(), g.terms.end(),
            [](const Term& a, const Term& b) { return GrevlexGreater{}(a.exps, b.exps); });
  return g;
}

MultiPoly to_multipoly(int dimension, const GPoly& g) {
  MultiPoly p(dimension);
  for (const auto& t : g.terms) p.add_term(t.exps, t.coeff);
  return p;
}

void make_monic(GPoly& g) {
  if (g.is_zero()) return;
  Gaussian inv = Gaussian(1) / g.lead().coeff;
  for (auto& t : g.terms) t.coeff *= inv;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) return false;
  }
  return true;
}

// p - c * x^shift * g, merging two grevlex-sorted term lists.
GPoly sub_scaled(const GPoly& p, const Gaussian& c, const Exponents& shift, const GPoly& g) {
  GPoly out;
  out.terms.reserve(p.terms.size() + g.terms.size());
  GrevlexGreater greater;
  std::size_t i = 0;
  std::size_t j = 0;
  Exponents e(shift.size());
  auto shifted = [&](std::size_t idx) {
    for (std::size_t k = 0; k < shift.size(); ++k) e[k] = g.terms[idx].exps[k] + shift[k];
    return e;
  };
  while (i < p.terms.size() || j < g.terms.size()) {
    if (j == g.terms.size()) {
      out.terms.push_back(p.terms[i++]);
      continue;
    }
    Exponents ge = shifted(j);
    if (i == p.terms.size() || greater(ge, p.terms[i].exps)) {
      out.terms.push_back({ge, -(c * g.terms[j].coeff)});
      ++j;
    } else if (greater(p.terms[i].exps, ge)) {
      out.terms.push_back(p.terms[i++]);
    } else {
      Gaussian v = p.terms[i].coeff - c * g.terms[j].coeff;
      if (!v.is_zero()) out.terms.push_back({ge, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct CapExceeded {};

GPoly normal_form(GPoly p, const std::vector<GPoly>& basis, std::size_t& reductions, std::size_t cap) {
  GPoly remainder;
  while (!p.is_zero()) {
    const Term& lt = p.lead();
    const GPoly* divisor = nullptr;
    for (const auto& g : basis) {
      if (divides(g.lead().exps, lt.exps)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.terms.push_back(lt);
      p.terms.erase(p.terms.begin());
      continue;
    }
    if (++reductions > cap) throw CapExceeded{};
    Exponents shift(lt.exps.size());
    for (std::size_t k = 0; k < shift.size(); ++k) shift[k] = lt.exps[k] - divisor->lead().exps[k];
    Gaussian c = lt.coeff / divisor->lead().coeff;
    p = sub_scaled(p, c, shift, *divisor);
  }
  return remainder;
}

GPoly spoly(const GPoly& f, const GPoly& g) {
  Exponents l = lcm(f.lead().exps, g.lead().exps);
  Exponents sf(l.size()), sg(l.size());
  for (std::size_t k = 0; k < l.size(); ++k) {
    sf[k] = l[k] - f.lead().exps[k];
    sg[k] = l[k] - g.lead().exps[k];
  }
  GPoly zero;
  GPoly a = sub_scaled(zero, -(Gaussian(1) / f.lead().coeff), sf, f);
  return sub_scaled(a, Gaussian(1) / g.lead().coeff, sg, g);
}

}  // namespace

Exponents grevlex_leading_exponents(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading term");
  return to_gpoly(p).lead().exps;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of a zero polynomial");
  return to_multipoly(f.dimension(), spoly(to_gpoly(f), to_gpoly(g)));
}

MultiPoly grevlex_normal_form(const MultiPoly& p, std::span<const MultiPoly> basis) {
  std::vector<GPoly> gs;
  for (const auto& b : basis) {
    if (!b.is_zero()) gs.push_back(to_gpoly(b));
  }
  std::size_t reductions = 0;
  return to_multipoly(p.dimension(), normal_form(to_gpoly(p), gs, reductions, static_cast<std::size_t>(-1)));
}

GroebnerResult groebner_basis(int dimension, std::span<const MultiPoly> polys, std::size_t reduction_cap) {
  GroebnerResult result;
  std::vector<GPoly> basis;
  auto unit_result = [&] {
    result.unit = true;
    result.basis = GroebnerBasis{dimension, {MultiPoly::constant(dimension, Gaussian(1))}};
    return result;
  };
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    GPoly g = to_gpoly(p);
    make_monic(g);
    if (g.is_constant()) return unit_result();
    basis.push_back(std::move(g));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);

  try {
    while (!pairs.empty()) {
      // Normal selection strategy: smallest lcm first, then by index.
      auto pick = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        Exponents la = lcm(basis[a.first].lead().exps, basis[a.second].lead().exps);
        Exponents lb = lcm(basis[b.first].lead().exps, basis[b.second].lead().exps);
        if (la != lb) return GrevlexGreater{}(lb, la);
        return a < b;
      });
      auto [i, j] = *pick;
      pairs.erase(pick);
      if (coprime(basis[i].lead().exps, basis[j].lead().exps)) continue;
      GPoly h = normal_form(spoly(basis[i], basis[j]), basis, result.reductions, reduction_cap);
      if (h.is_zero()) continue;
      make_monic(h);
      if (h.is_constant()) return unit_result();
      basis.push_back(std::move(h));
      for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
    }
  } catch (const CapExceeded&) {
    result.capped = true;
    return result;
  }

  GroebnerBasis gb{dimension, {}};
  for (const auto& g : basis) gb.polys.push_back(to_multipoly(dimension, g));
  result.basis = std::move(gb);
  return result;
}

UnitTestResult groebner_unit_test(const RealPolySystem& sys, std::size_t reduction_cap) {
  if (sys.polys.empty()) throw std::invalid_argument("unit test needs at least one polynomial");
  GroebnerResult gb = groebner_basis(sys.dimension, sys.polys, reduction_cap);
  UnitTestResult out;
  out.reductions = gb.reductions;
  if (gb.capped) {
    out.status = UnitIdealStatus::Inconclusive;
  } else {
    out.status = gb.unit ? UnitIdealStatus::Unit : UnitIdealStatus::NotUnit;
  }
  return out;
}

const char* to_string(UnitIdealStatus s) {
  switch (s) {
    case UnitIdealStatus::Unit: return "unit";
    case UnitIdealStatus::NotUnit: return "not-unit";
    case UnitIdealStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace nullsol
