#include "nullsol/real_variety.hpp"

#include <algorithm>
#include <stdexcept>

namespace nullsol {

void SolverConfig::validate() const {
  if (max_depth < 0) throw std::invalid_argument("max_depth must be nonnegative");
  if (sgn(default_box_halfwidth) <= 0) throw std::invalid_argument("default box half-width must be positive");
  if (denominator_bound <= 0) throw std::invalid_argument("denominator bound must be positive");
  if (lattice_radius <= 0) throw std::invalid_argument("lattice radius must be positive");
  if (groebner_cap == 0) throw std::invalid_argument("groebner cap must be positive");
  if (max_boxes == 0) throw std::invalid_argument("max_boxes must be positive");
  if (max_lattice_points == 0) throw std::invalid_argument("max_lattice_points must be positive");
  if (threads < 0) throw std::invalid_argument("threads must be nonnegative");
}

namespace {

// Squared distance of an interval from zero, as a lower bound for x^2.
Rational gap_squared(const Interval& x) {
  if (sgn(x.lo) > 0) return x.lo * x.lo;
  if (sgn(x.hi) < 0) return x.hi * x.hi;
  return 0;
}

// Smallest certified lower bound of F_top over one face, or nullopt.
std::optional<Rational> face_lower_bound(const std::vector<CompiledPoly>& tops, const CompiledPoly& f_top,
                                         IntervalBox face, const SolverConfig& config) {
  std::optional<Rational> floor_value;
  std::vector<IntervalBox> frontier{std::move(face)};
  for (int depth = 0; !frontier.empty(); ++depth) {
    std::vector<IntervalBox> next;
    for (const auto& box : frontier) {
      Rational lb = std::max(Rational(0), f_top.enclose(box).lo);
      for (const auto& t : tops) lb = std::max(lb, gap_squared(t.enclose(box)));
      if (sgn(lb) > 0) {
        if (!floor_value || lb < *floor_value) floor_value = lb;
        continue;
      }
      if (sgn(f_top.eval(box.midpoint())) == 0) return std::nullopt;  // F_top vanishes on the sphere
      if (depth >= config.max_depth) return std::nullopt;
      auto [l, r] = box.bisect();
      next.push_back(std::move(l));
      next.push_back(std::move(r));
    }
    if (next.size() > config.max_boxes) return std::nullopt;
    frontier = std::move(next);
  }
  return floor_value;
}

}  // namespace

std::optional<Rational> boundedness_radius(const RealPolySystem& sys, const SolverConfig& config) {
  const int d = sys.dimension;
  int top_degree = kNegInfDegree;
  for (const auto& q : sys.polys) top_degree = std::max(top_degree, total_degree(q));
  if (d == 0 || top_degree <= 0) return Rational(1);

  MultiPoly f(d);
  MultiPoly f_top(d);
  std::vector<CompiledPoly> tops;
  for (const auto& q : sys.polys) {
    f += q * q;
    if (total_degree(q) == top_degree) {
      MultiPoly t = homogeneous_component(q, top_degree);
      f_top += t * t;
      tops.emplace_back(t);
    }
  }
  // tail[k] bounds |degree-k part of F| by sum|coeff| * r^k when max|xi| = r >= 1.
  const int top = 2 * top_degree;
  std::vector<Rational> tail(static_cast<std::size_t>(top), Rational(0));
  const MultiPoly rest = f - f_top;
  for (const auto& [e, c] : rest.terms()) {
    int k = 0;
    for (int i = 0; i < d; ++i) k += static_cast<int>(e[i]);
    tail[static_cast<std::size_t>(k)] += abs(c.re);
  }

  CompiledPoly f_top_c(f_top);
  std::optional<Rational> floor_value;
  for (int k = 0; k < d; ++k) {
    for (int s : {1, -1}) {
      IntervalBox face = IntervalBox::cube(d, Rational(1));
      face.sides[k] = Interval(Rational(s));
      auto lb = face_lower_bound(tops, f_top_c, face, config);
      if (!lb) return std::nullopt;
      if (!floor_value || *lb < *floor_value) floor_value = lb;
    }
  }

  // F(xi) >= g(r) = c r^top - sum_k tail[k] r^k with g(r) / r^top increasing,
  // so the smallest integer R >= 1 with g(R) > 0 bounds every zero.
  const Rational c = *floor_value;
  auto positive_at = [&](const Integer& r) {
    Rational value = c * pow(Rational(r), static_cast<unsigned>(top));
    for (int k = 0; k < top; ++k) value -= tail[static_cast<std::size_t>(k)] * pow(Rational(r), static_cast<unsigned>(k));
    return sgn(value) > 0;
  };
  Integer hi = 1;
  while (!positive_at(hi)) hi *= 2;
  Integer lo = hi / 2;  // g(lo) <= 0 unless hi == 1
  if (hi == 1) return Rational(1);
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (positive_at(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return Rational(hi);
}

namespace {

SubdivisionOptions subdivision_options(const SolverConfig& config) {
  return SubdivisionOptions{config.max_depth, config.denominator_bound, config.max_boxes, config.threads};
}

void record_search(EmptinessDiagnostics& diag, const SubdivisionResult& r, const Rational& halfwidth) {
  diag.searched_halfwidth = halfwidth;
  diag.levels = r.levels;
  diag.boxes_examined = r.boxes_examined();
  diag.frontier_capped = r.frontier_capped;
  if (r.kind == SubdivisionKind::CandidateBoxes) {
    diag.unresolved_count = r.candidates.size();
    const std::size_t n = std::min(r.candidates.size(), kReportedUnresolvedBoxes);
    diag.unresolved.assign(r.candidates.begin(), r.candidates.begin() + static_cast<std::ptrdiff_t>(n));
  }
}

struct ReducedSystem {
  RealPolySystem system;
  std::vector<int> kept;
};

// The zero set is a cylinder over the coordinates that do occur.
std::optional<ReducedSystem> drop_free_variables(const RealPolySystem& sys) {
  const int d = sys.dimension;
  std::vector<bool> used(d, false);
  for (const auto& q : sys.polys)
    for (const auto& [e, c] : q.terms())
      for (int k = 0; k < d; ++k)
        if (e[k] > 0) used[k] = true;
  ReducedSystem r;
  for (int k = 0; k < d; ++k)
    if (used[k]) r.kept.push_back(k);
  if (static_cast<int>(r.kept.size()) == d) return std::nullopt;
  const int dr = static_cast<int>(r.kept.size());
  r.system.dimension = dr;
  for (const auto& q : sys.polys) {
    MultiPoly reduced(dr);
    for (const auto& [e, c] : q.terms()) {
      Exponents er(dr + 1, 0);
      for (int j = 0; j < dr; ++j) er[j] = e[r.kept[j]];
      reduced.add_term(er, c);
    }
    r.system.polys.push_back(std::move(reduced));
  }
  return r;
}

void lift(EmptinessVerdict& v, const std::vector<int>& kept, int d, const SolverConfig& config) {
  std::vector<bool> is_kept(d, false);
  for (int k : kept) is_kept[k] = true;
  if (v.witness) {
    std::vector<Rational> full(d, Rational(0));
    for (std::size_t j = 0; j < kept.size(); ++j) full[kept[j]] = (*v.witness)[j];
    v.witness = std::move(full);
  }
  auto& diag = v.diagnostics;
  const Rational halfwidth = diag.searched_halfwidth.value_or(config.default_box_halfwidth);
  for (auto& box : diag.unresolved) {
    std::vector<Interval> sides(d, Interval(-halfwidth, halfwidth));
    for (std::size_t j = 0; j < kept.size(); ++j) sides[kept[j]] = box.sides[j];
    box = IntervalBox(std::move(sides));
  }
  std::vector<int> free;
  for (int k = 0; k < d; ++k)
    if (!is_kept[k]) free.push_back(k);
  diag.free_variables = std::move(free);
}

// Nonzero constant term and every other monomial an even power with a
// coefficient of the same sign: q is bounded away from zero.
bool definite_by_terms(const MultiPoly& q) {
  const int d = q.dimension();
  const Exponents zero(d + 1, 0);
  const Gaussian c0 = q.coefficient(zero);
  if (c0.is_zero()) return false;
  const int sign = sgn(c0.re);
  for (const auto& [e, c] : q.terms()) {
    if (sgn(c.re) != sign) return false;
    for (int k = 0; k < d; ++k)
      if (e[k] % 2 != 0) return false;
  }
  return true;
}

EmptinessVerdict decide_system(const RealPolySystem& sys, const SolverConfig& config);

}  // namespace

EmptinessVerdict decide_emptiness(const RealPolySystem& sys, const SolverConfig& config) {
  if (sys.polys.empty()) throw std::invalid_argument("emptiness of an empty system is decided by the caller");
  config.validate();
  EmptinessVerdict v = decide_system(sys, config);
  if (v.status != EmptinessStatus::Unknown || sys.polys.size() < 2) return v;
  // The zero set lies inside the zero set of each member.
  for (const auto& q : sys.polys) {
    EmptinessVerdict single = decide_emptiness(RealPolySystem{sys.dimension, {q}}, config);
    if (single.status == EmptinessStatus::Empty) {
      single.diagnostics.stage = "single-polynomial/" + single.diagnostics.stage;
      return single;
    }
  }
  return v;
}

namespace {

EmptinessVerdict decide_system(const RealPolySystem& sys, const SolverConfig& config) {
  EmptinessVerdict v;

  RealPolySystem nonzero{sys.dimension, {}};
  for (const auto& q : sys.polys)
    if (!q.is_zero()) nonzero.polys.push_back(q);
  if (nonzero.polys.empty()) {
    v.status = EmptinessStatus::Nonempty;
    v.certificate = CertificateKind::ExactPoint;
    v.witness = std::vector<Rational>(sys.dimension, Rational(0));
    v.diagnostics.stage = "zero-system";
    return v;
  }
  if (nonzero.polys.size() != sys.polys.size()) return decide_emptiness(nonzero, config);

  for (const auto& q : sys.polys) {
    if (q.is_constant() && !q.is_zero()) {
      v.status = EmptinessStatus::Empty;
      v.certificate = CertificateKind::UnitIdeal;
      v.diagnostics.stage = "constant-generator";
      return v;
    }
    if (definite_by_terms(q)) {
      v.status = EmptinessStatus::Empty;
      v.certificate = CertificateKind::DefiniteTerms;
      v.diagnostics.stage = "definite-terms";
      return v;
    }
  }

  if (auto reduced = drop_free_variables(sys)) {
    EmptinessVerdict r = decide_emptiness(reduced->system, config);
    lift(r, reduced->kept, sys.dimension, config);
    return r;
  }

  UnitTestResult unit = groebner_unit_test(sys, config.groebner_cap);
  v.diagnostics.groebner = unit.status;
  v.diagnostics.groebner_reductions = unit.reductions;
  if (unit.is_unit()) {
    v.status = EmptinessStatus::Empty;
    v.certificate = CertificateKind::UnitIdeal;
    v.diagnostics.stage = "groebner-unit";
    return v;
  }

  auto compiled = compile(sys);
  auto radius = boundedness_radius(sys, config);
  v.diagnostics.boundedness_radius = radius;
  if (radius) {
    Rational halfwidth(ceil(*radius));
    auto r = subdivision_search(compiled, IntervalBox::cube(sys.dimension, halfwidth), subdivision_options(config));
    record_search(v.diagnostics, r, halfwidth);
    switch (r.kind) {
      case SubdivisionKind::NoZeroInBox:
        v.status = EmptinessStatus::Empty;
        v.certificate = CertificateKind::ExhaustiveSubdivision;
        v.bound = halfwidth;
        v.diagnostics.stage = "bounded-subdivision";
        return v;
      case SubdivisionKind::ExactZero:
        v.status = EmptinessStatus::Nonempty;
        v.certificate = CertificateKind::ExactPoint;
        v.witness = r.zero;
        v.diagnostics.stage = "bounded-subdivision";
        return v;
      case SubdivisionKind::CandidateBoxes:
        v.diagnostics.stage = "bounded-subdivision";
        return v;
    }
  }

  auto r = subdivision_search(compiled, IntervalBox::cube(sys.dimension, config.default_box_halfwidth),
                              subdivision_options(config));
  record_search(v.diagnostics, r, config.default_box_halfwidth);
  v.diagnostics.stage = "unbounded-subdivision";
  if (r.kind == SubdivisionKind::ExactZero) {
    v.status = EmptinessStatus::Nonempty;
    v.certificate = CertificateKind::ExactPoint;
    v.witness = r.zero;
  }
  return v;
}

}  // namespace

const char* to_string(EmptinessStatus s) {
  switch (s) {
    case EmptinessStatus::Empty: return "EMPTY";
    case EmptinessStatus::Nonempty: return "NONEMPTY";
    case EmptinessStatus::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::None: return "none";
    case CertificateKind::UnitIdeal: return "UnitIdeal";
    case CertificateKind::ExhaustiveSubdivision: return "ExhaustiveSubdivision";
    case CertificateKind::ExactPoint: return "ExactPoint";
    case CertificateKind::DefiniteTerms: return "DefiniteTerms";
  }
  return "none";
}

}  // namespace nullsol
