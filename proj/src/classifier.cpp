#include "nullsol/classifier.hpp"

#include <array>
#include <stdexcept>

namespace nullsol {

namespace {

constexpr std::array<std::pair<SpaceTag, const char*>, 10> kSpaceNames{{
    {SpaceTag::Smooth, "smooth"},
    {SpaceTag::Distributions, "distributions"},
    {SpaceTag::TestFunctions, "test"},
    {SpaceTag::CompactDistributions, "compact"},
    {SpaceTag::SpatiallyTempered, "tempered"},
    {SpaceTag::Besov, "besov"},
    {SpaceTag::Sobolev, "sobolev"},
    {SpaceTag::SchwartzSpatial, "schwartz"},
    {SpaceTag::CompactSpatial, "compact-spatial"},
    {SpaceTag::Periodic, "periodic"},
}};

Verdict zero_symbol(SpaceTag space) {
  Verdict v;
  v.space = space;
  v.status = VerdictStatus::Nontrivial;
  v.rule = "zero-symbol";
  v.criterion = "p = 0, so every element of the space is a null solution";
  return v;
}

Verdict nonzero_rule(SpaceTag space, const MultiPoly& p, std::string rule) {
  Verdict v;
  v.space = space;
  v.status = VerdictStatus::Trivial;
  v.rule = std::move(rule);
  v.criterion = "trivial iff p != 0";
  v.evidence.total_degree = total_degree(p);
  return v;
}

Verdict time_degree_rule(SpaceTag space, const MultiPoly& p) {
  Verdict v;
  v.space = space;
  v.rule = "time-degree";
  v.criterion = "trivial iff deg p = deg p(0,T)";
  v.evidence.total_degree = total_degree(p);
  v.evidence.time_axis_degree = total_degree(restrict_to_time_axis(p));
  v.status = degree_test(p) ? VerdictStatus::Trivial : VerdictStatus::Nontrivial;
  return v;
}

Verdict tempered_rule(const MultiPoly& p, const SolverConfig& config) {
  Verdict v;
  v.space = SpaceTag::SpatiallyTempered;
  v.rule = "imaginary-content-variety";
  v.criterion = "trivial iff the T-coefficients of p have no common zero on iR^d";
  ContentGenerators content = x_content(p);
  RealPolySystem slice = imaginary_slice(content);
  EmptinessVerdict emptiness = decide_emptiness(slice, config);
  switch (emptiness.status) {
    case EmptinessStatus::Empty: v.status = VerdictStatus::Trivial; break;
    case EmptinessStatus::Nonempty: v.status = VerdictStatus::Nontrivial; break;
    case EmptinessStatus::Unknown: v.status = VerdictStatus::Unknown; break;
  }
  if (emptiness.witness) {
    v.witness = build_witness(p, *emptiness.witness);
    auto grid = default_residual_grid(p.dimension());
    v.residual = verify_residual(*v.witness, p, grid);
  }
  v.evidence.content = std::move(content);
  v.evidence.slice = std::move(slice);
  v.evidence.emptiness = std::move(emptiness);
  return v;
}

}  // namespace

Verdict classify(const MultiPoly& p, const SolutionSpace& space, const SolverConfig& config) {
  config.validate();
  if (space.tag == SpaceTag::Periodic) {
    if (!space.lattice) throw std::invalid_argument("periodic space requires a lattice");
    return periodic_test(PiMultiPoly(p), *space.lattice, config);
  }
  if (p.is_zero()) {
    Verdict v = zero_symbol(space.tag);
    if (space.tag == SpaceTag::SpatiallyTempered) {
      // Any zero-past u works; report the constant one.
      std::vector<Rational> origin(p.dimension(), Rational(0));
      v.witness = build_witness(p, origin);
      auto grid = default_residual_grid(p.dimension());
      v.residual = verify_residual(*v.witness, p, grid);
    }
    return v;
  }
  switch (space.tag) {
    case SpaceTag::Smooth:
    case SpaceTag::Distributions:
      return time_degree_rule(space.tag, p);
    case SpaceTag::TestFunctions:
    case SpaceTag::CompactDistributions:
      return nonzero_rule(space.tag, p, "nonzero-symbol");
    case SpaceTag::Besov:
    case SpaceTag::Sobolev:
    case SpaceTag::SchwartzSpatial:
    case SpaceTag::CompactSpatial:
      return nonzero_rule(space.tag, p, "spatial-profile-nonzero");
    case SpaceTag::SpatiallyTempered:
      return tempered_rule(p, config);
    case SpaceTag::Periodic:
      break;
  }
  throw std::logic_error("unhandled solution space");
}

const char* to_string(SpaceTag tag) {
  for (const auto& [t, name] : kSpaceNames) {
    if (t == tag) return name;
  }
  return "unknown";
}

std::optional<SpaceTag> parse_space_name(std::string_view name) {
  for (const auto& [t, n] : kSpaceNames) {
    if (name == n) return t;
  }
  return std::nullopt;
}

const char* to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Trivial: return "TRIVIAL";
    case VerdictStatus::Nontrivial: return "NONTRIVIAL";
    case VerdictStatus::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::vector<SpaceTag> non_periodic_spaces() {
  return {SpaceTag::Smooth,  SpaceTag::Distributions,   SpaceTag::TestFunctions, SpaceTag::CompactDistributions,
          SpaceTag::SpatiallyTempered, SpaceTag::Besov, SpaceTag::Sobolev,       SpaceTag::SchwartzSpatial,
          SpaceTag::CompactSpatial};
}

bool is_spatial_profile(SpaceTag tag) {
  return tag == SpaceTag::Besov || tag == SpaceTag::Sobolev || tag == SpaceTag::SchwartzSpatial ||
         tag == SpaceTag::CompactSpatial;
}

}  // namespace nullsol
