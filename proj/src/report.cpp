#include "nullsol/report.hpp"

#include "nullsol/parser.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace nullsol {

using json = nlohmann::ordered_json;

namespace {

json rationals(std::span<const Rational> v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

json integers(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(z.get_str());
  return out;
}

json polys(const std::vector<MultiPoly>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(print_canonical(p));
  return out;
}

json box_json(const IntervalBox& box) {
  json out = json::array();
  for (const auto& side : box.sides) out.push_back(json::array({to_string(side.lo), to_string(side.hi)}));
  return out;
}

json emptiness_json(const EmptinessVerdict& e) {
  json j;
  j["status"] = to_string(e.status);
  j["certificate"] = to_string(e.certificate);
  if (e.bound) j["bound"] = to_string(*e.bound);
  if (e.witness) j["point"] = rationals(*e.witness);
  const auto& d = e.diagnostics;
  json diag;
  diag["stage"] = d.stage;
  if (!d.free_variables.empty()) {
    json free = json::array();
    for (int k : d.free_variables) free.push_back("X" + std::to_string(k + 1));
    diag["free_variables"] = std::move(free);
  }
  if (d.groebner) diag["groebner"] = to_string(*d.groebner);
  diag["groebner_reductions"] = d.groebner_reductions;
  if (d.boundedness_radius) diag["boundedness_radius"] = to_string(*d.boundedness_radius);
  if (d.searched_halfwidth) diag["searched_halfwidth"] = to_string(*d.searched_halfwidth);
  json levels = json::array();
  for (const auto& l : d.levels) levels.push_back({{"depth", l.depth}, {"examined", l.examined}, {"discarded", l.discarded}});
  diag["levels"] = std::move(levels);
  diag["boxes_examined"] = d.boxes_examined;
  diag["frontier_capped"] = d.frontier_capped;
  diag["unresolved_count"] = d.unresolved_count;
  json boxes = json::array();
  for (const auto& b : d.unresolved) boxes.push_back(box_json(b));
  diag["unresolved"] = std::move(boxes);
  j["diagnostics"] = std::move(diag);
  return j;
}

json evidence_json(const Evidence& e) {
  json j = json::object();
  if (e.total_degree) j["total_degree"] = *e.total_degree;
  if (e.time_axis_degree) j["time_axis_degree"] = *e.time_axis_degree;
  if (e.content) j["content"] = polys(e.content->generators);
  if (e.slice) j["imaginary_slice"] = polys(e.slice->polys);
  if (e.emptiness) j["emptiness"] = emptiness_json(*e.emptiness);
  if (e.lattice_system) j["resonance_system"] = polys(e.lattice_system->polys);
  if (e.lattice_point) j["lattice_point"] = integers(*e.lattice_point);
  if (e.reduced_frequency) j["reduced_frequency"] = rationals(*e.reduced_frequency);
  if (e.frequency_radius) j["frequency_radius"] = to_string(*e.frequency_radius);
  if (e.searched_lattice_radius) j["searched_lattice_radius"] = *e.searched_lattice_radius;
  if (e.lattice_system) {
    j["lattice_points_checked"] = e.lattice_points_checked;
    j["enumeration_complete"] = e.enumeration_complete;
  }
  return j;
}

json witness_json(const Witness& w, const std::optional<ResidualReport>& r) {
  json j;
  j["kind"] = to_string(w.kind);
  j["frequency"] = rationals(w.frequency);
  j["frequency_scale"] = w.frequency_has_two_pi() ? "2*PI" : "1";
  json cert = json::array();
  for (const auto& c : w.certificate) cert.push_back(to_string(c));
  j["certificate"] = std::move(cert);
  j["certificate_holds"] = w.certificate_holds();
  json theta = json::array();
  for (const auto& t : w.theta) theta.push_back(to_string(t));
  j["theta"] = std::move(theta);
  if (r) {
    j["sampled_points"] = r->points;
    j["sampled_residual_max"] = r->max_residual;
    j["past_vanishes"] = r->past_vanishes;
  }
  return j;
}

json verdict_json(const Verdict& v) {
  json j;
  j["space"] = to_string(v.space);
  j["status"] = to_string(v.status);
  j["rule"] = v.rule;
  j["criterion"] = v.criterion;
  j["evidence"] = evidence_json(v.evidence);
  j["has_witness"] = v.witness.has_value();
  return j;
}

bool has_full_spatial_profile_group(const std::vector<Verdict>& vs) {
  return std::count_if(vs.begin(), vs.end(), [](const Verdict& v) { return is_spatial_profile(v.space); }) == 4;
}

const Verdict* witness_source(const Report& r) {
  for (const auto& v : r.verdicts) {
    if (v.witness) return &v;
  }
  return nullptr;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string point_text(std::span<const Rational> v) {
  std::vector<std::string> parts;
  for (const auto& q : v) parts.push_back(to_string(q));
  return "(" + join(parts, ", ") + ")";
}

}  // namespace

json to_json(const Report& report) {
  json j;
  json input;
  input["command"] = report.command;
  input["expression"] = report.input.expression;
  input["dimension"] = report.input.dimension;
  if (report.input.lattice) {
    json rows = json::array();
    for (const auto& row : report.input.lattice->rows()) rows.push_back(rationals(row));
    input["lattice"] = std::move(rows);
  }
  j["input"] = std::move(input);

  json verdicts = json::array();
  const bool group = has_full_spatial_profile_group(report.verdicts);
  bool grouped_emitted = false;
  for (const auto& v : report.verdicts) {
    if (group && is_spatial_profile(v.space)) {
      if (grouped_emitted) continue;
      grouped_emitted = true;
      json g = verdict_json(v);
      g["space"] = "spatial-profile";
      json members = json::array();
      for (const auto& m : report.verdicts)
        if (is_spatial_profile(m.space)) members.push_back(to_string(m.space));
      g["members"] = std::move(members);
      verdicts.push_back(std::move(g));
      continue;
    }
    verdicts.push_back(verdict_json(v));
  }
  j["verdicts"] = std::move(verdicts);
  if (report.content) j["content"] = polys(report.content->generators);

  if (report.witness) {
    j["witness"] = witness_json(*report.witness, report.residual);
  } else if (const Verdict* src = witness_source(report)) {
    json w = witness_json(*src->witness, src->residual);
    w["space"] = to_string(src->space);
    j["witness"] = std::move(w);
  }

  json diag;
  const auto& c = report.config;
  diag["config"] = {{"max_depth", c.max_depth},
                    {"default_box_halfwidth", to_string(c.default_box_halfwidth)},
                    {"denominator_bound", c.denominator_bound},
                    {"lattice_radius", c.lattice_radius},
                    {"groebner_cap", c.groebner_cap},
                    {"max_boxes", c.max_boxes},
                    {"max_lattice_points", c.max_lattice_points}};
  if (report.elapsed_ms) diag["elapsed_ms"] = *report.elapsed_ms;
  j["diagnostics"] = std::move(diag);
  j["version"] = NULLSOL_VERSION;
  return j;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "input: " << report.input.expression << "  (d = " << report.input.dimension << ")\n";
  if (report.content) {
    out << "content generators:\n";
    for (const auto& g : report.content->generators) out << "  " << print_canonical(g) << "\n";
  }
  if (!report.verdicts.empty()) {
    const bool group = has_full_spatial_profile_group(report.verdicts);
    bool grouped_emitted = false;
    out << std::left << std::setw(18) << "space" << std::setw(12) << "verdict" << "rule\n";
    for (const auto& v : report.verdicts) {
      std::string name = to_string(v.space);
      if (group && is_spatial_profile(v.space)) {
        if (grouped_emitted) continue;
        grouped_emitted = true;
        name = "spatial-profile";
      }
      out << std::left << std::setw(18) << name << std::setw(12) << to_string(v.status) << v.rule << "\n";
      const auto& e = v.evidence;
      if (e.emptiness && e.emptiness->status == EmptinessStatus::Unknown) {
        const auto& d = e.emptiness->diagnostics;
        out << "  unresolved: " << d.unresolved_count << " boxes after " << d.levels.size() << " levels";
        if (d.searched_halfwidth) out << " in [-" << to_string(*d.searched_halfwidth) << ", " << to_string(*d.searched_halfwidth) << "]^d";
        out << "\n";
      }
      if (e.lattice_point) {
        std::vector<Rational> k(e.lattice_point->begin(), e.lattice_point->end());
        out << "  lattice point k = " << point_text(k) << "\n";
      }
      if (v.status == VerdictStatus::Unknown && e.searched_lattice_radius) {
        out << "  no resonance for |k_i| <= " << *e.searched_lattice_radius << "\n";
      }
    }
    if (group) out << "  (spatial-profile: besov, sobolev, schwartz, compact-spatial)\n";
  }
  const Witness* w = report.witness ? &*report.witness : nullptr;
  const ResidualReport* r = report.residual ? &*report.residual : nullptr;
  if (!w) {
    if (const Verdict* src = witness_source(report)) {
      w = &*src->witness;
      r = src->residual ? &*src->residual : nullptr;
    }
  }
  if (w) {
    out << "witness: " << to_string(w->kind) << ", frequency " << (w->frequency_has_two_pi() ? "2*PI*" : "")
        << point_text(w->frequency) << "\n";
    out << "  certificate " << (w->certificate_holds() ? "OK" : "FAILED") << ":";
    for (std::size_t j = 0; j < w->certificate.size(); ++j) out << " a" << j << "=" << to_string(w->certificate[j]);
    out << "\n";
    if (r) out << "  sampled residual max " << r->max_residual << " over " << r->points << " points\n";
  }
  if (report.elapsed_ms) out << "elapsed: " << std::fixed << std::setprecision(3) << *report.elapsed_ms << " ms\n";
  return out.str();
}

int exit_code(const Report& report) {
  bool unknown = std::any_of(report.verdicts.begin(), report.verdicts.end(),
                             [](const Verdict& v) { return v.status == VerdictStatus::Unknown; });
  return unknown ? 2 : 0;
}

}  // namespace nullsol
