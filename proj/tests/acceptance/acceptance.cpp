// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include "nullsol/classifier.hpp"
#include "nullsol/interval.hpp"
#include "nullsol/parser.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

using namespace nullsol;
using nullsol::testing::poly;

namespace {

// Pinned tolerances.
constexpr double kTimeLimitSeconds = 1.0;
constexpr double kResidualTolerance = 1e-12;
constexpr double kGridStep = 1.0 / 64.0;
constexpr double kGridThreshold = 1e-6;
constexpr double kThetaRelativeTolerance = 1e-6;
constexpr double kFiniteDifferenceStep = 1e-5;
constexpr double kUnknownRateTarget = 0.30;
constexpr std::size_t kSuiteSize = 150;
constexpr std::uint64_t kSuiteSeed = 20261016;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " --" << o.detail.str() << "\n";
  if (!o.pass) ++failures;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str() + err.str()};
}

VerdictStatus status_in(const MultiPoly& p, SpaceTag s) { return classify(p, SolutionSpace::of(s), {}).status; }

void criterion_diffusion() {
  Outcome o;
  const auto start = Clock::now();
  MultiPoly p = poly("T - (X1^2+X2^2+X3^2)");
  o.require(p.dimension() == 3, "d = 3");
  o.require(status_in(p, SpaceTag::Smooth) == VerdictStatus::Nontrivial, "smooth NONTRIVIAL");
  o.require(status_in(p, SpaceTag::Distributions) == VerdictStatus::Nontrivial, "distributions NONTRIVIAL");
  o.require(status_in(p, SpaceTag::TestFunctions) == VerdictStatus::Trivial, "test functions TRIVIAL");
  o.require(status_in(p, SpaceTag::CompactDistributions) == VerdictStatus::Trivial, "compact TRIVIAL");
  Verdict t = classify(p, SolutionSpace::of(SpaceTag::SpatiallyTempered), {});
  o.require(t.status == VerdictStatus::Trivial, "tempered TRIVIAL");
  bool unit_generator = false;
  if (t.evidence.content)
    for (const auto& g : t.evidence.content->generators) unit_generator = unit_generator || g == MultiPoly::constant(3, Gaussian(1));
  o.require(unit_generator, "content contains the unit generator 1");
  o.require(t.evidence.emptiness && t.evidence.emptiness->certificate == CertificateKind::UnitIdeal, "unit-ideal certificate");
  Verdict d = classify(p, SolutionSpace::of(SpaceTag::Distributions), {});
  o.require(d.evidence.total_degree == 2 && d.evidence.time_axis_degree == 1, "deg 2 vs deg p(0,T) = 1");
  CliRun r = cli({"classify", "T - (X1^2+X2^2+X3^2)", "--space", "all", "--json", "--no-timing"});
  o.require(r.code == 0, "CLI exit 0");
  const double elapsed = seconds_since(start);
  o.require(elapsed < kTimeLimitSeconds, "under 1 s");
  o.detail << " elapsed " << std::fixed << std::setprecision(3) << elapsed << " s";
  report(1, "diffusion fixture", o);
}

void criterion_klein_gordon() {
  Outcome o;
  const auto start = Clock::now();
  MultiPoly p = poly("T^2 - (X1^2+X2^2+X3^2) + 1");
  o.require(degree_test(p), "deg p = deg p(0,T)");
  auto a = coefficients_in_T(p);
  o.require(a.size() == 3 && a[2] == MultiPoly::constant(3, Gaussian(1)), "a_2 = 1");
  const auto spaces = non_periodic_spaces();
  for (SpaceTag s : spaces) {
    o.require(status_in(p, s) == VerdictStatus::Trivial, std::string(to_string(s)) + " TRIVIAL");
  }
  Verdict per = classify(p, SolutionSpace::periodic(LatticeSpec::parse("1,0,0;0,1,0;0,0,1")), {});
  o.require(per.status == VerdictStatus::Trivial, "periodic TRIVIAL");
  const double elapsed = seconds_since(start);
  o.require(elapsed < kTimeLimitSeconds, "under 1 s");
  o.detail << " " << spaces.size() + 1 << " spaces, elapsed " << std::fixed << std::setprecision(3) << elapsed << " s";
  report(2, "Klein-Gordon fixture", o);
}

void criterion_mixed() {
  Outcome o;
  MultiPoly p = poly("X1*X2*T");
  o.require(p.dimension() == 2, "d = 2");
  Verdict v = classify(p, SolutionSpace::of(SpaceTag::SpatiallyTempered), {});
  o.require(v.status == VerdictStatus::Nontrivial, "tempered NONTRIVIAL");
  if (v.witness) {
    const auto& f = v.witness->frequency;
    o.require(sgn(f[0]) == 0 || sgn(f[1]) == 0, "frequency on a coordinate axis");
    auto grid = default_residual_grid(2);
    o.require(grid.size() == 27, "27-point grid");
    auto r = verify_residual(*v.witness, p, grid);
    o.require(r.exact_certificate_ok, "exact certificate zero");
    o.require(r.max_residual < kResidualTolerance, "numeric residual < 1e-12");
    o.detail << " frequency (" << to_string(f[0]) << ", " << to_string(f[1]) << "), max residual " << r.max_residual;
  } else {
    o.require(false, "witness present");
  }
  report(3, "mixed-derivative fixture", o);
}

struct SuiteRun {
  testing::SuiteSystem system;
  EmptinessVerdict verdict;
  std::optional<Rational> radius;
};

std::vector<SuiteRun> run_suite() {
  std::vector<SuiteRun> runs;
  SolverConfig config;
  for (auto& s : testing::emptiness_suite(kSuiteSize, kSuiteSeed)) {
    SuiteRun r{s, decide_emptiness(s.system, config), boundedness_radius(s.system, config)};
    runs.push_back(std::move(r));
  }
  return runs;
}

void criterion_oracle(const std::vector<SuiteRun>& runs) {
  Outcome o;
  std::size_t empty = 0, nonempty = 0, unknown = 0, disagreements = 0;
  double tightest = INFINITY;
  for (const auto& r : runs) {
    const auto& sys = r.system.system;
    switch (r.verdict.status) {
      case EmptinessStatus::Empty: {
        ++empty;
        const double box = r.verdict.bound ? r.verdict.bound->get_d() : SolverConfig{}.default_box_halfwidth.get_d();
        auto scan = testing::grid_min(sys, box, kGridStep);
        tightest = std::min(tightest, scan.min_value);
        bool ok = scan.min_value > kGridThreshold && !r.system.planted;
        if (!ok) ++disagreements;
        break;
      }
      case EmptinessStatus::Nonempty: {
        ++nonempty;
        bool ok = r.verdict.witness && testing::vanishes_exactly(sys, *r.verdict.witness) &&
                  r.system.family != testing::SuiteFamily::PositiveDefinite;
        if (!ok) ++disagreements;
        break;
      }
      case EmptinessStatus::Unknown: ++unknown; break;
    }
  }
  const double rate = static_cast<double>(unknown) / static_cast<double>(runs.size());
  o.require(runs.size() >= 100, "at least 100 systems");
  o.require(disagreements == 0, "zero disagreements");
  o.require(rate < kUnknownRateTarget, "UNKNOWN rate below 30%");
  o.detail << " " << runs.size() << " systems: " << empty << " EMPTY, " << nonempty << " NONEMPTY, " << unknown
           << " UNKNOWN (rate " << std::fixed << std::setprecision(1) << 100.0 * rate << "%), " << disagreements
           << " disagreements; smallest grid minimum over EMPTY " << std::scientific << std::setprecision(2) << tightest;
  report(4, "emptiness engine agrees with the grid oracle", o);
}

void criterion_boundedness(const std::vector<SuiteRun>& runs) {
  Outcome o;
  std::size_t checked = 0;
  double worst = INFINITY;
  std::size_t points = 0;
  for (const auto& r : runs) {
    if (!r.radius) continue;
    ++checked;
    const double r0 = r.radius->get_d();
    auto scan = testing::grid_min(r.system.system, 2.0 * r0, kGridStep, r0);
    points += scan.points;
    worst = std::min(worst, scan.min_value);
    if (!(scan.min_value >= kGridThreshold)) o.require(false, "no near-zero outside [-R0, R0]^d");
  }
  o.require(checked > 0, "some system has a radius");
  o.detail << " " << checked << " systems with R0, " << points << " grid points, smallest value " << std::scientific
           << std::setprecision(2) << worst;
  report(5, "boundedness soundness", o);
}

void criterion_theta() {
  Outcome o;
  auto p = theta_derivatives(4);
  double worst = 0.0;
  for (int j = 1; j <= 4; ++j) {
    for (double t : {0.5, 1.0, 2.0}) {
      auto lower = [j](double u) { return testing::theta_derivative_via_t(j - 1, u); };
      const double fd = testing::central_difference(lower, t, kFiniteDifferenceStep);
      const double value = theta_derivative_value(p[j], t);
      // relative above 1, absolute below (Theta'' vanishes at t = 1/2)
      const double rel = std::abs(value - fd) / std::max(std::abs(fd), 1.0);
      worst = std::max(worst, rel);
      o.require(rel < kThetaRelativeTolerance, "P_" + std::to_string(j) + " at t = " + std::to_string(t));
    }
  }
  o.detail << " P_1..P_4 at t in {0.5, 1, 2}, worst relative error " << std::scientific << std::setprecision(2) << worst;
  report(6, "Theta derivatives match finite differences", o);
}

void criterion_periodic() {
  Outcome o;
  const auto start = Clock::now();
  CliRun r = cli({"periodic", "X1^2*T + 4*PI^2*T", "--lattice", "1", "--json", "--no-timing"});
  o.require(r.code == 0, "exit 0");
  auto j = nlohmann::ordered_json::parse(r.out, nullptr, false);
  if (!j.is_discarded()) {
    const auto& v = j["verdicts"][0];
    o.require(v["status"] == "NONTRIVIAL", "NONTRIVIAL");
    o.require(v["evidence"]["lattice_point"] == nlohmann::ordered_json::array({"1"}), "k = 1");
    bool exact = j.contains("witness") && j["witness"]["certificate_holds"] == true;
    if (exact)
      for (const auto& c : j["witness"]["certificate"]) exact = exact && c == "0";
    o.require(exact, "exact Q[pi] certificate");
  } else {
    o.require(false, "JSON report");
  }
  Verdict lib = periodic_test(testing::pi_poly("X1^2*T + 4*PI^2*T"), LatticeSpec::parse("1"), {});
  bool zero = lib.witness.has_value();
  if (zero)
    for (const auto& c : lib.witness->certificate) zero = zero && c == PiGaussian();
  o.require(zero, "certificate entries are the zero element of Q(i)[pi]");
  CliRun t = cli({"periodic", "T - X1^2", "--lattice", "1", "--json", "--no-timing"});
  auto tj = nlohmann::ordered_json::parse(t.out, nullptr, false);
  o.require(t.code == 0 && !tj.is_discarded() && tj["verdicts"][0]["status"] == "TRIVIAL", "T - X1^2 TRIVIAL");
  const double elapsed = seconds_since(start);
  o.require(elapsed < kTimeLimitSeconds, "under 1 s");
  o.detail << " elapsed " << std::fixed << std::setprecision(3) << elapsed << " s";
  report(7, "periodic resonance fixture", o);
}

void criterion_properties() {
  Outcome o;
  std::mt19937_64 rng(8080);
  std::size_t ring_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = static_cast<int>(rng() % 3);
    MultiPoly a = testing::random_poly(rng, d, 3, 4, 6, true);
    MultiPoly b = testing::random_poly(rng, d, 3, 4, 6, true);
    MultiPoly c = testing::random_poly(rng, d, 3, 4, 6, true);
    std::vector<Gaussian> pt;
    for (int k = 0; k <= d; ++k) pt.push_back(testing::random_gaussian(rng, 5));
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
              a * (b + c) == a * b + a * c && eval(a * b, pt) == eval(a, pt) * eval(b, pt) &&
              eval(a + b, pt) == eval(a, pt) + eval(b, pt);
    if (!ok) ++ring_failures;
  }
  o.require(ring_failures == 0, "ring laws and eval homomorphism");

  std::size_t trip_failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int d = static_cast<int>(rng() % 4);
    MultiPoly p = testing::random_poly(rng, d, 4, 6, 12, true);
    auto back = parse(SourceExpr{print_canonical(p), d});
    if (!std::holds_alternative<MultiPoly>(back) || std::get<MultiPoly>(back) != p) ++trip_failures;
  }
  o.require(trip_failures == 0, "parser round trip");

  std::size_t enclosure_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    MultiPoly p = testing::random_poly(rng, d, 4, 6, 8, false, true);
    std::vector<Interval> sides;
    std::vector<Rational> x;
    std::uniform_int_distribution<long> step(0, 64);
    for (int k = 0; k < d; ++k) {
      Rational lo = testing::random_rational(rng, 6), hi = testing::random_rational(rng, 6);
      if (lo > hi) std::swap(lo, hi);
      sides.emplace_back(lo, hi);
      x.push_back(lo + (hi - lo) * rat(step(rng), 64));
    }
    std::vector<Gaussian> at(x.begin(), x.end());
    at.emplace_back(0);
    if (!CompiledPoly(p).enclose(IntervalBox(sides)).contains(eval(p, at).re)) ++enclosure_failures;
  }
  o.require(enclosure_failures == 0, "interval enclosure");

  const std::vector<std::vector<std::string>> inputs{
      {"classify", "(X1^2+X2^2+1)*(T+1)"},
      {"classify", "(X1^2+X2^2-1)*T + X1*X2 - X2"},
      {"classify", "T*(X1^2+2) + X2", "--max-depth", "14"},
      {"periodic", "(X1^2 + X2^2 + 4*PI^2)*T", "--lattice", "1,0;0,1"},
  };
  std::size_t determinism_failures = 0;
  for (const auto& base : inputs) {
    std::string reference;
    for (const char* threads : {"1", "2", "8"}) {
      auto args = base;
      args.insert(args.end(), {"--json", "--no-timing", "--threads", threads});
      CliRun r = cli(args);
      if (reference.empty()) reference = r.out;
      if (r.out != reference) ++determinism_failures;
    }
  }
  o.require(determinism_failures == 0, "identical JSON across 1, 2, 8 threads");
  o.detail << " 1000 ring/eval triples, 500 round trips, 1000 enclosure triples, " << inputs.size()
           << " inputs x 3 thread counts";
  report(8, "property suites", o);
}

}  // namespace

int main() {
  criterion_diffusion();
  criterion_klein_gordon();
  criterion_mixed();
  auto runs = run_suite();
  criterion_oracle(runs);
  criterion_boundedness(runs);
  criterion_theta();
  criterion_periodic();
  criterion_properties();
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
