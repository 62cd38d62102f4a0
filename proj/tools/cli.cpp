#include "cli.hpp"

#include "nullsol/parser.hpp"
#include "nullsol/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <iterator>
#include <sstream>

namespace nullsol {

namespace {

constexpr const char* kGrammarHelp =
    "Expressions: sums and products of T, X1..Xd, i, rationals a or a/b, parentheses and\n"
    "non-negative integer powers (^). Multiplication must be written with '*'.\n"
    "Example: \"T - (X1^2+X2^2+X3^2)\". Pass \"-\" to read the expression from stdin.\n";

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  bool json = false;
  bool no_timing = false;
  int threads = 0;
  int max_depth = 24;
  std::string box = "16";
  int denominator_bound = 64;
  int lattice_radius = 16;
  std::size_t groebner_cap = 50'000;
  std::size_t max_boxes = 1 << 16;

  SolverConfig config() const {
    SolverConfig c;
    c.threads = threads;
    c.max_depth = max_depth;
    auto halfwidth = parse_rational(box);
    if (!halfwidth) throw InputError("--box expects a rational number, got '" + box + "'");
    c.default_box_halfwidth = *halfwidth;
    c.denominator_bound = denominator_bound;
    c.lattice_radius = lattice_radius;
    c.groebner_cap = groebner_cap;
    c.max_boxes = max_boxes;
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return c;
  }
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_flag("--json", o.json, "Emit the JSON report");
  cmd->add_flag("--no-timing", o.no_timing, "Omit timing fields");
  cmd->add_option("--threads", o.threads, "Solver threads (1 = serial kernel, 0 = runtime default)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-depth", o.max_depth, "Subdivision depth limit")->capture_default_str();
  cmd->add_option("--box", o.box, "Half-width of the default search cube")->capture_default_str();
  cmd->add_option("--denominator-bound", o.denominator_bound, "Largest denominator tried for exact zeros")
      ->capture_default_str();
  cmd->add_option("--lattice-radius", o.lattice_radius, "Lattice enumeration radius when zeros are unbounded")
      ->capture_default_str();
  cmd->add_option("--groebner-cap", o.groebner_cap, "Reduction budget of the unit-ideal test")->capture_default_str();
  cmd->add_option("--max-boxes", o.max_boxes, "Largest subdivision frontier")->capture_default_str();
}

std::string read_expression(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

template <typename T>
T parse_or_throw(const std::variant<T, ParseError>& r, const std::string& text) {
  if (const auto* e = std::get_if<ParseError>(&r)) throw InputError("invalid expression\n" + render_parse_error(text, *e));
  return std::get<T>(r);
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    std::string t = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    auto q = parse_rational(t);
    if (!q) throw InputError("frequency entry '" + t + "' is not a rational number");
    out.push_back(std::move(*q));
  }
  return out;
}

void emit(const Report& report, const CommonOptions& o, std::ostream& out) {
  if (o.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << render_text(report);
  }
}

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Null-solution triviality of constant-coefficient PDEs", "nullsol"};
  app.footer(kGrammarHelp);
  app.require_subcommand(1);
  app.set_version_flag("--version", NULLSOL_VERSION);

  CommonOptions opts;
  std::string expr;
  std::optional<int> dim;

  auto* classify_cmd = app.add_subcommand("classify", "Classify null-solution triviality per solution space");
  std::string space = "all";
  classify_cmd->add_option("expr", expr, "Symbol polynomial p(X1..Xd, T)")->required();
  classify_cmd->add_option("--space", space,
                           "all, smooth, distributions, test, compact, tempered, besov, sobolev, schwartz, "
                           "compact-spatial")
      ->capture_default_str();
  classify_cmd->add_option("--dim", dim, "Spatial dimension d");
  add_common(classify_cmd, opts);

  auto* periodic_cmd = app.add_subcommand("periodic", "Periodic test for a lattice of periods (PI allowed)");
  std::string lattice_text;
  periodic_cmd->add_option("expr", expr, "Symbol polynomial; may use the constant PI")->required();
  periodic_cmd->add_option("--lattice", lattice_text, "Period rows, e.g. \"1,0;0,2\"")->required();
  add_common(periodic_cmd, opts);

  auto* content_cmd = app.add_subcommand("content", "Print the T-coefficients generating the X-content");
  content_cmd->add_option("expr", expr, "Symbol polynomial")->required();
  content_cmd->add_option("--dim", dim, "Spatial dimension d");
  add_common(content_cmd, opts);

  auto* witness_cmd = app.add_subcommand("witness", "Build and verify an explicit null solution");
  std::string freq_text;
  bool automatic = false;
  witness_cmd->add_option("expr", expr, "Symbol polynomial")->required();
  auto* freq_opt = witness_cmd->add_option("--freq", freq_text, "Frequency xi0 as comma-separated rationals");
  auto* auto_opt = witness_cmd->add_flag("--auto", automatic, "Search for a frequency");
  freq_opt->excludes(auto_opt);
  witness_cmd->add_option("--dim", dim, "Spatial dimension d");
  add_common(witness_cmd, opts);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const auto start = Clock::now();
    SolverConfig config = opts.config();
    std::string text = read_expression(expr, in);
    Report report;
    report.config = config;

    if (classify_cmd->parsed()) {
      report.command = "classify";
      MultiPoly p = parse_or_throw(parse(SourceExpr{text, dim}), text);
      report.input = {print_canonical(p), p.dimension(), std::nullopt};
      std::vector<SpaceTag> spaces;
      if (space == "all") {
        spaces = non_periodic_spaces();
      } else {
        auto tag = parse_space_name(space);
        if (!tag) throw InputError("unknown space '" + space + "'");
        if (*tag == SpaceTag::Periodic) throw InputError("use the periodic command for the periodic space");
        spaces = {*tag};
      }
      for (SpaceTag s : spaces) report.verdicts.push_back(classify(p, SolutionSpace::of(s), config));
    } else if (periodic_cmd->parsed()) {
      report.command = "periodic";
      LatticeSpec lattice = [&] {
        try {
          return LatticeSpec::parse(lattice_text);
        } catch (const std::invalid_argument& e) {
          throw InputError(std::string("--lattice: ") + e.what());
        }
      }();
      PiMultiPoly p = parse_or_throw(parse_with_pi(SourceExpr{text, lattice.dimension()}), text);
      report.input = {print_canonical(p), p.dimension, lattice};
      report.verdicts.push_back(periodic_test(p, lattice, config));
    } else if (content_cmd->parsed()) {
      report.command = "content";
      MultiPoly p = parse_or_throw(parse(SourceExpr{text, dim}), text);
      report.input = {print_canonical(p), p.dimension(), std::nullopt};
      report.content = x_content(p);
    } else if (witness_cmd->parsed()) {
      report.command = "witness";
      MultiPoly p = parse_or_throw(parse(SourceExpr{text, dim}), text);
      report.input = {print_canonical(p), p.dimension(), std::nullopt};
      if (automatic) {
        report.verdicts.push_back(classify(p, SolutionSpace::of(SpaceTag::SpatiallyTempered), config));
      } else {
        if (freq_text.empty()) throw InputError("witness needs --freq or --auto");
        std::vector<Rational> freq = parse_point(freq_text);
        if (static_cast<int>(freq.size()) != p.dimension()) {
          throw InputError("--freq has " + std::to_string(freq.size()) + " entries but d = " +
                           std::to_string(p.dimension()));
        }
        try {
          report.witness = build_witness(p, freq);
        } catch (const CertificateFailure& e) {
          throw InputError(std::string("certificate failure: ") + e.what());
        }
        auto grid = default_residual_grid(p.dimension());
        report.residual = verify_residual(*report.witness, p, grid);
      }
    }

    if (!opts.no_timing) report.elapsed_ms = ms_since(start);
    emit(report, opts, out);
    return exit_code(report);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nullsol
