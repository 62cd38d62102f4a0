#pragma once

#include "nullsol/classifier.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace nullsol {

struct ReportInput {
  std::string expression;  ///< canonical form
  int dimension = 0;
  std::optional<LatticeSpec> lattice;
};

struct Report {
  std::string command;
  ReportInput input;
  std::vector<Verdict> verdicts;
  /// Content generators printed by the content command.
  std::optional<ContentGenerators> content;
  /// Witness built directly by the witness command; otherwise the first
  /// verdict carrying one is reported.
  std::optional<Witness> witness;
  std::optional<ResidualReport> residual;
  SolverConfig config;
  std::optional<double> elapsed_ms;
};

/// Keys appear in a fixed order; nothing depends on the thread count.
nlohmann::ordered_json to_json(const Report& report);
std::string render_text(const Report& report);

/// 0 when every verdict is decisive, 2 when any is UNKNOWN.
int exit_code(const Report& report);

}  // namespace nullsol
