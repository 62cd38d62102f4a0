#pragma once

#include "nullsol/multipoly.hpp"
#include "nullsol/pi_poly.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

namespace nullsol {

// Input grammar:
//
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := 'T' | 'X' uint | 'i' | 'PI' | rational | '(' expr ')' | '-' factor
//   rational := uint ('/' uint)?
//
// X indices are 1-based. `^` binds tighter than unary minus and there is no
// implicit multiplication. `PI` is only accepted by parse_with_pi().

struct SourceExpr {
  std::string text;
  /// Declared d; when absent it is inferred from the highest Xk index.
  std::optional<int> dimension;
};

enum class ParseErrorKind { UnexpectedToken, UnknownSymbol, BadExponent, DimensionExceeded };

struct ParseError {
  std::size_t position = 0;  ///< byte offset into the source text
  std::string message;
  ParseErrorKind kind = ParseErrorKind::UnexpectedToken;
};

const char* to_string(ParseErrorKind kind);

/// Largest exponent literal accepted after `^`.
inline constexpr unsigned kMaxExponent = 1000;

std::variant<MultiPoly, ParseError> parse(const SourceExpr& src);
std::variant<PiMultiPoly, ParseError> parse_with_pi(const SourceExpr& src);

/// Terms in descending graded-lex order; re-parses to an equal polynomial.
std::string print_canonical(const MultiPoly& p);
std::string print_canonical(const PiMultiPoly& p);

/// Two-line diagnostic: the source text and a caret under the offending byte.
std::string render_parse_error(const std::string& text, const ParseError& err);

}  // namespace nullsol
