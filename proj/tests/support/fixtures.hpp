#pragma once

#include "nullsol/parser.hpp"
#include "nullsol/symbol.hpp"

#include <stdexcept>
#include <string>

namespace nullsol::testing {

inline MultiPoly poly(const std::string& text, std::optional<int> dim = std::nullopt) {
  auto r = parse(SourceExpr{text, dim});
  if (auto* e = std::get_if<ParseError>(&r)) throw std::runtime_error("fixture does not parse: " + text + ": " + e->message);
  return std::get<MultiPoly>(r);
}

inline PiMultiPoly pi_poly(const std::string& text, std::optional<int> dim = std::nullopt) {
  auto r = parse_with_pi(SourceExpr{text, dim});
  if (auto* e = std::get_if<ParseError>(&r)) throw std::runtime_error("fixture does not parse: " + text + ": " + e->message);
  return std::get<PiMultiPoly>(r);
}

/// Real system in xi given as polynomials in X1..Xd.
inline RealPolySystem real_system(int d, std::initializer_list<const char*> polys) {
  RealPolySystem sys{d, {}};
  for (const char* p : polys) sys.polys.push_back(poly(p, d));
  return sys;
}

}  // namespace nullsol::testing
