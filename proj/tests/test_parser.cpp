#include "fixtures.hpp"
#include "oracles.hpp"

#include "nullsol/parser.hpp"

#include <doctest.h>

#include <random>

using namespace nullsol;
using nullsol::testing::poly;

namespace {

ParseError error_of(const std::string& text, std::optional<int> dim = std::nullopt) {
  auto r = parse(SourceExpr{text, dim});
  REQUIRE(std::holds_alternative<ParseError>(r));
  return std::get<ParseError>(r);
}

MultiPoly sum_of_squares(int d) {
  MultiPoly s(d);
  for (int k = 0; k < d; ++k) s += pow(MultiPoly::variable(d, k), 2);
  return s;
}

}  // namespace

TEST_SUITE("pde-parser") {
  TEST_CASE("diffusion symbol") {
    MultiPoly p = poly("T - (X1^2 + X2^2 + X3^2)");
    CHECK(p.dimension() == 3);
    CHECK(p == MultiPoly::variable(3, 3) - sum_of_squares(3));
  }

  TEST_CASE("Klein-Gordon symbol with m = 1") {
    MultiPoly p = poly("T^2 - (X1^2 + X2^2) + 1");
    CHECK(p.dimension() == 2);
    CHECK(p == pow(MultiPoly::variable(2, 2), 2) - sum_of_squares(2) + MultiPoly::constant(2, Gaussian(1)));
  }

  TEST_CASE("negative and fractional exponents are rejected") {
    auto e = error_of("X1^-1");
    CHECK(e.kind == ParseErrorKind::BadExponent);
    CHECK(e.position == 3);
    CHECK(error_of("X1^1/2").kind == ParseErrorKind::BadExponent);
    CHECK(error_of("X1^1001").kind == ParseErrorKind::BadExponent);
    CHECK(error_of("T^^2").kind == ParseErrorKind::BadExponent);
  }

  TEST_CASE("symbols") {
    CHECK(error_of("I*X1").kind == ParseErrorKind::UnknownSymbol);
    CHECK(error_of("j").kind == ParseErrorKind::UnknownSymbol);
    CHECK(error_of("X0").kind == ParseErrorKind::UnknownSymbol);
    CHECK(error_of("Y").kind == ParseErrorKind::UnknownSymbol);
    auto pi = error_of("PI*T");
    CHECK(pi.kind == ParseErrorKind::UnknownSymbol);
    CHECK(pi.position == 0);
    CHECK(error_of("T # 2").kind == ParseErrorKind::UnexpectedToken);
  }

  TEST_CASE("dimension") {
    CHECK(poly("T").dimension() == 0);
    CHECK(poly("X4").dimension() == 4);
    CHECK(poly("X1", 3).dimension() == 3);
    auto e = error_of("X1 + X3", 2);
    CHECK(e.kind == ParseErrorKind::DimensionExceeded);
    CHECK(e.position == 5);
  }

  TEST_CASE("grammar") {
    CHECK(poly("-X1^2") == -pow(MultiPoly::variable(1, 0), 2));
    CHECK(poly("2*3/4") == MultiPoly::constant(0, Gaussian(rat(3, 2))));
    CHECK(poly("--T") == poly("T"));
    CHECK(poly("(X1+i)^2") == poly("X1^2 + 2*i*X1 - 1"));
    CHECK(error_of("2X1").kind == ParseErrorKind::UnexpectedToken);
    CHECK(error_of("X1 X2").kind == ParseErrorKind::UnexpectedToken);
    CHECK(error_of("(T").kind == ParseErrorKind::UnexpectedToken);
    CHECK(error_of("").kind == ParseErrorKind::UnexpectedToken);
    CHECK(error_of("1/0").kind == ParseErrorKind::UnexpectedToken);
  }

  TEST_CASE("canonical printing") {
    CHECK(print_canonical(MultiPoly(2)) == "0");
    CHECK(print_canonical(poly("(1+i)*X1")) == "(1+1*i)*X1");
    CHECK(print_canonical(poly("X1 - 1/2*T")) == "-1/2*T+X1");
    CHECK(print_canonical(testing::pi_poly("X1^2*T + 4*PI^2*T")) == "X1^2*T+4*PI^2*T");
    MultiPoly diffusion = poly("T - (X1^2 + X2^2 + X3^2)");
    CHECK(poly(print_canonical(diffusion), 3) == diffusion);
  }

  TEST_CASE("caret diagnostics") {
    auto e = error_of("T + X1^-1");
    std::string shown = render_parse_error("T + X1^-1", e);
    CHECK(shown.find("T + X1^-1\n       ^") == 0);
  }

  TEST_CASE("round trip on 500 random polynomials") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
      const int d = static_cast<int>(rng() % 4);
      MultiPoly p = testing::random_poly(rng, d, 4, 6, 12, true);
      std::string text = print_canonical(p);
      auto back = parse(SourceExpr{text, d});
      REQUIRE(std::holds_alternative<MultiPoly>(back));
      CHECK(std::get<MultiPoly>(back) == p);
    }
  }

  TEST_CASE("parsing is total on random input") {
    const std::string alphabet = "TXIi0123456789+-*/^() PIj#";
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5000; ++trial) {
      std::string text;
      const std::size_t len = rng() % 16;
      for (std::size_t k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
      std::variant<MultiPoly, ParseError> r;
      CHECK_NOTHROW(r = parse(SourceExpr{text, std::nullopt}));
      if (auto* e = std::get_if<ParseError>(&r)) CHECK(e->position <= text.size());
      CHECK_NOTHROW((void)parse_with_pi(SourceExpr{text, std::nullopt}));
    }
  }
}
