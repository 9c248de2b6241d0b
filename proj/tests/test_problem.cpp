#include <doctest.h>

#include "helpers.hpp"
#include "subalg/problem.hpp"

using namespace subalg;
using namespace subalg::test;

namespace {

const char* kExample =
    "ring = int\n"
    "vars = x, y\n"
    "order = deglex\n"
    "[F]\n"
    "4*x^2*y^2 + 2*x*y^3 + 3*x*y\n"
    "2*x^2 + x*y\n"
    "2*y^2\n";

}  // namespace

TEST_CASE("a full problem file parses") {
  ProblemFile pf = parse_problem(kExample);
  CHECK(pf.ring.domain == Domain::Integers);
  CHECK(pf.ring.vars == std::vector<std::string>{"x", "y"});
  REQUIRE(pf.f_section.size() == 3);
  CHECK(poly_to_string(pf.ring, pf.f_section[0]) == "4*x^2*y^2 + 2*x*y^3 + 3*x*y");
  CHECK_FALSE(pf.has_g);
  CHECK(pf.max_passes == 0);
}

TEST_CASE("sections, comments and options") {
  ProblemFile pf = parse_problem(
      "ring = rat\n"
      "vars = x, y\n"
      "order = lex\n"
      "max_passes = 5\n"
      "[F]\n"
      "x + 1/2*y  # a comment\n"
      "[G]\n"
      "x^2\n");
  CHECK(pf.ring.domain == Domain::Rationals);
  CHECK(pf.max_passes == 5);
  REQUIRE(pf.has_g);
  CHECK(pf.g_section.size() == 1);
  CHECK(poly_to_string(pf.ring, pf.f_section[0]) == "x + 1/2*y");
}

TEST_CASE("empty generator section is diagnosed") {
  CHECK_THROWS_WITH_AS(
      parse_problem("ring = int\nvars = x\norder = lex\n[F]\n"),
      doctest::Contains("empty generator section"), ParseError);
}

TEST_CASE("implicit multiplication is a positioned error") {
  try {
    parse_problem("ring = int\nvars = x\norder = lex\n[F]\n2x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 5);
    CHECK(e.column == 2);
    CHECK(std::string(e.what()).find("implicit multiplication") != std::string::npos);
  }
}

TEST_CASE("assorted diagnostics") {
  CHECK_THROWS_AS(parse_problem("vars = x\norder = lex\n[F]\nx\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring = int\nvars = x, x\norder = lex\n[F]\nx\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_problem("ring = int\nvars = x\norder = fancy\n[F]\nx\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_problem("ring = int\nvars = x\norder = lex\n[F]\ny\n"), ParseError);
  CHECK_THROWS_AS(parse_problem("ring = int\nvars = x\norder = lex\n[F]\n1/2*x\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_problem("ring = rat\nvars = x\norder = lex\n[F]\n1/0*x\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_problem("ring = int\nvars = x\norder = lex\n[Q]\nx\n"), ParseError);
}

TEST_CASE("printing and parsing are mutually inverse") {
  PolyRing r = zz_xy();
  SUBCASE("formats") {
    CHECK(poly_to_string(r, Poly()) == "0");
    CHECK(poly_to_string(r, P(r, "x")) == "x");
    CHECK(poly_to_string(r, P(r, "0 - x")) == "-x");
    CHECK(poly_to_string(r, P(r, "3*x^2 - x*y + 7")) == "3*x^2 - x*y + 7");
    CHECK(poly_to_string(r, P(r, "0 - 1")) == "-1");
  }
  SUBCASE("roundtrip on random polynomials") {
    Rng rng(13579);
    for (int round = 0; round < 80; ++round) {
      Poly p = random_poly(rng, r, 6, 5, 9);
      CHECK(parse_poly(r, poly_to_string(r, p)) == p);
    }
  }
  SUBCASE("roundtrip over the rationals") {
    PolyRing q = qq_xy();
    Rng rng(24680);
    for (int round = 0; round < 40; ++round) {
      Poly p = random_poly(rng, q, 5, 4, 7);
      p = p_scale(p, Coeff(1) / Coeff(rng.pick(1, 9)));
      CHECK(parse_poly(q, poly_to_string(q, p)) == p);
    }
  }
}

TEST_CASE("mangled input fails cleanly, never crashes") {
  Rng rng(707);
  const std::string alphabet = "xy123+-*^/ =[]F,\n#ringvarsorder";
  for (int round = 0; round < 300; ++round) {
    std::string text;
    int len = static_cast<int>(rng.pick(0, 120));
    for (int i = 0; i < len; ++i)
      text += alphabet[static_cast<size_t>(rng.pick(0, alphabet.size() - 1))];
    try {
      ProblemFile pf = parse_problem(text);
      CHECK_FALSE(pf.f_section.empty());  // success implies a populated [F]
    } catch (const ParseError&) {
    } catch (const std::invalid_argument&) {
    }
  }
}

TEST_CASE("query expressions share the polynomial grammar") {
  PolyRing r = zz_xy();
  CHECK(parse_poly(r, "0").is_zero());
  CHECK(parse_poly(r, "-x^2*y + 4") == P(r, "0 - x^2*y + 4"));
  CHECK_THROWS_AS(parse_poly(r, "x +"), ParseError);
  CHECK_THROWS_AS(parse_poly(r, "x y"), ParseError);
  CHECK_THROWS_AS(parse_poly(r, ""), ParseError);
}
