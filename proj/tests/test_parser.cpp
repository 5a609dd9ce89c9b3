#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <variant>

#include "staircase/ideal.hpp"
#include "staircase/parser.hpp"
#include "staircase/semigroup.hpp"

using namespace staircase;

namespace {

MonomialIdeal2 poly(const std::string& text) {
  return std::get<MonomialIdeal2>(evaluate(text));
}

SemigroupIdeal sg(const std::string& text) {
  return std::get<SemigroupIdeal>(evaluate(text));
}

Monomial xm(Exp a, Exp b) { return Monomial(a, b); }

}  // namespace

TEST_CASE("literals: lex, mono, sgid") {
  CHECK(poly("lex(2; 1,3)") == from_lex_spec(LexSpec(2, {1, 3})));
  CHECK(poly("lex(3;)") == MonomialIdeal2::from_gens({xm(3, 0)}));
  CHECK(poly("mono(x^5, x^3*y^3, x*y^7, y^9)") ==
        MonomialIdeal2::from_gens({xm(5, 0), xm(3, 3), xm(1, 7), xm(0, 9)}));
  CHECK(poly("mono(1)") == MonomialIdeal2::unit());
  CHECK(sg("sgid(6,11,15,31; 6,11,31)").str() == "sgid(6,11,15,31; 6,11,31)");
}

TEST_CASE("monomial spellings") {
  CHECK(poly("mono(x)") == MonomialIdeal2::from_gens({xm(1, 0)}));
  CHECK(poly("mono(y^3)") == MonomialIdeal2::from_gens({xm(0, 3)}));
  CHECK(poly("mono(x^0*y^3)") == MonomialIdeal2::from_gens({xm(0, 3)}));
  CHECK(poly("mono(xy^7)") == MonomialIdeal2::from_gens({xm(1, 7)}));
  CHECK(poly("mono(x^2y^6)") == MonomialIdeal2::from_gens({xm(2, 6)}));
  CHECK(poly("mono(x^2 * y^6)") == MonomialIdeal2::from_gens({xm(2, 6)}));
  CHECK(poly("mono(xy)") == MonomialIdeal2::from_gens({xm(1, 1)}));
  CHECK_THROWS_AS(poly("mono(yx)"), ParseError);
  CHECK_THROWS_AS(poly("mono(xx)"), ParseError);
  CHECK_THROWS_AS(poly("mono(z)"), ParseError);
  CHECK_THROWS_AS(poly("mono(2)"), ParseError);
  CHECK_THROWS_AS(poly("mono(0)"), ParseError);
  CHECK_THROWS_AS(poly("mono()"), ParseError);
}

TEST_CASE("operator precedence: caret, star, colon, then sum/intersection") {
  // x^2 * lex(1;1) squared, then a colon, all grouping as written.
  CHECK(poly("mono(x^2) * lex(1; 1)") ==
        MonomialIdeal2::from_gens({xm(3, 0), xm(2, 1)}));
  CHECK(poly("lex(2; 1,3)^2 : lex(2; 1,3)") ==
        colon(power(from_lex_spec(LexSpec(2, {1, 3})), 2),
              from_lex_spec(LexSpec(2, {1, 3}))));
  // ':' binds tighter than '&': this is (I^2 : I) & I without parentheses.
  auto I = from_lex_spec(LexSpec(2, {1, 3}));
  CHECK(poly("lex(2;1,3)^2 : lex(2;1,3) & lex(2;1,3)") ==
        intersect(colon(power(I, 2), I), I));
  // '*' binds tighter than ':'.
  CHECK(poly("lex(2;1,3) : mono(x) * mono(y)") == colon(I, multiply(
        MonomialIdeal2::from_gens({xm(1, 0)}),
        MonomialIdeal2::from_gens({xm(0, 1)}))));
  // '+' and '&' share a level, left to right.
  CHECK(poly("mono(x^2) + mono(y^2) & mono(y)") ==
        intersect(sum(MonomialIdeal2::from_gens({xm(2, 0)}),
                      MonomialIdeal2::from_gens({xm(0, 2)})),
                  MonomialIdeal2::from_gens({xm(0, 1)})));
  // Colon chains associate left.
  CHECK(poly("lex(4;1,2,3)^2 : mono(x) : mono(y)") ==
        colon(colon(power(from_lex_spec(LexSpec(4, {1, 2, 3})), 2),
                    MonomialIdeal2::from_gens({xm(1, 0)})),
              MonomialIdeal2::from_gens({xm(0, 1)})));
}

TEST_CASE("bindings and statement lists") {
  CHECK(poly("I = lex(2; 1,3); I^2 : I") ==
        colon(power(from_lex_spec(LexSpec(2, {1, 3})), 2),
              from_lex_spec(LexSpec(2, {1, 3}))));
  CHECK(poly("I = lex(2;1,3); J = I^2; (J : I) & I") ==
        from_lex_spec(LexSpec(2, {1, 3})));
  // Rebinding replaces the old value.
  CHECK(poly("I = mono(x); I = mono(y); I") ==
        MonomialIdeal2::from_gens({xm(0, 1)}));
  // Semigroup pipelines work the same way.
  auto S = NumericalSemigroup::make({6, 11, 15, 31});
  auto J = SemigroupIdeal::make(S, {6});
  auto I3 = SemigroupIdeal::make(S, {6, 11, 31});
  CHECK(sg("I = sgid(6,11,15,31; 6,11,31); J = sgid(6,11,15,31; 6); J * I") ==
        sg_multiply(J, I3));
}

TEST_CASE("programs must end with an expression") {
  try {
    evaluate("I = lex(2; 1,3)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("program must end with an expression") !=
          std::string::npos);
  }
  CHECK_THROWS_AS(evaluate("lex(2;1,3);"), ParseError);
  CHECK_THROWS_AS(evaluate(""), ParseError);
}

TEST_CASE("parse errors carry line and column") {
  try {
    evaluate("I = lex(2; 1,3);\nJ = foo");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 5);
    CHECK(std::string(e.what()) == "line 2, col 5: undefined identifier 'foo'");
  }
  // Statements are separated by ';' — a bare newline is not a separator.
  try {
    evaluate("I = lex(2; 1,3)\nI");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("expected end of input") !=
          std::string::npos);
  }
  try {
    evaluate("lex(2; 3,1)");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 1);
    CHECK(std::string(e.what()).find(
              "a-sequence must be strictly increasing") != std::string::npos);
  }
  CHECK_THROWS_WITH(evaluate("@"), "line 1, col 1: unexpected character '@'");
  CHECK_THROWS_AS(evaluate("lex(2 1,3)"), ParseError);   // missing ';'
  CHECK_THROWS_AS(evaluate("mono(x^)"), ParseError);     // missing exponent
  CHECK_THROWS_AS(evaluate("lex(2;1,3) +"), ParseError); // dangling operator
  CHECK_THROWS_AS(evaluate("lex = mono(x); lex"), ParseError);  // keyword name
}

TEST_CASE("polynomial and semigroup ideals cannot mix") {
  CHECK_THROWS_WITH(
      evaluate("lex(2; 1,3) + sgid(2,3; 2)"),
      "line 1, col 13: type error: cannot mix polynomial-ring and "
      "semigroup-ring ideals");
}

TEST_CASE("library errors surface as positioned parse errors") {
  // Colon by the zero ideal cannot be expressed (no zero literal), but
  // domain errors from evaluation are wrapped with the operator position.
  CHECK_THROWS_AS(evaluate("sgid(6,11,15,31; 6) : sgid(2,3; 2)"), ParseError);
  CHECK_THROWS_WITH(evaluate("sgid(4,6; 4)"),
                    "line 1, col 1: semigroup generators must have gcd 1");
  CHECK_THROWS_WITH(evaluate("sgid(6,11,15,31; 16)"),
                    "line 1, col 1: ideal generator not in semigroup");
}

TEST_CASE("printed values parse back to themselves") {
  const char* programs[] = {
      "lex(2; 1,3)",
      "mono(x^5, x^3*y^3, x*y^7, y^9)",
      "mono(1)",
      "lex(2;1,3)^3",
      "sgid(6,11,15,31; 6,11,31)",
      "sgid(6,11,15,31; 6) * sgid(6,11,15,31; 6,11,31)",
  };
  for (const char* p : programs) {
    Value v = evaluate(p);
    Value w = evaluate(to_text(v));
    REQUIRE(v.index() == w.index());
    if (std::holds_alternative<MonomialIdeal2>(v))
      CHECK(std::get<MonomialIdeal2>(v) == std::get<MonomialIdeal2>(w));
    else
      CHECK(std::get<SemigroupIdeal>(v) == std::get<SemigroupIdeal>(w));
  }
  CHECK(to_text(evaluate("lex(2; 1,3)")) == "mono(x^2, x*y, y^3)");
  CHECK(to_text(evaluate("sgid(6,11,15,31; 6)")) == "sgid(6,11,15,31; 6)");
}
