#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>

#include "staircase/ideal.hpp"
#include "staircase/semigroup.hpp"

namespace staircase {

// Error with a 1-based source location, for both syntax and evaluation
// problems (undefined names, ring mixing, bad literals).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// An evaluated expression: an ideal in K[x,y] or in a semigroup ring.
using Value = std::variant<MonomialIdeal2, SemigroupIdeal>;

// Canonical text form of a value; parses back to an equal value (round-trip)
// except for the zero ideal, which has display form "mono(0)".
std::string to_text(const Value& v);

// Parses and evaluates a program: statements separated by ";", each either a
// binding `NAME = expr` or an expression; the last statement must be an
// expression and its value is the result.
//
// Grammar (precedence high to low: ^, *, :, then left-associative + and &):
//   stmt    := IDENT "=" expr | expr
//   expr    := cterm (("+" | "&") cterm)*
//   cterm   := term (":" term)*
//   term    := factor ("*" factor)*
//   factor  := atom ("^" NAT)?
//   atom    := IDENT | literal | "(" expr ")"
//   literal := "lex" "(" NAT ";" [NAT ("," NAT)*] ")"
//            | "mono" "(" mon ("," mon)* ")"
//            | "sgid" "(" NAT ("," NAT)* ";" NAT ("," NAT)* ")"
//   mon     := "1" | ["x" ["^" NAT]] ["y" ["^" NAT]]  (optional "*" between)
Value evaluate(const std::string& text);

}  // namespace staircase
