#include "staircase/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace staircase {

ParseError::ParseError(const std::string& msg, int line, int col)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                         ": " + msg),
      line_(line),
      col_(col) {}

std::string to_text(const Value& v) {
  if (std::holds_alternative<MonomialIdeal2>(v)) return std::get<MonomialIdeal2>(v).str();
  return std::get<SemigroupIdeal>(v).str();
}

namespace {

enum class Tok { ident, nat, lparen, rparen, comma, semi, eq, caret, star, colon, plus, amp, end };

struct Token {
  Tok kind;
  std::string text;  // ident text
  Exp value = 0;     // nat value
  int line = 1;
  int col = 1;
};

std::vector<Token> lex_tokens(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto make = [&](Tok k) { return Token{k, "", 0, line, col}; };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') { ++line; col = 1; ++i; continue; }
    if (std::isspace(static_cast<unsigned char>(c))) { ++col; ++i; continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Token t = make(Tok::nat);
      Exp v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = checked_add(checked_mul(v, 10), text[i] - '0');
        ++i; ++col;
      }
      t.value = v;
      out.push_back(t);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      Token t = make(Tok::ident);
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        t.text += text[i];
        ++i; ++col;
      }
      out.push_back(t);
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case ',': k = Tok::comma; break;
      case ';': k = Tok::semi; break;
      case '=': k = Tok::eq; break;
      case '^': k = Tok::caret; break;
      case '*': k = Tok::star; break;
      case ':': k = Tok::colon; break;
      case '+': k = Tok::plus; break;
      case '&': k = Tok::amp; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back(make(k));
    ++i; ++col;
  }
  Token t = make(Tok::end);
  out.push_back(t);
  return out;
}

bool is_keyword(const std::string& s) { return s == "lex" || s == "mono" || s == "sgid"; }

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex_tokens(text)) {}

  Value run() {
    bool have_result = false;
    Value result = MonomialIdeal2::zero();
    for (;;) {
      if (peek().kind == Tok::ident && !is_keyword(peek().text) &&
          toks_[pos_ + 1].kind == Tok::eq) {
        const Token name = next();
        next();  // '='
        env_.insert_or_assign(name.text, parse_expr());
        have_result = false;
      } else {
        result = parse_expr();
        have_result = true;
      }
      if (peek().kind == Tok::semi) { next(); continue; }
      expect(Tok::end, "end of input");
      break;
    }
    if (!have_result)
      throw ParseError("program must end with an expression", peek().line, peek().col);
    return result;
  }

 private:
  const Token& peek(size_t ahead = 0) const { return toks_[pos_ + ahead]; }
  const Token& next() { return toks_[pos_++]; }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k)
      throw ParseError(std::string("expected ") + what, peek().line, peek().col);
    return next();
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw ParseError(msg, at.line, at.col);
  }

  Exp expect_nat(const char* what) { return expect(Tok::nat, what).value; }

  // expr := cterm (("+" | "&") cterm)*
  Value parse_expr() {
    Value v = parse_cterm();
    for (;;) {
      if (peek().kind == Tok::plus) {
        const Token op = next();
        v = binary(op, '+', v, parse_cterm());
      } else if (peek().kind == Tok::amp) {
        const Token op = next();
        v = binary(op, '&', v, parse_cterm());
      } else {
        return v;
      }
    }
  }

  // cterm := term (":" term)*
  Value parse_cterm() {
    Value v = parse_term();
    while (peek().kind == Tok::colon) {
      const Token op = next();
      v = binary(op, ':', v, parse_term());
    }
    return v;
  }

  // term := factor ("*" factor)*
  Value parse_term() {
    Value v = parse_factor();
    while (peek().kind == Tok::star) {
      const Token op = next();
      v = binary(op, '*', v, parse_factor());
    }
    return v;
  }

  // factor := atom ("^" NAT)?
  Value parse_factor() {
    Value v = parse_atom();
    if (peek().kind == Tok::caret) {
      const Token op = next();
      const Exp n = expect_nat("exponent");
      try {
        if (std::holds_alternative<MonomialIdeal2>(v))
          return power(std::get<MonomialIdeal2>(v), n);
        return sg_power(std::get<SemigroupIdeal>(v), n);
      } catch (const std::exception& e) {
        fail(op, e.what());
      }
    }
    return v;
  }

  Value parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::lparen) {
      next();
      Value v = parse_expr();
      expect(Tok::rparen, "')'");
      return v;
    }
    if (t.kind == Tok::ident) {
      if (t.text == "lex") return parse_lex();
      if (t.text == "mono") return parse_mono();
      if (t.text == "sgid") return parse_sgid();
      const Token name = next();
      auto it = env_.find(name.text);
      if (it == env_.end()) fail(name, "undefined identifier '" + name.text + "'");
      return it->second;
    }
    fail(t, "expected an ideal expression");
  }

  Value parse_lex() {
    const Token kw = next();
    expect(Tok::lparen, "'('");
    const Exp d = expect_nat("degree");
    expect(Tok::semi, "';'");
    std::vector<Exp> a;
    if (peek().kind == Tok::nat) {
      a.push_back(next().value);
      while (peek().kind == Tok::comma) {
        next();
        a.push_back(expect_nat("number"));
      }
    }
    expect(Tok::rparen, "')'");
    try {
      return from_lex_spec(LexSpec(d, std::move(a)));
    } catch (const std::exception& e) {
      fail(kw, e.what());
    }
  }

  Value parse_mono() {
    const Token kw = next();
    expect(Tok::lparen, "'('");
    std::vector<Monomial> gens;
    gens.push_back(parse_mon());
    while (peek().kind == Tok::comma) {
      next();
      gens.push_back(parse_mon());
    }
    expect(Tok::rparen, "')'");
    try {
      return MonomialIdeal2::from_gens(gens);
    } catch (const std::exception& e) {
      fail(kw, e.what());
    }
  }

  // mon := "1" | ["x" ["^" NAT]] ["y" ["^" NAT]], optional "*" between parts;
  // juxtaposed "xy^7" lexes as one identifier whose "^" binds to the last
  // variable.
  Monomial parse_mon() {
    const Token& t = peek();
    if (t.kind == Tok::nat) {
      if (t.value != 1) fail(t, "a monomial is 1 or a product of powers of x and y");
      next();
      return Monomial(0, 0);
    }
    Exp e[2] = {0, 0};
    bool seen[2] = {false, false};
    bool any = false;
    for (;;) {
      if (peek().kind != Tok::ident) break;
      const Token vars = next();
      int last = -1;
      for (char c : vars.text) {
        const int idx = c == 'x' ? 0 : c == 'y' ? 1 : -1;
        if (idx < 0) fail(vars, "unknown variable '" + vars.text + "' in monomial");
        if (seen[idx]) fail(vars, "repeated variable in monomial");
        if (idx == 0 && seen[1]) fail(vars, "variables must appear as x before y");
        seen[idx] = true;
        e[idx] = 1;
        last = idx;
      }
      any = true;
      if (peek().kind == Tok::caret) {
        next();
        e[last] = expect_nat("exponent");
      }
      if (peek().kind == Tok::star && peek(1).kind == Tok::ident) { next(); continue; }
      if (peek().kind == Tok::ident) continue;
      break;
    }
    if (!any) fail(peek(), "expected a monomial");
    return Monomial(e[0], e[1]);
  }

  Value parse_sgid() {
    const Token kw = next();
    expect(Tok::lparen, "'('");
    std::vector<Exp> sg;
    sg.push_back(expect_nat("semigroup generator"));
    while (peek().kind == Tok::comma) {
      next();
      sg.push_back(expect_nat("semigroup generator"));
    }
    expect(Tok::semi, "';'");
    std::vector<Exp> gens;
    gens.push_back(expect_nat("ideal generator"));
    while (peek().kind == Tok::comma) {
      next();
      gens.push_back(expect_nat("ideal generator"));
    }
    expect(Tok::rparen, "')'");
    try {
      return SemigroupIdeal::make(NumericalSemigroup::make(std::move(sg)), std::move(gens));
    } catch (const std::exception& e) {
      fail(kw, e.what());
    }
  }

  Value binary(const Token& op, char kind, const Value& lhs, const Value& rhs) {
    if (lhs.index() != rhs.index())
      fail(op, "type error: cannot mix polynomial-ring and semigroup-ring ideals");
    try {
      if (std::holds_alternative<MonomialIdeal2>(lhs)) {
        const auto& a = std::get<MonomialIdeal2>(lhs);
        const auto& b = std::get<MonomialIdeal2>(rhs);
        switch (kind) {
          case '*': return multiply(a, b);
          case ':': return colon(a, b);
          case '+': return sum(a, b);
          default: return intersect(a, b);
        }
      }
      const auto& a = std::get<SemigroupIdeal>(lhs);
      const auto& b = std::get<SemigroupIdeal>(rhs);
      switch (kind) {
        case '*': return sg_multiply(a, b);
        case ':': return sg_colon(a, b);
        case '+': return sg_sum(a, b);
        default: return sg_intersect(a, b);
      }
    } catch (const std::exception& e) {
      fail(op, e.what());
    }
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::map<std::string, Value> env_;
};

}  // namespace

Value evaluate(const std::string& text) { return Parser(text).run(); }

}  // namespace staircase
