#include "detrad/parser.hpp"

#include <cctype>
#include <vector>

#include "detrad/errors.hpp"

namespace detrad {

VarResolver declared_vars(const VarPool& pool) {
  return [&pool](const std::string& name) {
    auto v = pool.find(name);
    if (!v) throw ParseError("unknown variable '" + name + "'");
    return *v;
  };
}

VarResolver interning_vars(VarPool& pool) {
  return [&pool](const std::string& name) { return pool.intern(name); };
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '/': k = Tok::Slash; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) +
                         "' at position " + std::to_string(i));
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, CoeffField field, const VarResolver& resolve)
      : toks_(lex(text)), field_(field), resolve_(resolve) {}

  Polynomial run() {
    Polynomial p = expr();
    expect(Tok::End, "end of input");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k)
      throw ParseError(std::string("expected ") + what + " at position " +
                       std::to_string(peek().pos));
    if (k != Tok::End) take();
  }

  Polynomial expr() {
    bool neg = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus)
      neg = take().kind == Tok::Minus;
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = take().kind == Tok::Minus;
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  bool starts_factor() const {
    Tok k = peek().kind;
    return k == Tok::Number || k == Tok::Ident || k == Tok::LParen;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (peek().kind == Tok::Star) {
        take();
        acc = acc * factor();
      } else if (starts_factor()) {  // implicit multiplication
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek().kind == Tok::Caret) {
      take();
      if (peek().kind != Tok::Number)
        throw ParseError("expected integer exponent at position " +
                         std::to_string(peek().pos));
      mpz_class e(take().text);
      if (e < 0 || e > 1000000)
        throw ParseError("exponent out of range");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Polynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        mpz_class num(take().text);
        if (peek().kind == Tok::Slash) {
          take();
          if (peek().kind != Tok::Number)
            throw ParseError("expected denominator after '/' at position " +
                             std::to_string(peek().pos));
          mpz_class den(take().text);
          if (den == 0) throw ParseError("zero denominator");
          return Polynomial::constant(field_, mpq_class(num, den));
        }
        return Polynomial::constant(field_, mpq_class(num));
      }
      case Tok::Ident:
        return Polynomial::variable(field_, resolve_(take().text));
      case Tok::LParen: {
        take();
        Polynomial inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError("expected a number, variable or '(' at position " +
                         std::to_string(t.pos));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  CoeffField field_;
  const VarResolver& resolve_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, CoeffField field,
                            const VarResolver& resolve) {
  return Parser(text, field, resolve).run();
}

}  // namespace detrad
