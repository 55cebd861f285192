#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "pck/error.hpp"

namespace pck::dsl {

enum class Tok {
  ident,
  number,
  string,
  lparen,
  rparen,
  lbrace,
  rbrace,
  lbracket,
  rbracket,
  comma,
  semicolon,
  colon,
  equals,
  plus,
  minus,
  star,
  slash,
  caret,
  arrow,
  end,
};

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "name";
    case Tok::number: return "number";
    case Tok::string: return "string";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::lbrace: return "'{'";
    case Tok::rbrace: return "'}'";
    case Tok::lbracket: return "'['";
    case Tok::rbracket: return "']'";
    case Tok::comma: return "','";
    case Tok::semicolon: return "';'";
    case Tok::colon: return "':'";
    case Tok::equals: return "'='";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::slash: return "'/'";
    case Tok::caret: return "'^'";
    case Tok::arrow: return "'->'";
    case Tok::end: return "end of input";
  }
  return "token";
}

/// Half-open source range [begin, end).
struct Span {
  SourcePos begin;
  SourcePos end;
};

struct Token {
  Tok kind = Tok::end;
  std::string text;   // identifier name, literal spelling, or decoded string
  mpq_class value;    // numbers only
  Span span;
};

inline constexpr long max_decimal_exponent = 1000;

/// Splits script text into tokens. `#` starts a comment that runs to the end
/// of the line. Numbers are exact: `12`, `0.25`, `3e-2`, `1.5E+3`.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      Token t = next();
      const bool done = t.kind == Tok::end;
      out.push_back(std::move(t));
      if (done) return out;
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return i_ + ahead < text_.size() ? text_[i_ + ahead] : '\0';
  }
  bool at_end() const { return i_ >= text_.size(); }

  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_blank() {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  Token make(Tok kind, SourcePos begin, std::string text) const {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.span = {begin, pos_};
    return t;
  }

  Token next() {
    const SourcePos begin = pos_;
    if (at_end()) return make(Tok::end, begin, "");
    const char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier(begin);
    if (std::isdigit(static_cast<unsigned char>(c))) return number(begin);
    if (c == '"') return string_literal(begin);
    auto single = [&](Tok k) {
      advance();
      return make(k, begin, std::string(1, c));
    };
    switch (c) {
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      case '{': return single(Tok::lbrace);
      case '}': return single(Tok::rbrace);
      case '[': return single(Tok::lbracket);
      case ']': return single(Tok::rbracket);
      case ',': return single(Tok::comma);
      case ';': return single(Tok::semicolon);
      case ':': return single(Tok::colon);
      case '=': return single(Tok::equals);
      case '+': return single(Tok::plus);
      case '*': return single(Tok::star);
      case '/': return single(Tok::slash);
      case '^': return single(Tok::caret);
      case '-':
        if (peek(1) == '>') {
          advance();
          advance();
          return make(Tok::arrow, begin, "->");
        }
        return single(Tok::minus);
      default: break;
    }
    const auto byte = static_cast<unsigned char>(c);
    if (byte >= 0x80) throw ParseError("unexpected non-ASCII character", begin);
    if (std::isprint(byte)) throw ParseError(std::string("unexpected character '") + c + "'", begin);
    throw ParseError("unexpected control character", begin);
  }

  Token identifier(SourcePos begin) {
    std::string s;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      s += peek();
      advance();
    }
    return make(Tok::ident, begin, std::move(s));
  }

  Token number(SourcePos begin) {
    std::string spelling, digits;
    long scale = 0;  // value = digits * 10^scale
    auto take_digits = [&](std::string& into) {
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        into += peek();
        spelling += peek();
        advance();
      }
    };
    take_digits(digits);
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      spelling += '.';
      advance();
      std::string frac;
      take_digits(frac);
      digits += frac;
      scale -= static_cast<long>(frac.size());
    } else if (peek() == '.') {
      throw ParseError("malformed number: expected digits after '.'", pos_);
    }
    if (peek() == 'e' || peek() == 'E') {
      spelling += peek();
      advance();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        spelling += peek();
        advance();
      }
      std::string exp;
      const SourcePos exp_pos = pos_;
      take_digits(exp);
      if (exp.empty()) throw ParseError("malformed number: missing exponent digits", exp_pos);
      if (exp.size() > 6 || std::stol(exp) > max_decimal_exponent)
        throw ParseError("number exponent is too large", begin);
      scale += negative ? -std::stol(exp) : std::stol(exp);
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')
      throw ParseError("malformed number: letter directly after digits", pos_);
    if (digits.size() > 4000) throw ParseError("number literal is too long", begin);

    Token t = make(Tok::number, begin, std::move(spelling));
    mpz_class mantissa(digits, 10);
    mpz_class ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    t.value = scale < 0 ? mpq_class(mantissa, ten_power) : mpq_class(mantissa * ten_power);
    t.value.canonicalize();
    return t;
  }

  Token string_literal(SourcePos begin) {
    advance();  // opening quote
    std::string s;
    for (;;) {
      if (at_end() || peek() == '\n') throw ParseError("unterminated string", begin);
      const char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        const SourcePos esc = pos_;
        advance();
        if (at_end()) throw ParseError("unterminated string", begin);
        switch (peek()) {
          case '"': s += '"'; break;
          case '\\': s += '\\'; break;
          case 'n': s += '\n'; break;
          case 't': s += '\t'; break;
          default: throw ParseError("unknown escape in string", esc);
        }
        advance();
        continue;
      }
      if (static_cast<unsigned char>(c) < 0x20) throw ParseError("control character in string", pos_);
      s += c;
      advance();
    }
    return make(Tok::string, begin, std::move(s));
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

inline std::vector<Token> lex(std::string_view text) { return Lexer(text).run(); }

}  // namespace pck::dsl
