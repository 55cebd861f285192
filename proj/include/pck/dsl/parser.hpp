#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "pck/dsl/ast.hpp"
#include "pck/dsl/lexer.hpp"

namespace pck::dsl {

/// Recursive-descent parser for session scripts.
///
///   statement  ::= field | ring | poisson | ideal | map | moment | quotient | lift
///                | basis | command
///   field      ::= "field" "sqrt" "(" INT ")" ";"
///   ring       ::= "ring" NAME "(" NAME {"," NAME} ")" ["relations" "{" {expr ";"} "}"]
///                  ["order" ("lex" | "grevlex")] ";"   (";" optional after a relations block)
///   poisson    ::= "poisson" NAME "on" NAME "{" {"{" NAME "," NAME "}" "=" expr ";"} "}"
///   ideal      ::= "ideal" NAME "in" NAME "{" {expr ";"} "}"
///   map        ::= "map" NAME ":" NAME "->" NAME "{" {NAME "->" expr ";"} "}"
///   moment     ::= "moment" NAME "for" NAME "{" {NAME "=" expr ";"}
///                  ["structure" "{" {"[" NAME "," NAME "]" "=" expr ";"} "}"] "}"
///   quotient   ::= "quotient" NAME "=" NAME "/" NAME ";"
///   lift       ::= "lift" NAME "=" NAME "via" NAME ";"
///   basis      ::= "basis" NAME "=" ("normalizer" NAME NAME | "invariants" NAME) "degree" INT ";"
///   command    ::= "bracket" NAME "(" expr "," expr ")" ";"
///                | "check" CHECK ... ";"
///                | "hamiltonian" NAME "(" expr ")" ";"
///                | "reduce" ("sw" | "acg" | "coisotropic") ... "degree" INT {emission} ";"
///                | "sample" NAME "box" "(" side {"," side} ")" "resolution" INT ["tol" expr]
///                  {emission} ";"
///                | "emit" ("json" | "text") STRING NAME ";"
///                | "print" NAME ";"
///                | "selftest" NAME "count" INT ";"
///   emission   ::= "emit" FORMAT STRING
///   expr       ::= term {("+" | "-") term}
///   term       ::= unary {("*" | "/") unary}
///   unary      ::= "-" unary | power
///   power      ::= primary ["^" INT]
///   primary    ::= NUMBER | NAME | "sqrt" "(" INT ")" | "(" expr ")"
class Parser {
 public:
  static constexpr std::size_t max_depth = 200;
  static constexpr unsigned long max_exponent = 255;
  static constexpr unsigned long max_degree = 32;
  static constexpr unsigned long max_resolution = 100000;
  static constexpr unsigned long max_count = 1000000;
  static constexpr unsigned long max_radicand = 1000000;

  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Script parse_script() {
    Script s;
    while (!at(Tok::end)) s.statements.push_back(statement());
    return s;
  }

  Statement statement() {
    const Token& t = peek();
    if (t.kind != Tok::ident) fail("expected a statement keyword, found " + found(t));
    const std::string& k = t.text;
    if (k == "field") return field();
    if (k == "ring") return ring();
    if (k == "poisson") return poisson();
    if (k == "ideal") return ideal();
    if (k == "map") return map();
    if (k == "moment") return moment();
    if (k == "quotient") return quotient();
    if (k == "lift") return lift();
    if (k == "basis") return basis();
    if (k == "bracket") return bracket();
    if (k == "check") return check();
    if (k == "hamiltonian") return hamiltonian();
    if (k == "reduce") return reduce();
    if (k == "sample") return sample();
    if (k == "emit") return emit();
    if (k == "print") return print();
    if (k == "selftest") return selftest();
    fail("unknown statement '" + k + "'");
  }

  ExprPtr expression() { return expr(); }

  void expect_end() {
    if (!at(Tok::end)) fail("unexpected " + found(peek()) + " after the expression");
  }

 private:
  // Token access.

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return at(Tok::ident) && peek().text == w; }
  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  SourcePos here() const { return peek().span.begin; }
  SourcePos last_end() const { return pos_ == 0 ? SourcePos{} : toks_[pos_ - 1].span.end; }

  static std::string found(const Token& t) {
    switch (t.kind) {
      case Tok::ident: return "'" + t.text + "'";
      case Tok::number: return "number " + t.text;
      case Tok::string: return "string";
      default: return describe(t.kind);
    }
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, here()); }

  const Token& expect(Tok k, const char* context) {
    if (!at(k)) fail(std::string("expected ") + describe(k) + " " + context + ", found " + found(peek()));
    return take();
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("expected '" + std::string(w) + "', found " + found(peek()));
    take();
  }

  Name name(const char* what) {
    if (!at(Tok::ident)) fail(std::string("expected ") + what + ", found " + found(peek()));
    const Token& t = take();
    return {t.text, t.span};
  }

  /// Word made of identifiers joined by adjacent '-' tokens, e.g. poisson-ideal.
  Name hyphenated(const char* what) {
    Name n = name(what);
    while (at(Tok::minus) && adjacent(n.span.end, peek().span.begin) && peek(1).kind == Tok::ident &&
           adjacent(peek().span.end, peek(1).span.begin)) {
      take();
      const Token& part = take();
      n.text += "-" + part.text;
      n.span.end = part.span.end;
    }
    return n;
  }

  static bool adjacent(SourcePos a, SourcePos b) { return a.line == b.line && a.column == b.column; }

  unsigned long integer(const char* what, unsigned long max) {
    if (!at(Tok::number)) fail(std::string("expected ") + what + ", found " + found(peek()));
    const Token& t = peek();
    if (t.value.get_den() != 1 || t.value < 0) fail(std::string(what) + " must be a non-negative integer");
    if (t.value > max) fail(std::string(what) + " is larger than " + std::to_string(max));
    take();
    return t.value.get_num().get_ui();
  }

  std::string string_literal(const char* what) { return expect(Tok::string, what).text; }

  Span finish(SourcePos begin) const { return {begin, last_end()}; }

  // Expressions.

  static ExprPtr binary(ExprKind k, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->span = {l->span.begin, r->span.end};
    e->lhs = std::move(l);
    e->rhs = std::move(r);
    return e;
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > max_depth) p.fail("expression nests too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  ExprPtr expr() {
    DepthGuard guard(*this);
    ExprPtr e = term();
    while (at(Tok::plus) || at(Tok::minus)) {
      const ExprKind k = take().kind == Tok::plus ? ExprKind::add : ExprKind::sub;
      e = binary(k, e, term());
    }
    return e;
  }

  ExprPtr term() {
    ExprPtr e = unary();
    while (at(Tok::star) || at(Tok::slash)) {
      const ExprKind k = take().kind == Tok::star ? ExprKind::mul : ExprKind::div;
      e = binary(k, e, unary());
    }
    return e;
  }

  ExprPtr unary() {
    DepthGuard guard(*this);
    if (at(Tok::minus)) {
      const SourcePos begin = take().span.begin;
      ExprPtr operand = unary();
      auto e = std::make_shared<Expr>();
      e->kind = ExprKind::neg;
      e->span = {begin, operand->span.end};
      e->lhs = std::move(operand);
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!at(Tok::caret)) return base;
    take();
    const unsigned long exponent = integer("exponent", max_exponent);
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::pow;
    e->span = {base->span.begin, last_end()};
    e->lhs = std::move(base);
    e->integer = exponent;
    return e;
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      take();
      auto e = std::make_shared<Expr>();
      e->kind = ExprKind::number;
      e->number = t.value;
      e->span = t.span;
      return e;
    }
    if (t.kind == Tok::ident && t.text == "sqrt" && peek(1).kind == Tok::lparen) {
      const SourcePos begin = take().span.begin;
      take();
      const unsigned long d = integer("radicand", max_radicand);
      expect(Tok::rparen, "after the radicand");
      auto e = std::make_shared<Expr>();
      e->kind = ExprKind::sqrt;
      e->integer = d;
      e->span = finish(begin);
      return e;
    }
    if (t.kind == Tok::ident) {
      take();
      auto e = std::make_shared<Expr>();
      e->kind = ExprKind::name;
      e->name = t.text;
      e->span = t.span;
      return e;
    }
    if (t.kind == Tok::lparen) {
      take();
      ExprPtr inner = expr();
      expect(Tok::rparen, "to close the parenthesis");
      return inner;
    }
    fail("expected an expression, found " + found(t));
  }

  std::vector<ExprPtr> expr_tuple(const char* context) {
    expect(Tok::lparen, context);
    std::vector<ExprPtr> out{expr()};
    while (at(Tok::comma)) {
      take();
      out.push_back(expr());
    }
    expect(Tok::rparen, context);
    return out;
  }

  /// `{ expr; expr; ... }`
  std::vector<ExprPtr> expr_block(const char* context) {
    expect(Tok::lbrace, context);
    std::vector<ExprPtr> out;
    while (!at(Tok::rbrace)) {
      out.push_back(expr());
      expect(Tok::semicolon, "after the expression");
    }
    take();
    return out;
  }

  // Statements.

  FieldDecl field() {
    FieldDecl d;
    const SourcePos begin = take().span.begin;
    expect_word("sqrt");
    expect(Tok::lparen, "after 'sqrt'");
    d.radicand = integer("radicand", max_radicand);
    expect(Tok::rparen, "after the radicand");
    expect(Tok::semicolon, "to end the field declaration");
    d.span = finish(begin);
    return d;
  }

  RingDecl ring() {
    RingDecl d;
    const SourcePos begin = take().span.begin;
    d.name = name("a ring name");
    expect(Tok::lparen, "before the variable list");
    d.variables.push_back(name("a variable name"));
    while (at(Tok::comma)) {
      take();
      d.variables.push_back(name("a variable name"));
    }
    expect(Tok::rparen, "after the variable list");
    if (at_word("relations")) {
      take();
      d.has_relations = true;
      d.relations = expr_block("to open the relations block");
    }
    if (at_word("order")) {
      take();
      if (!at_word("lex") && !at_word("grevlex")) fail("expected 'lex' or 'grevlex', found " + found(peek()));
      d.order = name("a monomial order");
    }
    if (!d.has_relations || d.order || at(Tok::semicolon)) expect(Tok::semicolon, "to end the ring declaration");
    d.span = finish(begin);
    return d;
  }

  PoissonDecl poisson() {
    PoissonDecl d;
    const SourcePos begin = take().span.begin;
    d.name = name("a structure name");
    expect_word("on");
    d.ring = name("a ring name");
    expect(Tok::lbrace, "to open the bracket list");
    while (!at(Tok::rbrace)) {
      PairEntry e;
      expect(Tok::lbrace, "to open a bracket pair");
      e.left = name("a variable name");
      expect(Tok::comma, "between the bracket arguments");
      e.right = name("a variable name");
      expect(Tok::rbrace, "to close a bracket pair");
      expect(Tok::equals, "after the bracket pair");
      e.value = expr();
      expect(Tok::semicolon, "after the bracket value");
      d.entries.push_back(std::move(e));
    }
    take();
    d.span = finish(begin);
    return d;
  }

  IdealDecl ideal() {
    IdealDecl d;
    const SourcePos begin = take().span.begin;
    d.name = name("an ideal name");
    expect_word("in");
    d.ring = name("a ring name");
    d.generators = expr_block("to open the generator list");
    d.span = finish(begin);
    return d;
  }

  MapDecl map() {
    MapDecl d;
    const SourcePos begin = take().span.begin;
    d.name = name("a map name");
    expect(Tok::colon, "after the map name");
    d.source = name("a source ring");
    expect(Tok::arrow, "between source and target");
    d.target = name("a target ring");
    expect(Tok::lbrace, "to open the image list");
    while (!at(Tok::rbrace)) {
      Assignment a;
      a.target = name("a source variable");
      expect(Tok::arrow, "after the source variable");
      a.value = expr();
      expect(Tok::semicolon, "after the image");
      d.images.push_back(std::move(a));
    }
    take();
    d.span = finish(begin);
    return d;
  }

  MomentDecl moment() {
    MomentDecl d;
    const SourcePos begin = take().span.begin;
    d.name = name("a moment name");
    expect_word("for");
    d.structure = name("a Poisson structure");
    expect(Tok::lbrace, "to open the moment body");
    while (!at(Tok::rbrace)) {
      if (at_word("structure") && peek(1).kind == Tok::lbrace) {
        if (d.has_structure) fail("moment has a second structure block");
        take();
        take();
        d.has_structure = true;
        while (!at(Tok::rbrace)) {
          PairEntry e;
          expect(Tok::lbracket, "to open a Lie bracket");
          e.left = name("a component name");
          expect(Tok::comma, "between the Lie bracket arguments");
          e.right = name("a component name");
          expect(Tok::rbracket, "to close a Lie bracket");
          expect(Tok::equals, "after the Lie bracket");
          e.value = expr();
          expect(Tok::semicolon, "after the Lie bracket value");
          d.brackets.push_back(std::move(e));
        }
        take();
        continue;
      }
      if (d.has_structure) fail("moment components must precede the structure block");
      Assignment a;
      a.target = name("a component name");
      expect(Tok::equals, "after the component name");
      a.value = expr();
      expect(Tok::semicolon, "after the component");
      d.components.push_back(std::move(a));
    }
    take();
    d.span = finish(begin);
    return d;
  }

  QuotientDecl quotient() {
    QuotientDecl d;
    const SourcePos begin = take().span.begin;
    d.name = name("a structure name");
    expect(Tok::equals, "after the quotient name");
    d.structure = name("a Poisson structure");
    expect(Tok::slash, "between structure and ideal");
    d.ideal = name("an ideal");
    expect(Tok::semicolon, "to end the quotient declaration");
    d.span = finish(begin);
    return d;
  }

  LiftDecl lift() {
    LiftDecl d;
    const SourcePos begin = take().span.begin;
    d.name = name("a structure name");
    expect(Tok::equals, "after the lift name");
    d.structure = name("a Poisson structure");
    expect_word("via");
    d.map = name("a ring map");
    expect(Tok::semicolon, "to end the lift declaration");
    d.span = finish(begin);
    return d;
  }

  BasisDecl basis() {
    BasisDecl d;
    const SourcePos begin = take().span.begin;
    d.name = name("a basis name");
    expect(Tok::equals, "after the basis name");
    if (at_word("normalizer")) {
      d.kind = name("a basis kind");
      d.subjects.push_back(name("a Poisson structure"));
      d.subjects.push_back(name("an ideal"));
    } else if (at_word("invariants")) {
      d.kind = name("a basis kind");
      d.subjects.push_back(name("moment data"));
    } else {
      fail("expected 'normalizer' or 'invariants', found " + found(peek()));
    }
    expect_word("degree");
    d.degree = integer("degree bound", max_degree);
    expect(Tok::semicolon, "to end the basis declaration");
    d.span = finish(begin);
    return d;
  }

  BracketCmd bracket() {
    BracketCmd c;
    const SourcePos begin = take().span.begin;
    c.structure = name("a Poisson structure");
    expect(Tok::lparen, "before the bracket arguments");
    c.left = expr();
    expect(Tok::comma, "between the bracket arguments");
    c.right = expr();
    expect(Tok::rparen, "after the bracket arguments");
    expect(Tok::semicolon, "to end the command");
    c.span = finish(begin);
    return c;
  }

  CheckCmd check() {
    CheckCmd c;
    const SourcePos begin = take().span.begin;
    c.what = hyphenated("a check kind");
    const std::string& w = c.what.text;
    std::size_t subjects = 0;
    bool argument = false, point = false, degree = false, coords = false;
    if (w == "jacobi") {
      subjects = 1;
    } else if (w == "poisson-ideal") {
      subjects = 2;
    } else if (w == "normalizer-member") {
      subjects = 2, argument = true;
    } else if (w == "casimir") {
      subjects = 1, argument = true;
    } else if (w == "poisson-dirac") {
      subjects = 2, degree = true;
    } else if (w == "point") {
      subjects = 1, coords = true;
    } else if (w == "germ") {
      subjects = 1, argument = true, point = true;
    } else {
      throw ParseError("unknown check '" + w + "'", c.what.span.begin);
    }
    for (std::size_t i = 0; i < subjects; ++i) c.subjects.push_back(name("a name"));
    if (argument) {
      expect(Tok::lparen, "before the argument");
      c.arguments.push_back(expr());
      expect(Tok::rparen, "after the argument");
    }
    if (coords) c.arguments = expr_tuple("around the coordinates");
    if (point) {
      expect_word("at");
      c.has_point = true;
      c.point = expr_tuple("around the point");
    }
    if (degree) {
      expect_word("degree");
      c.degree = integer("degree bound", max_degree);
    }
    expect(Tok::semicolon, "to end the command");
    c.span = finish(begin);
    return c;
  }

  HamiltonianCmd hamiltonian() {
    HamiltonianCmd c;
    const SourcePos begin = take().span.begin;
    c.structure = name("a Poisson structure");
    expect(Tok::lparen, "before the Hamiltonian");
    c.function = expr();
    expect(Tok::rparen, "after the Hamiltonian");
    expect(Tok::semicolon, "to end the command");
    c.span = finish(begin);
    return c;
  }

  void emissions(std::vector<Emission>& out, std::initializer_list<std::string_view> formats) {
    while (at_word("emit")) {
      Emission e;
      const SourcePos begin = take().span.begin;
      e.format = format(formats);
      e.path = string_literal("for the output path");
      e.span = finish(begin);
      out.push_back(std::move(e));
    }
  }

  Name format(std::initializer_list<std::string_view> formats) {
    if (at(Tok::ident))
      for (auto f : formats)
        if (peek().text == f) return name("a format");
    std::string list;
    for (auto f : formats) list += (list.empty() ? "'" : " or '") + std::string(f) + "'";
    fail("expected " + list + ", found " + found(peek()));
  }

  ReduceCmd reduce() {
    ReduceCmd c;
    const SourcePos begin = take().span.begin;
    if (!at_word("sw") && !at_word("acg") && !at_word("coisotropic"))
      fail("expected 'sw', 'acg' or 'coisotropic', found " + found(peek()));
    c.kind = name("a reduction kind");
    c.subjects.push_back(name("a name"));
    if (c.kind.text == "coisotropic" || (c.kind.text == "sw" && !at_word("degree")))
      c.subjects.push_back(name("an ideal"));
    if (c.kind.text == "acg") {
      expect_word("at");
      c.has_level = true;
      c.level = expr_tuple("around the level");
    }
    expect_word("degree");
    c.degree = integer("degree bound", max_degree);
    emissions(c.emissions, {"json"});
    expect(Tok::semicolon, "to end the command");
    c.span = finish(begin);
    return c;
  }

  SampleCmd sample() {
    SampleCmd c;
    const SourcePos begin = take().span.begin;
    c.ring = name("a ring name");
    expect_word("box");
    expect(Tok::lparen, "before the box");
    do {
      if (!c.box.empty()) take();
      BoxSide side;
      expect(Tok::lbracket, "to open an interval");
      side.lo = expr();
      expect(Tok::comma, "inside an interval");
      side.hi = expr();
      expect(Tok::rbracket, "to close an interval");
      c.box.push_back(std::move(side));
    } while (at(Tok::comma));
    expect(Tok::rparen, "after the box");
    expect_word("resolution");
    c.resolution = integer("resolution", max_resolution);
    if (at_word("tol")) {
      take();
      c.tolerance = expr();
    }
    emissions(c.emissions, {"csv", "json"});
    expect(Tok::semicolon, "to end the command");
    c.span = finish(begin);
    return c;
  }

  EmitCmd emit() {
    EmitCmd c;
    const SourcePos begin = here();
    take();
    c.emission.format = format({"json", "text"});
    c.emission.path = string_literal("for the output path");
    c.emission.span = finish(begin);
    c.subject = name("a name to emit");
    expect(Tok::semicolon, "to end the command");
    c.span = finish(begin);
    return c;
  }

  PrintCmd print() {
    PrintCmd c;
    const SourcePos begin = take().span.begin;
    c.subject = name("a name to print");
    expect(Tok::semicolon, "to end the command");
    c.span = finish(begin);
    return c;
  }

  SelftestCmd selftest() {
    SelftestCmd c;
    const SourcePos begin = take().span.begin;
    c.structure = name("a Poisson structure");
    expect_word("count");
    c.count = integer("count", max_count);
    expect(Tok::semicolon, "to end the command");
    c.span = finish(begin);
    return c;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

inline Script parse(std::string_view text) { return Parser(lex(text)).parse_script(); }

inline ExprPtr parse_expression(std::string_view text) {
  Parser p(lex(text));
  auto e = p.expression();
  p.expect_end();
  return e;
}

}  // namespace pck::dsl
