#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pck/dsl/ast.hpp"
#include "pck/scalar.hpp"

namespace pck::dsl {

enum class BindingKind { ring, poisson, ideal, map, moment, basis };

inline const char* describe(BindingKind k) {
  switch (k) {
    case BindingKind::ring: return "a ring";
    case BindingKind::poisson: return "a Poisson structure";
    case BindingKind::ideal: return "an ideal";
    case BindingKind::map: return "a ring map";
    case BindingKind::moment: return "moment data";
    case BindingKind::basis: return "a basis";
  }
  return "a binding";
}

inline bool is_reserved(const std::string& word) {
  static const std::set<std::string> words{
      "field", "ring",     "poisson", "ideal",      "map",        "moment", "quotient", "lift",
      "basis", "bracket",  "check",   "hamiltonian", "reduce",    "sample", "emit",     "print",
      "selftest", "relations", "order", "on",        "in",        "for",    "structure", "at",
      "degree", "box",     "resolution", "tol",      "via",       "count",  "sqrt",     "normalizer",
      "invariants"};
  return words.count(word) > 0;
}

/// Static checks run before execution: names resolve to earlier bindings of
/// the right kind, bindings are unique, expressions only mention variables of
/// their ring, and sqrt(d) matches the declared field. Stateful so a REPL can
/// resolve one statement at a time.
class Resolver {
 public:
  struct Symbol {
    BindingKind kind;
    std::vector<std::string> variables;   // ring variables (ring, poisson, ideal, moment, map source)
    std::vector<std::string> target_variables;  // map target
    std::vector<std::string> components;  // moment components
  };

  void resolve(const Script& s) {
    for (const auto& st : s.statements) resolve(st);
  }

  void resolve(const Statement& s) {
    std::visit([this](const auto& node) { check(node); }, s);
  }

  std::optional<unsigned long> field() const { return field_; }
  const std::map<std::string, Symbol>& symbols() const { return symbols_; }

 private:
  [[noreturn]] static void fail(const std::string& message, const Span& span) {
    throw ParseError(message, span.begin);
  }

  void bind(const Name& n, Symbol s) {
    if (is_reserved(n.text)) fail("'" + n.text + "' is a reserved word", n.span);
    if (symbols_.count(n.text)) fail("'" + n.text + "' is already bound", n.span);
    symbols_.emplace(n.text, std::move(s));
  }

  const Symbol& lookup(const Name& n) const {
    auto it = symbols_.find(n.text);
    if (it == symbols_.end()) fail("unresolved name '" + n.text + "'", n.span);
    return it->second;
  }

  const Symbol& lookup(const Name& n, BindingKind k) const {
    const Symbol& s = lookup(n);
    if (s.kind != k)
      fail("expected " + std::string(describe(k)) + ", but '" + n.text + "' is " + describe(s.kind), n.span);
    return s;
  }

  /// Ring or Poisson structure: anything that owns variables.
  const Symbol& lookup_ring(const Name& n) const {
    const Symbol& s = lookup(n);
    if (s.kind != BindingKind::ring && s.kind != BindingKind::poisson)
      fail("expected a ring, but '" + n.text + "' is " + describe(s.kind), n.span);
    return s;
  }

  void expr(const ExprPtr& e, const std::vector<std::string>& names) const {
    switch (e->kind) {
      case ExprKind::number: return;
      case ExprKind::name:
        if (std::find(names.begin(), names.end(), e->name) == names.end()) {
          if (names.empty()) fail("expected a constant, found name '" + e->name + "'", e->span);
          fail("unknown variable '" + e->name + "'", e->span);
        }
        return;
      case ExprKind::sqrt:
        if (!field_) fail("sqrt(" + std::to_string(e->integer) + ") needs a prior 'field sqrt(" +
                          std::to_string(e->integer) + ");'", e->span);
        if (e->integer != *field_)
          fail("sqrt(" + std::to_string(e->integer) + ") does not match the declared field sqrt(" +
                   std::to_string(*field_) + ")", e->span);
        return;
      case ExprKind::neg:
      case ExprKind::pow: expr(e->lhs, names); return;
      default:
        expr(e->lhs, names);
        expr(e->rhs, names);
    }
  }

  void exprs(const std::vector<ExprPtr>& es, const std::vector<std::string>& names) const {
    for (const auto& e : es) expr(e, names);
  }

  static bool contains(const std::vector<std::string>& names, const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  }

  void pairs(const std::vector<PairEntry>& entries, const std::vector<std::string>& names,
             const std::vector<std::string>& value_names, const char* what) const {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : entries) {
      if (!contains(names, e.left.text)) fail("unknown " + std::string(what) + " '" + e.left.text + "'", e.left.span);
      if (!contains(names, e.right.text))
        fail("unknown " + std::string(what) + " '" + e.right.text + "'", e.right.span);
      if (e.left.text == e.right.text) fail("bracket of '" + e.left.text + "' with itself", e.left.span);
      auto key = std::minmax(e.left.text, e.right.text);
      if (!seen.insert({key.first, key.second}).second)
        fail("bracket of '" + e.left.text + "' and '" + e.right.text + "' given twice", e.left.span);
      expr(e.value, value_names);
    }
  }

  void check(const FieldDecl& d) {
    if (field_) fail("the field is already declared as sqrt(" + std::to_string(*field_) + ")", d.span);
    if (!Scalar::is_square_free(d.radicand))
      fail("sqrt(" + std::to_string(d.radicand) + ") needs a square-free radicand > 1", d.span);
    field_ = d.radicand;
  }

  void check(const RingDecl& d) {
    std::vector<std::string> vars;
    for (const auto& v : d.variables) {
      if (v.text == "sqrt") fail("'sqrt' cannot be a variable", v.span);
      if (contains(vars, v.text)) fail("variable '" + v.text + "' is listed twice", v.span);
      vars.push_back(v.text);
    }
    exprs(d.relations, vars);
    bind(d.name, {BindingKind::ring, vars, {}, {}});
  }

  void check(const PoissonDecl& d) {
    const auto vars = lookup_ring(d.ring).variables;
    pairs(d.entries, vars, vars, "variable");
    bind(d.name, {BindingKind::poisson, vars, {}, {}});
  }

  void check(const IdealDecl& d) {
    const auto vars = lookup_ring(d.ring).variables;
    exprs(d.generators, vars);
    bind(d.name, {BindingKind::ideal, vars, {}, {}});
  }

  void check(const MapDecl& d) {
    const auto src = lookup_ring(d.source).variables;
    const auto tgt = lookup_ring(d.target).variables;
    std::vector<std::string> seen;
    for (const auto& a : d.images) {
      if (!contains(src, a.target.text)) fail("'" + a.target.text + "' is not a source variable", a.target.span);
      if (contains(seen, a.target.text)) fail("image of '" + a.target.text + "' given twice", a.target.span);
      seen.push_back(a.target.text);
      expr(a.value, tgt);
    }
    for (const auto& v : src)
      if (!contains(seen, v)) fail("map gives no image for '" + v + "'", d.name.span);
    bind(d.name, {BindingKind::map, src, tgt, {}});
  }

  void check(const MomentDecl& d) {
    const auto vars = lookup(d.structure, BindingKind::poisson).variables;
    std::vector<std::string> comps;
    for (const auto& a : d.components) {
      if (a.target.text == "sqrt") fail("'sqrt' cannot name a component", a.target.span);
      if (contains(comps, a.target.text)) fail("component '" + a.target.text + "' given twice", a.target.span);
      comps.push_back(a.target.text);
      expr(a.value, vars);
    }
    if (comps.empty()) fail("moment data needs at least one component", d.name.span);
    pairs(d.brackets, comps, comps, "component");
    bind(d.name, {BindingKind::moment, vars, {}, comps});
  }

  void check(const QuotientDecl& d) {
    const auto vars = lookup(d.structure, BindingKind::poisson).variables;
    lookup(d.ideal, BindingKind::ideal);
    bind(d.name, {BindingKind::poisson, vars, {}, {}});
  }

  void check(const LiftDecl& d) {
    lookup(d.structure, BindingKind::poisson);
    const auto vars = lookup(d.map, BindingKind::map).variables;
    bind(d.name, {BindingKind::poisson, vars, {}, {}});
  }

  void check(const BasisDecl& d) {
    if (d.kind.text == "normalizer") {
      lookup(d.subjects.at(0), BindingKind::poisson);
      lookup(d.subjects.at(1), BindingKind::ideal);
    } else {
      lookup(d.subjects.at(0), BindingKind::moment);
    }
    bind(d.name, {BindingKind::basis, {}, {}, {}});
  }

  void check(const BracketCmd& c) const {
    const auto& vars = lookup(c.structure, BindingKind::poisson).variables;
    expr(c.left, vars);
    expr(c.right, vars);
  }

  void check(const CheckCmd& c) const {
    const std::string& w = c.what.text;
    if (w == "point" || w == "germ") {
      const auto& s = lookup_ring(c.subjects.at(0));
      if (w == "point") {
        if (c.arguments.size() != s.variables.size())
          fail("point needs " + std::to_string(s.variables.size()) + " coordinates, got " +
                   std::to_string(c.arguments.size()),
               c.arguments.empty() ? c.span : c.arguments.front()->span);
        exprs(c.arguments, {});
      } else {
        exprs(c.arguments, s.variables);
        if (c.point.size() != s.variables.size())
          fail("point needs " + std::to_string(s.variables.size()) + " coordinates, got " +
                   std::to_string(c.point.size()),
               c.point.empty() ? c.span : c.point.front()->span);
        exprs(c.point, {});
      }
      return;
    }
    const auto& vars = lookup(c.subjects.at(0), BindingKind::poisson).variables;
    if (c.subjects.size() > 1) lookup(c.subjects[1], BindingKind::ideal);
    exprs(c.arguments, vars);
  }

  void check(const HamiltonianCmd& c) const {
    expr(c.function, lookup(c.structure, BindingKind::poisson).variables);
  }

  void check(const ReduceCmd& c) const {
    const std::string& k = c.kind.text;
    if (k == "acg" || (k == "sw" && c.subjects.size() == 1)) {
      const auto& m = lookup(c.subjects.at(0), BindingKind::moment);
      if (c.has_level && c.level.size() != m.components.size())
        fail("level needs " + std::to_string(m.components.size()) + " values, got " +
                 std::to_string(c.level.size()),
             c.level.empty() ? c.span : c.level.front()->span);
    } else {
      lookup(c.subjects.at(0), BindingKind::poisson);
      lookup(c.subjects.at(1), BindingKind::ideal);
    }
    exprs(c.level, {});
    if (c.degree < 1) fail("reduction needs a degree bound of at least 1", c.span);
  }

  void check(const SampleCmd& c) const {
    const auto& s = lookup_ring(c.ring);
    if (c.box.size() != s.variables.size())
      fail("box needs " + std::to_string(s.variables.size()) + " intervals, got " + std::to_string(c.box.size()),
           c.ring.span);
    for (const auto& side : c.box) {
      expr(side.lo, {});
      expr(side.hi, {});
    }
    if (c.tolerance) expr(c.tolerance, {});
    if (c.resolution < 2) fail("resolution must be at least 2", c.span);
  }

  void check(const EmitCmd& c) const {
    const auto& s = lookup(c.subject);
    if (c.emission.format.text == "json" && s.kind != BindingKind::basis)
      fail("json emission needs a basis, but '" + c.subject.text + "' is " + describe(s.kind), c.subject.span);
  }

  void check(const PrintCmd& c) const { lookup(c.subject); }

  void check(const SelftestCmd& c) const { lookup(c.structure, BindingKind::poisson); }

  std::map<std::string, Symbol> symbols_;
  std::optional<unsigned long> field_;
};

}  // namespace pck::dsl
