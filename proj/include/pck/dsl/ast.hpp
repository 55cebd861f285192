#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pck/dsl/lexer.hpp"

namespace pck::dsl {

// Every node carries a span; spans are ignored by equality.

struct Name {
  std::string text;
  Span span;

  friend bool operator==(const Name& a, const Name& b) { return a.text == b.text; }
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind { number, name, sqrt, neg, add, sub, mul, div, pow };

struct Expr {
  ExprKind kind = ExprKind::number;
  mpq_class number;            // number
  std::string name;            // name
  unsigned long integer = 0;   // sqrt radicand, pow exponent
  ExprPtr lhs;                 // neg operand, binary left, pow base
  ExprPtr rhs;                 // binary right
  Span span;

  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case ExprKind::number: return a.number == b.number;
      case ExprKind::name: return a.name == b.name;
      case ExprKind::sqrt: return a.integer == b.integer;
      case ExprKind::neg: return *a.lhs == *b.lhs;
      case ExprKind::pow: return a.integer == b.integer && *a.lhs == *b.lhs;
      default: return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
    }
  }
};

inline bool same(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return *a == *b;
}

inline bool same(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same(a[i], b[i])) return false;
  return true;
}

// Declarations.

struct FieldDecl {
  unsigned long radicand = 0;
  Span span;
  friend bool operator==(const FieldDecl& a, const FieldDecl& b) { return a.radicand == b.radicand; }
};

struct RingDecl {
  Name name;
  std::vector<Name> variables;
  bool has_relations = false;
  std::vector<ExprPtr> relations;
  std::optional<Name> order;
  Span span;
  friend bool operator==(const RingDecl& a, const RingDecl& b) {
    return a.name == b.name && a.variables == b.variables && a.has_relations == b.has_relations &&
           same(a.relations, b.relations) && a.order == b.order;
  }
};

struct PairEntry {
  Name left;
  Name right;
  ExprPtr value;
  friend bool operator==(const PairEntry& a, const PairEntry& b) {
    return a.left == b.left && a.right == b.right && same(a.value, b.value);
  }
};

struct PoissonDecl {
  Name name;
  Name ring;
  std::vector<PairEntry> entries;
  Span span;
  friend bool operator==(const PoissonDecl& a, const PoissonDecl& b) {
    return a.name == b.name && a.ring == b.ring && a.entries == b.entries;
  }
};

struct IdealDecl {
  Name name;
  Name ring;
  std::vector<ExprPtr> generators;
  Span span;
  friend bool operator==(const IdealDecl& a, const IdealDecl& b) {
    return a.name == b.name && a.ring == b.ring && same(a.generators, b.generators);
  }
};

struct Assignment {
  Name target;
  ExprPtr value;
  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.target == b.target && same(a.value, b.value);
  }
};

struct MapDecl {
  Name name;
  Name source;
  Name target;
  std::vector<Assignment> images;
  Span span;
  friend bool operator==(const MapDecl& a, const MapDecl& b) {
    return a.name == b.name && a.source == b.source && a.target == b.target && a.images == b.images;
  }
};

struct MomentDecl {
  Name name;
  Name structure;
  std::vector<Assignment> components;
  bool has_structure = false;
  std::vector<PairEntry> brackets;  // [a, b] = linear combination of components
  Span span;
  friend bool operator==(const MomentDecl& a, const MomentDecl& b) {
    return a.name == b.name && a.structure == b.structure && a.components == b.components &&
           a.has_structure == b.has_structure && a.brackets == b.brackets;
  }
};

/// `quotient Q = W / I;`
struct QuotientDecl {
  Name name;
  Name structure;
  Name ideal;
  Span span;
  friend bool operator==(const QuotientDecl& a, const QuotientDecl& b) {
    return a.name == b.name && a.structure == b.structure && a.ideal == b.ideal;
  }
};

/// `lift L = W via q;`
struct LiftDecl {
  Name name;
  Name structure;
  Name map;
  Span span;
  friend bool operator==(const LiftDecl& a, const LiftDecl& b) {
    return a.name == b.name && a.structure == b.structure && a.map == b.map;
  }
};

/// `basis N = normalizer W I degree d;` or `basis N = invariants M degree d;`
struct BasisDecl {
  Name name;
  Name kind;
  std::vector<Name> subjects;
  unsigned long degree = 0;
  Span span;
  friend bool operator==(const BasisDecl& a, const BasisDecl& b) {
    return a.name == b.name && a.kind == b.kind && a.subjects == b.subjects && a.degree == b.degree;
  }
};

// Commands.

struct Emission {
  Name format;
  std::string path;
  Span span;
  friend bool operator==(const Emission& a, const Emission& b) {
    return a.format == b.format && a.path == b.path;
  }
};

struct BracketCmd {
  Name structure;
  ExprPtr left;
  ExprPtr right;
  Span span;
  friend bool operator==(const BracketCmd& a, const BracketCmd& b) {
    return a.structure == b.structure && same(a.left, b.left) && same(a.right, b.right);
  }
};

/// `check WHAT names... [(exprs)] [at (point)] [degree d];`
struct CheckCmd {
  Name what;
  std::vector<Name> subjects;
  std::vector<ExprPtr> arguments;
  bool has_point = false;
  std::vector<ExprPtr> point;
  std::optional<unsigned long> degree;
  Span span;
  friend bool operator==(const CheckCmd& a, const CheckCmd& b) {
    return a.what == b.what && a.subjects == b.subjects && same(a.arguments, b.arguments) &&
           a.has_point == b.has_point && same(a.point, b.point) && a.degree == b.degree;
  }
};

struct HamiltonianCmd {
  Name structure;
  ExprPtr function;
  Span span;
  friend bool operator==(const HamiltonianCmd& a, const HamiltonianCmd& b) {
    return a.structure == b.structure && same(a.function, b.function);
  }
};

/// `reduce KIND names... [at (levels)] degree d [emit ...];`
struct ReduceCmd {
  Name kind;
  std::vector<Name> subjects;
  bool has_level = false;
  std::vector<ExprPtr> level;
  unsigned long degree = 0;
  std::vector<Emission> emissions;
  Span span;
  friend bool operator==(const ReduceCmd& a, const ReduceCmd& b) {
    return a.kind == b.kind && a.subjects == b.subjects && a.has_level == b.has_level &&
           same(a.level, b.level) && a.degree == b.degree && a.emissions == b.emissions;
  }
};

struct BoxSide {
  ExprPtr lo;
  ExprPtr hi;
  friend bool operator==(const BoxSide& a, const BoxSide& b) { return same(a.lo, b.lo) && same(a.hi, b.hi); }
};

/// `sample A box ([lo, hi], ...) resolution N [tol T] [emit ...];`
struct SampleCmd {
  Name ring;
  std::vector<BoxSide> box;
  unsigned long resolution = 0;
  ExprPtr tolerance;  // optional
  std::vector<Emission> emissions;
  Span span;
  friend bool operator==(const SampleCmd& a, const SampleCmd& b) {
    return a.ring == b.ring && a.box == b.box && a.resolution == b.resolution &&
           same(a.tolerance, b.tolerance) && a.emissions == b.emissions;
  }
};

/// `emit FORMAT "path" NAME;`
struct EmitCmd {
  Emission emission;
  Name subject;
  Span span;
  friend bool operator==(const EmitCmd& a, const EmitCmd& b) {
    return a.emission == b.emission && a.subject == b.subject;
  }
};

struct PrintCmd {
  Name subject;
  Span span;
  friend bool operator==(const PrintCmd& a, const PrintCmd& b) { return a.subject == b.subject; }
};

/// `selftest W count N;` randomized law checks seeded from the session.
struct SelftestCmd {
  Name structure;
  unsigned long count = 0;
  Span span;
  friend bool operator==(const SelftestCmd& a, const SelftestCmd& b) {
    return a.structure == b.structure && a.count == b.count;
  }
};

using Statement = std::variant<FieldDecl, RingDecl, PoissonDecl, IdealDecl, MapDecl, MomentDecl, QuotientDecl,
                               LiftDecl, BasisDecl, BracketCmd, CheckCmd, HamiltonianCmd, ReduceCmd, SampleCmd,
                               EmitCmd, PrintCmd, SelftestCmd>;

inline Span span_of(const Statement& s) {
  return std::visit([](const auto& node) { return node.span; }, s);
}

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script& a, const Script& b) { return a.statements == b.statements; }
};

}  // namespace pck::dsl
