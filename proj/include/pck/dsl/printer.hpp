#pragma once

#include <gmpxx.h>

#include <string>
#include <type_traits>
#include <vector>

#include "pck/dsl/ast.hpp"

namespace pck::dsl {

namespace detail {

/// Exact decimal spelling of a rational whose denominator is 2^a 5^b.
inline std::string decimal(const mpq_class& q) {
  mpz_class den = q.get_den();
  unsigned long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) den /= 2, ++twos;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) den /= 5, ++fives;
  if (den != 1) return "(" + q.get_num().get_str() + "/" + q.get_den().get_str() + ")";
  const unsigned long k = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, k);
  mpz_class n = q.get_num() * scale / q.get_den();
  const bool negative = n < 0;
  std::string digits = mpz_class(abs(n)).get_str();
  std::string out;
  if (k == 0) {
    out = digits;
  } else {
    if (digits.size() <= k) digits.insert(0, k - digits.size() + 1, '0');
    out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
  }
  return negative ? "-" + out : out;
}

inline int precedence(ExprKind k) {
  switch (k) {
    case ExprKind::add:
    case ExprKind::sub: return 1;
    case ExprKind::mul:
    case ExprKind::div: return 2;
    case ExprKind::neg: return 3;
    case ExprKind::pow: return 4;
    default: return 5;
  }
}

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

}  // namespace detail

/// Canonical spelling with the fewest parentheses that preserve the tree.
inline std::string print(const Expr& e, int context = 0) {
  std::string s;
  switch (e.kind) {
    case ExprKind::number: s = detail::decimal(e.number); break;
    case ExprKind::name: s = e.name; break;
    case ExprKind::sqrt: s = "sqrt(" + std::to_string(e.integer) + ")"; break;
    case ExprKind::neg: s = "-" + print(*e.lhs, 3); break;
    case ExprKind::pow: s = print(*e.lhs, 5) + "^" + std::to_string(e.integer); break;
    case ExprKind::add: s = print(*e.lhs, 1) + " + " + print(*e.rhs, 2); break;
    case ExprKind::sub: s = print(*e.lhs, 1) + " - " + print(*e.rhs, 2); break;
    case ExprKind::mul: s = print(*e.lhs, 2) + "*" + print(*e.rhs, 3); break;
    case ExprKind::div: s = print(*e.lhs, 2) + "/" + print(*e.rhs, 3); break;
  }
  return detail::precedence(e.kind) < context ? "(" + s + ")" : s;
}

namespace detail {

inline std::string join(const std::vector<ExprPtr>& es) {
  std::string out;
  for (const auto& e : es) out += (out.empty() ? "" : ", ") + print(*e);
  return out;
}

inline std::string join(const std::vector<Name>& ns, const char* sep = ", ") {
  std::string out;
  for (const auto& n : ns) out += (out.empty() ? "" : sep) + n.text;
  return out;
}

inline std::string block(const std::vector<ExprPtr>& es) {
  std::string out = "{";
  for (const auto& e : es) out += " " + print(*e) + ";";
  return out + " }";
}

inline std::string emissions(const std::vector<Emission>& es) {
  std::string out;
  for (const auto& e : es) out += " emit " + e.format.text + " " + quote(e.path);
  return out;
}

struct StatementPrinter {
  std::string operator()(const FieldDecl& d) const { return "field sqrt(" + std::to_string(d.radicand) + ");"; }

  std::string operator()(const RingDecl& d) const {
    std::string out = "ring " + d.name.text + " (" + join(d.variables) + ")";
    if (d.has_relations) out += " relations " + block(d.relations);
    if (d.order) out += " order " + d.order->text;
    return out + ";";
  }

  std::string operator()(const PoissonDecl& d) const {
    std::string out = "poisson " + d.name.text + " on " + d.ring.text + " {";
    for (const auto& e : d.entries)
      out += " {" + e.left.text + ", " + e.right.text + "} = " + print(*e.value) + ";";
    return out + " }";
  }

  std::string operator()(const IdealDecl& d) const {
    return "ideal " + d.name.text + " in " + d.ring.text + " " + block(d.generators);
  }

  std::string operator()(const MapDecl& d) const {
    std::string out = "map " + d.name.text + " : " + d.source.text + " -> " + d.target.text + " {";
    for (const auto& a : d.images) out += " " + a.target.text + " -> " + print(*a.value) + ";";
    return out + " }";
  }

  std::string operator()(const MomentDecl& d) const {
    std::string out = "moment " + d.name.text + " for " + d.structure.text + " {";
    for (const auto& a : d.components) out += " " + a.target.text + " = " + print(*a.value) + ";";
    if (d.has_structure) {
      out += " structure {";
      for (const auto& e : d.brackets)
        out += " [" + e.left.text + ", " + e.right.text + "] = " + print(*e.value) + ";";
      out += " }";
    }
    return out + " }";
  }

  std::string operator()(const QuotientDecl& d) const {
    return "quotient " + d.name.text + " = " + d.structure.text + " / " + d.ideal.text + ";";
  }

  std::string operator()(const LiftDecl& d) const {
    return "lift " + d.name.text + " = " + d.structure.text + " via " + d.map.text + ";";
  }

  std::string operator()(const BasisDecl& d) const {
    return "basis " + d.name.text + " = " + d.kind.text + " " + join(d.subjects, " ") + " degree " +
           std::to_string(d.degree) + ";";
  }

  std::string operator()(const BracketCmd& c) const {
    return "bracket " + c.structure.text + " (" + print(*c.left) + ", " + print(*c.right) + ");";
  }

  std::string operator()(const CheckCmd& c) const {
    std::string out = "check " + c.what.text + " " + join(c.subjects, " ");
    if (!c.arguments.empty()) out += " (" + join(c.arguments) + ")";
    if (c.has_point) out += " at (" + join(c.point) + ")";
    if (c.degree) out += " degree " + std::to_string(*c.degree);
    return out + ";";
  }

  std::string operator()(const HamiltonianCmd& c) const {
    return "hamiltonian " + c.structure.text + " (" + print(*c.function) + ");";
  }

  std::string operator()(const ReduceCmd& c) const {
    std::string out = "reduce " + c.kind.text + " " + join(c.subjects, " ");
    if (c.has_level) out += " at (" + join(c.level) + ")";
    return out + " degree " + std::to_string(c.degree) + emissions(c.emissions) + ";";
  }

  std::string operator()(const SampleCmd& c) const {
    std::string out = "sample " + c.ring.text + " box (";
    for (std::size_t i = 0; i < c.box.size(); ++i)
      out += (i ? ", [" : "[") + print(*c.box[i].lo) + ", " + print(*c.box[i].hi) + "]";
    out += ") resolution " + std::to_string(c.resolution);
    if (c.tolerance) out += " tol " + print(*c.tolerance);
    return out + emissions(c.emissions) + ";";
  }

  std::string operator()(const EmitCmd& c) const {
    return "emit " + c.emission.format.text + " " + quote(c.emission.path) + " " + c.subject.text + ";";
  }

  std::string operator()(const PrintCmd& c) const { return "print " + c.subject.text + ";"; }

  std::string operator()(const SelftestCmd& c) const {
    return "selftest " + c.structure.text + " count " + std::to_string(c.count) + ";";
  }
};

}  // namespace detail

inline std::string print(const Statement& s) { return std::visit(detail::StatementPrinter{}, s); }

/// One statement per line.
inline std::string print(const Script& script) {
  std::string out;
  for (const auto& s : script.statements) out += print(s) + "\n";
  return out;
}

}  // namespace pck::dsl
