#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pck/dsl/ast.hpp"
#include "pck/dsl/parser.hpp"
#include "pck/dsl/printer.hpp"
#include "pck/dsl/resolver.hpp"
#include "pck/poisson.hpp"
#include "pck/spectrum.hpp"

namespace pck::dsl {

enum ExitCode : int { exit_ok = 0, exit_math = 1, exit_parse = 2 };

struct Options {
  std::filesystem::path out_dir = ".";
  double tolerance = 1e-6;  // default for `sample` without `tol`
  std::uint64_t seed = 0;   // feeds `selftest` only
};

struct IdealValue {
  RingPresentation ring;
  Ideal ideal;
};

struct BasisValue {
  GradedBasis basis;
  PoissonStructure structure;
};

using Value = std::variant<RingPresentation, PoissonStructure, IdealValue, RingMap, MomentData, BasisValue>;

/// Name → value bindings in declaration order. Rebinding is an error.
class SessionEnv {
 public:
  struct Binding {
    std::string name;
    Value value;
    std::string ring_label;  // name used for the owning ring when printing
  };

  void bind(const std::string& name, Value v, std::string ring_label = {}) {
    if (index_.count(name)) throw MathError("'" + name + "' is already bound");
    index_.emplace(name, bindings_.size());
    bindings_.push_back({name, std::move(v), std::move(ring_label)});
  }

  const Binding& at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw MathError("unresolved name '" + name + "'");
    return bindings_[it->second];
  }

  template <class T>
  const T& get(const std::string& name) const {
    const auto& v = at(name).value;
    if (const T* p = std::get_if<T>(&v)) return *p;
    throw MathError("'" + name + "' has the wrong kind");
  }

  /// Ring of a ring or Poisson binding.
  const RingPresentation& ring(const std::string& name) const {
    const auto& v = at(name).value;
    if (const auto* r = std::get_if<RingPresentation>(&v)) return *r;
    if (const auto* s = std::get_if<PoissonStructure>(&v)) return s->owner();
    throw MathError("'" + name + "' is not a ring");
  }

  std::string ring_label(const std::string& name) const {
    const auto& b = at(name);
    return std::holds_alternative<RingPresentation>(b.value) ? b.name : b.ring_label;
  }

  const std::vector<Binding>& bindings() const { return bindings_; }
  bool contains(const std::string& name) const { return index_.count(name) > 0; }

 private:
  std::vector<Binding> bindings_;
  std::map<std::string, std::size_t> index_;
};

/// Error raised while executing a statement, carrying the statement's span.
class RunError : public Error {
 public:
  RunError(const std::string& message, Span span)
      : Error(std::to_string(span.begin.line) + ":" + std::to_string(span.begin.column) + ": " + message),
        span_(span) {}
  Span span() const { return span_; }

 private:
  Span span_;
};

namespace detail {

inline Polynomial evaluate(const Expr& e, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  switch (e.kind) {
    case ExprKind::number: return Polynomial::constant(n, Scalar(e.number));
    case ExprKind::name: {
      for (std::size_t i = 0; i < n; ++i)
        if (names[i] == e.name) return Polynomial::variable(n, i);
      throw MathError("unknown variable '" + e.name + "'");
    }
    case ExprKind::sqrt: return Polynomial::constant(n, Scalar::sqrt(static_cast<unsigned>(e.integer)));
    case ExprKind::neg: return -evaluate(*e.lhs, names);
    case ExprKind::pow: return evaluate(*e.lhs, names).pow(static_cast<unsigned>(e.integer));
    case ExprKind::add: return evaluate(*e.lhs, names) + evaluate(*e.rhs, names);
    case ExprKind::sub: return evaluate(*e.lhs, names) - evaluate(*e.rhs, names);
    case ExprKind::mul: return evaluate(*e.lhs, names) * evaluate(*e.rhs, names);
    case ExprKind::div: {
      const Polynomial d = evaluate(*e.rhs, names);
      if (!d.is_constant() || d.is_zero()) throw MathError("division by a non-constant or zero expression");
      return d.constant_term().inverse() * evaluate(*e.lhs, names);
    }
  }
  throw MathError("bad expression");
}

inline Scalar constant(const Expr& e) { return evaluate(e, {}).constant_term(); }

inline std::vector<Scalar> constants(const std::vector<ExprPtr>& es) {
  std::vector<Scalar> out;
  for (const auto& e : es) out.push_back(constant(*e));
  return out;
}

inline std::string join(const std::vector<RingElement>& es) {
  std::string out;
  for (const auto& e : es) out += (out.empty() ? "" : ", ") + e.to_string();
  return out;
}

inline nlohmann::ordered_json ring_json(const RingPresentation& r) {
  nlohmann::ordered_json j;
  j["variables"] = r.variables();
  auto rel = nlohmann::ordered_json::array();
  for (const auto& g : r.ideal().generators())
    if (!g.is_zero()) rel.push_back(r.to_string(g));
  j["relations"] = rel;
  j["order"] = r.ideal().order().name();
  return j;
}

inline std::string table_json(const std::string& kind, const RingPresentation& ring,
                              const std::vector<RingElement>& basis,
                              const std::vector<std::vector<std::string>>& table) {
  nlohmann::ordered_json j;
  j["kind"] = kind;
  j["ring"] = ring_json(ring);
  auto labels = nlohmann::ordered_json::array();
  for (const auto& b : basis) labels.push_back(b.to_string());
  j["basis"] = labels;
  j["bracket_table"] = table;
  return j.dump(2) + "\n";
}

}  // namespace detail

/// Executes resolved statements against a session environment.
class Session {
 public:
  Session(Options options, std::ostream& out) : options_(std::move(options)), out_(out), rng_(options_.seed) {}

  /// Parse-and-resolve only; throws ParseError.
  void resolve(const Script& s) { resolver_.resolve(s); }

  /// Resolves then executes one statement. Throws ParseError or RunError.
  void execute(const Statement& st) {
    resolver_.resolve(st);
    try {
      std::visit([this](const auto& node) { run(node); }, st);
    } catch (const RunError&) {
      throw;
    } catch (const Error& e) {
      throw RunError(e.what(), span_of(st));
    }
  }

  const SessionEnv& env() const { return env_; }

 private:
  const std::vector<std::string>& vars(const std::string& ring_name) const {
    return env_.ring(ring_name).variables();
  }

  RingElement element(const std::string& ring_name, const ExprPtr& e) const {
    const auto& r = env_.ring(ring_name);
    return r.element(detail::evaluate(*e, r.variables()));
  }

  std::filesystem::path output_path(const std::string& path) const {
    std::filesystem::path p(path);
    return p.is_absolute() ? p : options_.out_dir / p;
  }

  void write_file(const std::string& path, const std::string& contents) {
    const auto p = output_path(path);
    std::error_code ec;
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
    std::ofstream f(p, std::ios::binary);
    if (!f) throw Error("cannot write '" + p.string() + "'");
    f << contents;
    if (!f) throw Error("cannot write '" + p.string() + "'");
    out_ << "wrote " << path << "\n";
  }

  // Declarations.

  void run(const FieldDecl&) {}

  void run(const RingDecl& d) {
    std::vector<std::string> names;
    for (const auto& v : d.variables) names.push_back(v.text);
    std::vector<Polynomial> rels;
    for (const auto& e : d.relations) rels.push_back(detail::evaluate(*e, names));
    const auto order = d.order && d.order->text == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
    env_.bind(d.name.text, make_presentation(names, rels, order));
  }

  void run(const PoissonDecl& d) {
    const auto& r = env_.ring(d.ring.text);
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Polynomial>> pairs;
    for (const auto& e : d.entries)
      pairs.push_back({{r.index_of(e.left.text), r.index_of(e.right.text)}, detail::evaluate(*e.value, r.variables())});
    env_.bind(d.name.text, PoissonStructure::from_pairs(r, pairs, true), env_.ring_label(d.ring.text));
  }

  void run(const IdealDecl& d) {
    const auto& r = env_.ring(d.ring.text);
    std::vector<Polynomial> gens;
    for (const auto& e : d.generators) gens.push_back(detail::evaluate(*e, r.variables()));
    env_.bind(d.name.text, IdealValue{r, Ideal(r.arity(), std::move(gens), r.ideal().order())},
              env_.ring_label(d.ring.text));
  }

  void run(const MapDecl& d) {
    const auto& src = env_.ring(d.source.text);
    const auto& tgt = env_.ring(d.target.text);
    std::vector<RingElement> images(src.arity(), tgt.zero());
    for (const auto& a : d.images) images[src.index_of(a.target.text)] = element(d.target.text, a.value);
    env_.bind(d.name.text, RingMap(src, tgt, std::move(images)));
  }

  void run(const MomentDecl& d) {
    const auto& s = env_.get<PoissonStructure>(d.structure.text);
    std::vector<RingElement> comps;
    std::vector<std::string> labels;
    for (const auto& a : d.components) {
      comps.push_back(s.owner().element(detail::evaluate(*a.value, s.owner().variables())));
      labels.push_back(a.target.text);
    }
    const std::size_t k = comps.size();
    StructureConstants f(k, std::vector<std::vector<Scalar>>(k, std::vector<Scalar>(k)));
    auto index = [&](const std::string& c) {
      return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), c) - labels.begin());
    };
    for (const auto& e : d.brackets) {
      const Polynomial v = detail::evaluate(*e.value, labels);
      const std::size_t a = index(e.left.text), b = index(e.right.text);
      for (const auto& t : v.terms()) {
        if (t.monomial.degree() != 1)
          throw MathError("Lie bracket [" + e.left.text + ", " + e.right.text +
                          "] must be a linear combination of components");
        std::size_t c = 0;
        while (t.monomial[c] == 0) ++c;
        f[a][b][c] = t.coeff;
        f[b][a][c] = -t.coeff;
      }
    }
    env_.bind(d.name.text, MomentData(s, std::move(comps), std::move(f)), env_.ring_label(d.structure.text));
  }

  void run(const QuotientDecl& d) {
    const auto& s = env_.get<PoissonStructure>(d.structure.text);
    const auto& i = env_.get<IdealValue>(d.ideal.text);
    if (!(i.ring == s.owner()))
      throw MathError("ideal '" + d.ideal.text + "' does not live in the ring of '" + d.structure.text + "'");
    env_.bind(d.name.text, quotient_poisson(s, i.ideal), d.name.text + "_ring");
  }

  void run(const LiftDecl& d) {
    const auto& s = env_.get<PoissonStructure>(d.structure.text);
    const auto& q = env_.get<RingMap>(d.map.text);
    env_.bind(d.name.text, extend_bracket(q, s), d.name.text + "_ring");
  }

  void run(const BasisDecl& d) {
    const std::size_t deg = d.degree;
    std::optional<BasisValue> v;
    if (d.kind.text == "normalizer") {
      const auto& s = env_.get<PoissonStructure>(d.subjects[0].text);
      const auto& i = ideal_for(s, d.subjects[1].text);
      v = BasisValue{normalizer_basis(s, i, deg), s};
    } else {
      const auto& m = env_.get<MomentData>(d.subjects[0].text);
      v = BasisValue{invariant_basis(m, deg), m.structure()};
    }
    out_ << "basis " << d.name.text << " degree " << deg << ": {" << detail::join(v->basis.elements) << "}\n";
    env_.bind(d.name.text, std::move(*v));
  }

  const Ideal& ideal_for(const PoissonStructure& s, const std::string& name) const {
    const auto& i = env_.get<IdealValue>(name);
    if (!(i.ring == s.owner())) throw MathError("ideal '" + name + "' does not live in the structure's ring");
    return i.ideal;
  }

  // Commands.

  void run(const BracketCmd& c) {
    const auto& s = env_.get<PoissonStructure>(c.structure.text);
    out_ << bracket(s, element(c.structure.text, c.left), element(c.structure.text, c.right)).to_string() << "\n";
  }

  void run(const CheckCmd& c) {
    const std::string& w = c.what.text;
    auto flag = [](bool b) { return b ? "true" : "false"; };
    if (w == "point") {
      out_ << "point: " << flag(is_point(env_.ring(c.subjects[0].text), detail::constants(c.arguments))) << "\n";
      return;
    }
    if (w == "germ") {
      const auto& r = env_.ring(c.subjects[0].text);
      RPoint x(r, detail::constants(c.point));
      out_ << "germ: " << (germ_vanishes(element(c.subjects[0].text, c.arguments[0]), x) ? "vanishes" : "does not vanish")
           << "\n";
      return;
    }
    const auto& s = env_.get<PoissonStructure>(c.subjects[0].text);
    if (w == "jacobi") {
      const auto& v = s.owner().variables();
      for (std::size_t i = 0; i < s.arity(); ++i)
        for (std::size_t j = i + 1; j < s.arity(); ++j)
          for (std::size_t k = j + 1; k < s.arity(); ++k) {
            auto defect = s.jacobi_defect(i, j, k);
            if (!defect.is_zero()) {
              out_ << "jacobi: fails at (" << v[i] << ", " << v[j] << ", " << v[k] << "): " << defect.to_string()
                   << "\n";
              return;
            }
          }
      out_ << "jacobi: holds\n";
    } else if (w == "poisson-ideal") {
      out_ << "poisson-ideal: " << flag(is_poisson_ideal(s, ideal_for(s, c.subjects[1].text))) << "\n";
    } else if (w == "normalizer-member") {
      const auto& i = ideal_for(s, c.subjects[1].text);
      out_ << "normalizer-member: " << flag(in_normalizer(s, i, element(c.subjects[0].text, c.arguments[0]))) << "\n";
    } else if (w == "casimir") {
      out_ << "casimir: " << flag(is_casimir(s, element(c.subjects[0].text, c.arguments[0]))) << "\n";
    } else if (w == "poisson-dirac") {
      const auto r = poisson_dirac_check(s, ideal_for(s, c.subjects[1].text), *c.degree);
      out_ << "poisson-dirac: bracket-closed " << flag(r.bracket_closed) << ", reduced dimension "
           << r.reduced_dimension << ", quotient dimension " << r.quotient_dimension << ", surjective up to degree "
           << r.degree_bound << ": " << flag(r.surjective_up_to_degree) << "\n";
    }
  }

  void run(const HamiltonianCmd& c) {
    const auto& s = env_.get<PoissonStructure>(c.structure.text);
    out_ << "(" << detail::join(hamiltonian_field(s, element(c.structure.text, c.function))) << ")\n";
  }

  void run(const ReduceCmd& c) {
    const std::string& k = c.kind.text;
    const std::size_t d = c.degree;
    std::optional<ReducedAlgebra> red;
    if (k == "acg") {
      red = acg_reduced_ring(env_.get<MomentData>(c.subjects[0].text), detail::constants(c.level), d);
    } else if (k == "sw" && c.subjects.size() == 1) {
      const auto& m = env_.get<MomentData>(c.subjects[0].text);
      const Ideal level = moment_level_ideal(m, std::vector<Scalar>(m.dimension(), Scalar(0)));
      red = sw_reduced_algebra(m.structure(), level, d);
    } else {
      const auto& s = env_.get<PoissonStructure>(c.subjects[0].text);
      red = sw_reduced_algebra(s, ideal_for(s, c.subjects[1].text), d, k);
    }
    out_ << "reduce " << k << " degree " << d << ": basis {" << detail::join(red->basis) << "}\n";
    std::vector<std::vector<std::string>> table;
    for (std::size_t i = 0; i < red->basis.size(); ++i) {
      table.emplace_back();
      for (std::size_t j = 0; j < red->basis.size(); ++j) {
        table.back().push_back(red->table[i][j].value.to_string());
        if (i < j)
          out_ << "{" << red->basis[i].to_string() << ", " << red->basis[j].to_string()
               << "} = " << red->table[i][j].value.to_string() << "\n";
      }
    }
    for (const auto& e : c.emissions) write_file(e.path, detail::table_json(k, red->quotient, red->basis, table));
  }

  void run(const SampleCmd& c) {
    const auto& r = env_.ring(c.ring.text);
    std::vector<Interval> box;
    for (const auto& side : c.box) box.push_back({detail::constant(*side.lo).to_double(), detail::constant(*side.hi).to_double()});
    const double tol = c.tolerance ? detail::constant(*c.tolerance).to_double() : options_.tolerance;
    ZeroSetQuery q(r, std::move(box), c.resolution, tol);
    const PointCloud cloud = sample_zero_set(q);
    out_ << "sample " << c.ring.text << ": " << cloud.size() << " points\n";
    for (const auto& e : c.emissions) {
      if (e.format.text == "csv") {
        std::ostringstream csv;
        write_csv(csv, cloud);
        write_file(e.path, csv.str());
      } else {
        write_file(e.path, cloud_json(q, cloud));
      }
    }
  }

  void run(const EmitCmd& c) {
    if (c.emission.format.text == "json") {
      const auto& b = env_.get<BasisValue>(c.subject.text);
      const auto& els = b.basis.elements;
      std::vector<std::vector<std::string>> table;
      for (const auto& x : els) {
        table.emplace_back();
        for (const auto& y : els) table.back().push_back(bracket(b.structure, x, y).to_string());
      }
      write_file(c.emission.path, detail::table_json(b.basis.description, b.structure.owner(), els, table));
    } else {
      write_file(c.emission.path, serialize(c.subject.text));
    }
  }

  void run(const PrintCmd& c) { out_ << serialize(c.subject.text); }

  void run(const SelftestCmd& c) {
    const auto& s = env_.get<PoissonStructure>(c.structure.text);
    const auto& r = s.owner();
    const bool jacobi = s.jacobi_status() == JacobiStatus::holds;
    auto random = [&]() {
      std::uniform_int_distribution<int> coeff(-3, 3);
      std::uniform_int_distribution<std::size_t> var(0, r.arity() - 1);
      Polynomial p = Polynomial::constant(r.arity(), Scalar(coeff(rng_)));
      for (int t = 0; t < 3; ++t)
        p += Scalar(coeff(rng_)) * Polynomial::variable(r.arity(), var(rng_)) *
             (t == 2 ? Polynomial::variable(r.arity(), var(rng_)) : Polynomial::constant(r.arity(), Scalar(1)));
      return r.element(p);
    };
    for (std::size_t n = 0; n < c.count; ++n) {
      auto a = random(), b = random(), e = random();
      if (!(bracket(s, a, b) + bracket(s, b, a)).is_zero()) throw MathError("selftest: antisymmetry fails");
      if (!(bracket(s, a, b * e) == b * bracket(s, a, e) + bracket(s, a, b) * e))
        throw MathError("selftest: Leibniz rule fails");
      if (jacobi && !(bracket(s, a, bracket(s, b, e)) + bracket(s, b, bracket(s, e, a)) + bracket(s, e, bracket(s, a, b)))
                         .is_zero())
        throw MathError("selftest: Jacobi identity fails");
    }
    out_ << "selftest " << c.structure.text << ": " << c.count << " checks passed\n";
  }

  std::string serialize(const std::string& name) const {
    const auto& b = env_.at(name);
    return std::visit(
        [&](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, RingPresentation>) {
            return v.serialize(name) + "\n";
          } else if constexpr (std::is_same_v<T, PoissonStructure>) {
            std::string out;
            if (!env_.contains(b.ring_label)) out += v.owner().serialize(b.ring_label) + "\n";
            return out + v.serialize(name, b.ring_label) + "\n";
          } else if constexpr (std::is_same_v<T, IdealValue>) {
            std::string out = "ideal " + name + " in " + b.ring_label + " {";
            for (const auto& g : v.ideal.generators())
              if (!g.is_zero()) out += " " + v.ring.to_string(g) + ";";
            return out + " }\n";
          } else if constexpr (std::is_same_v<T, RingMap>) {
            return v.serialize(name, label_of(v.source()), label_of(v.target())) + "\n";
          } else if constexpr (std::is_same_v<T, MomentData>) {
            std::string out = "moment " + name + " for " + label_of_structure(v.structure()) + " {";
            for (std::size_t a = 0; a < v.dimension(); ++a)
              out += " mu" + std::to_string(a + 1) + " = " + v.components()[a].to_string() + ";";
            return out + " }\n";
          } else {
            return "basis " + name + " (" + v.basis.description + "): {" + detail::join(v.basis.elements) + "}\n";
          }
        },
        b.value);
  }

  std::string label_of(const RingPresentation& r) const {
    for (const auto& b : env_.bindings()) {
      if (const auto* p = std::get_if<RingPresentation>(&b.value); p && *p == r) return b.name;
      if (const auto* s = std::get_if<PoissonStructure>(&b.value); s && s->owner() == r) return b.ring_label;
    }
    return "?";
  }

  std::string label_of_structure(const PoissonStructure& s) const {
    for (const auto& b : env_.bindings())
      if (const auto* p = std::get_if<PoissonStructure>(&b.value); p && p->owner() == s.owner() && p->matrix() == s.matrix())
        return b.name;
    return "?";
  }

  Options options_;
  std::ostream& out_;
  std::mt19937_64 rng_;
  Resolver resolver_;
  SessionEnv env_;
};

/// Parses, resolves, and runs a whole script. Diagnostics go to `err`.
inline int run_script(std::string_view text, const Options& options, std::ostream& out, std::ostream& err) {
  Script script;
  Session session(options, out);
  try {
    script = parse(text);
    session.resolve(script);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
  Session runner(options, out);
  for (const auto& st : script.statements) {
    try {
      runner.execute(st);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return exit_math;
    }
  }
  return exit_ok;
}

/// Parse and resolve only.
inline int check_script(std::string_view text, std::ostream& out, std::ostream& err) {
  try {
    const Script script = parse(text);
    Resolver().resolve(script);
    out << "ok: " << script.statements.size() << " statements\n";
    return exit_ok;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse;
  }
}

}  // namespace pck::dsl
