#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "pck/ideal.hpp"
#include "pck/polynomial.hpp"

namespace pck {

enum class PointDetermined { yes, no, unknown };

class RingElement;

/// Finitely generated C-infinity ring modeled as P/J with P = R[x_1..x_N].
///
/// Handles share an immutable body; two presentations are the same ring only
/// if they are the same object, so elements of separately built but identical
/// presentations do not mix.
class RingPresentation {
 public:
  RingPresentation() = default;

  RingPresentation(std::vector<std::string> variables, std::vector<Polynomial> relations,
                   MonomialOrder order = MonomialOrder::grevlex()) {
    if (variables.empty()) throw MathError("a presentation needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
      if (v.empty()) throw MathError("empty variable name");
      if (!seen.insert(v).second) throw MathError("duplicate variable '" + v + "'");
    }
    const std::size_t n = variables.size();
    std::vector<Polynomial> nonzero;
    for (auto& r : relations) {
      if (r.arity() != n)
        throw MathError("relation arity " + std::to_string(r.arity()) + " does not match " +
                        std::to_string(n) + " variables");
      if (!r.is_zero()) nonzero.push_back(std::move(r));
    }
    auto body = std::make_shared<Body>();
    body->variables = std::move(variables);
    body->ideal = Ideal(n, std::move(nonzero), order);
    body->point_determined =
        body->ideal.is_zero() ? PointDetermined::yes : PointDetermined::unknown;
    body_ = std::move(body);
  }

  RingPresentation(std::vector<std::string> variables, Ideal ideal)
      : RingPresentation(std::move(variables), ideal.generators(), ideal.order()) {}

  std::size_t arity() const { return body().variables.size(); }
  const std::vector<std::string>& variables() const { return body().variables; }
  const Ideal& ideal() const { return body().ideal; }
  PointDetermined point_determined() const { return body().point_determined; }
  bool is_free() const { return body().ideal.is_zero(); }
  bool valid() const { return body_ != nullptr; }

  /// A copy carrying a user-certified point-determined flag.
  RingPresentation certified(PointDetermined flag) const {
    RingPresentation r;
    auto body = std::make_shared<Body>(*body_);
    if (body->ideal.is_zero() && flag != PointDetermined::yes)
      throw MathError("free presentations are point determined");
    body->point_determined = flag;
    r.body_ = std::move(body);
    return r;
  }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < arity(); ++i)
      if (variables()[i] == name) return i;
    throw MathError("unknown variable '" + name + "'");
  }

  Polynomial normal_form(const Polynomial& p) const { return ideal().normal_form(p); }

  RingElement element(const Polynomial& p) const;
  RingElement variable(std::size_t i) const;
  RingElement constant(const Scalar& c) const;
  RingElement zero() const;

  std::string to_string(const Polynomial& p) const { return p.to_string(variables()); }

  /// `ring NAME (v1, ...) relations { p1; ... }` using reduced-basis relations
  /// as listed at construction.
  std::string serialize(const std::string& name) const {
    std::string out = "ring " + name + " (";
    for (std::size_t i = 0; i < arity(); ++i) out += (i ? ", " : "") + variables()[i];
    out += ")";
    std::vector<Polynomial> rels;
    for (const auto& g : ideal().generators())
      if (!g.is_zero()) rels.push_back(g);
    if (!rels.empty()) {
      out += " relations {";
      for (const auto& r : rels) out += " " + to_string(r) + ";";
      out += " }";
    }
    const bool lex = ideal().order() == MonomialOrder::lex();
    if (lex) out += " order lex";
    if (rels.empty() || lex) out += ";";
    return out;
  }

  friend bool operator==(const RingPresentation& a, const RingPresentation& b) {
    return a.body_ == b.body_;
  }

 private:
  struct Body {
    std::vector<std::string> variables;
    Ideal ideal;
    PointDetermined point_determined = PointDetermined::unknown;
  };

  const Body& body() const {
    if (!body_) throw MathError("use of an empty presentation");
    return *body_;
  }

  std::shared_ptr<const Body> body_;
};

inline RingPresentation make_presentation(std::vector<std::string> variables,
                                          std::vector<Polynomial> relations,
                                          MonomialOrder order = MonomialOrder::grevlex()) {
  return RingPresentation(std::move(variables), std::move(relations), order);
}

/// Coset a + J, stored by its normal form.
class RingElement {
 public:
  RingElement() = default;
  RingElement(RingPresentation owner, const Polynomial& p)
      : owner_(std::move(owner)), rep_(owner_.normal_form(check(p))) {}

  const RingPresentation& owner() const { return owner_; }
  const Polynomial& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  std::string to_string() const { return owner_.to_string(rep_); }

  RingElement operator-() const { return RingElement(owner_, -rep_); }
  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    same_owner(a, b);
    return RingElement(a.owner_, a.rep_ + b.rep_);
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    same_owner(a, b);
    return RingElement(a.owner_, a.rep_ - b.rep_);
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    same_owner(a, b);
    return RingElement(a.owner_, a.rep_ * b.rep_);
  }
  friend RingElement operator*(const Scalar& c, const RingElement& a) {
    return RingElement(a.owner_, c * a.rep_);
  }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.owner_ == b.owner_ && a.rep_ == b.rep_;
  }

  static void same_owner(const RingElement& a, const RingElement& b) {
    if (!(a.owner_ == b.owner_)) throw MathError("ring elements belong to different rings");
  }

 private:
  const Polynomial& check(const Polynomial& p) const {
    if (p.arity() != owner_.arity())
      throw MathError("element arity " + std::to_string(p.arity()) + " does not match ring arity " +
                      std::to_string(owner_.arity()));
    return p;
  }

  RingPresentation owner_;
  Polynomial rep_;
};

inline RingElement RingPresentation::element(const Polynomial& p) const { return {*this, p}; }
inline RingElement RingPresentation::variable(std::size_t i) const {
  return {*this, Polynomial::variable(arity(), i)};
}
inline RingElement RingPresentation::constant(const Scalar& c) const {
  return {*this, Polynomial::constant(arity(), c)};
}
inline RingElement RingPresentation::zero() const { return {*this, Polynomial(arity())}; }

inline RingElement element(const RingPresentation& a, const Polynomial& p) { return a.element(p); }

/// True iff every generator of J vanishes exactly at `coords`.
inline bool is_point(const RingPresentation& a, std::span<const Scalar> coords) {
  if (coords.size() != a.arity()) throw MathError("point has wrong number of coordinates");
  for (const auto& g : a.ideal().generators())
    if (!g.evaluate(coords).is_zero()) return false;
  return true;
}

/// R-point of a presentation, i.e. a point of the zero set Z_J.
class RPoint {
 public:
  RPoint(RingPresentation owner, std::vector<Scalar> coords)
      : owner_(std::move(owner)), coords_(std::move(coords)) {
    if (!is_point(owner_, coords_)) throw MathError("coordinates are not a point of the ring");
  }

  const RingPresentation& owner() const { return owner_; }
  const std::vector<Scalar>& coords() const { return coords_; }

  friend bool operator==(const RPoint& a, const RPoint& b) {
    return a.owner_ == b.owner_ && a.coords_ == b.coords_;
  }

 private:
  RingPresentation owner_;
  std::vector<Scalar> coords_;
};

inline Scalar evaluate(const RingElement& a, const RPoint& x) {
  if (!(a.owner() == x.owner())) throw MathError("element and point belong to different rings");
  return a.rep().evaluate(x.coords());
}

/// Decides a ∈ I_x: some d with x(d) != 0 and a*d ∈ J. Such d exist iff some
/// generator of (J : a) does not vanish at x.
inline bool germ_vanishes(const RingElement& a, const RPoint& x) {
  if (!(a.owner() == x.owner())) throw MathError("element and point belong to different rings");
  if (a.is_zero()) return true;
  const Ideal witnesses = ideal_quotient(a.owner().ideal(), a.rep());
  for (const auto& d : witnesses.generators())
    if (!d.evaluate(x.coords()).is_zero()) return true;
  return false;
}

/// Ring map determined by the images of the source variables.
class RingMap {
 public:
  RingMap(RingPresentation source, RingPresentation target, std::vector<RingElement> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.arity())
      throw MathError("ring map needs " + std::to_string(source_.arity()) + " images, got " +
                      std::to_string(images_.size()));
    for (const auto& img : images_)
      if (!(img.owner() == target_)) throw MathError("ring map image is not in the target ring");
    for (const auto& g : source_.ideal().generators()) {
      if (g.is_zero()) continue;
      if (!apply_polynomial(g).is_zero())
        throw MathError("ill-defined ring map: relation " + source_.to_string(g) +
                        " does not map to zero");
    }
  }

  const RingPresentation& source() const { return source_; }
  const RingPresentation& target() const { return target_; }
  const std::vector<RingElement>& images() const { return images_; }

  RingElement apply_polynomial(const Polynomial& p) const {
    std::vector<Polynomial> reps;
    for (const auto& img : images_) reps.push_back(img.rep());
    return target_.element(p.substitute(reps, target_.arity()));
  }

  RingElement operator()(const RingElement& a) const {
    if (!(a.owner() == source_)) throw MathError("element is not in the map's source");
    return apply_polynomial(a.rep());
  }

  /// Images are the classes of the target variables and the arities agree.
  bool is_projection() const {
    if (source_.arity() != target_.arity()) return false;
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (!(images_[i] == target_.variable(i))) return false;
    return true;
  }

  std::string serialize(const std::string& name, const std::string& src,
                        const std::string& tgt) const {
    std::string out = "map " + name + " : " + src + " -> " + tgt + " {";
    for (std::size_t i = 0; i < images_.size(); ++i)
      out += " " + source_.variables()[i] + " -> " + images_[i].to_string() + ";";
    return out + " }";
  }

 private:
  RingPresentation source_;
  RingPresentation target_;
  std::vector<RingElement> images_;
};

inline RingMap make_ring_map(const RingPresentation& source, const RingPresentation& target,
                             std::vector<RingElement> images) {
  return RingMap(source, target, std::move(images));
}

inline RingMap identity_map(const RingPresentation& a) {
  std::vector<RingElement> images;
  for (std::size_t i = 0; i < a.arity(); ++i) images.push_back(a.variable(i));
  return RingMap(a, a, std::move(images));
}

/// outer ∘ inner.
inline RingMap compose(const RingMap& outer, const RingMap& inner) {
  if (!(inner.target() == outer.source())) throw MathError("ring maps are not composable");
  std::vector<RingElement> images;
  for (const auto& img : inner.images()) images.push_back(outer(img));
  return RingMap(inner.source(), outer.target(), std::move(images));
}

/// Spec on points: x ↦ x ∘ φ, computed by evaluating the images at x.
inline RPoint spec_on_points(const RingMap& phi, const RPoint& x) {
  if (!(x.owner() == phi.target())) throw MathError("point is not in the map's target");
  std::vector<Scalar> coords;
  for (const auto& img : phi.images()) coords.push_back(img.rep().evaluate(x.coords()));
  return RPoint(phi.source(), std::move(coords));
}

/// Floating-point shadow of spec_on_points used for sampled clouds.
inline std::vector<double> spec_on_points(const RingMap& phi, std::span<const double> x) {
  std::vector<double> coords;
  for (const auto& img : phi.images()) coords.push_back(img.rep().evaluate(x));
  return coords;
}

}  // namespace pck
