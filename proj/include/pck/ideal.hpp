#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "pck/groebner.hpp"
#include "pck/polynomial.hpp"

namespace pck {

/// Polynomial ideal given by generators, with a lazily computed reduced
/// Gröbner basis shared between copies.
///
/// The zero ideal is <0>: its basis is empty and normal_form is the identity.
class Ideal {
 public:
  Ideal() : Ideal(0, {}) {}

  Ideal(std::size_t arity, std::vector<Polynomial> generators,
        MonomialOrder order = MonomialOrder::grevlex())
      : state_(std::make_shared<State>()) {
    for (const auto& g : generators)
      if (g.arity() != arity) throw MathError("ideal generator arity mismatch");
    if (generators.empty()) generators.push_back(Polynomial(arity));
    state_->arity = arity;
    state_->order = order;
    state_->generators = std::move(generators);
  }

  static Ideal zero(std::size_t arity, MonomialOrder order = MonomialOrder::grevlex()) {
    return Ideal(arity, {}, order);
  }

  std::size_t arity() const { return state_->arity; }
  const MonomialOrder& order() const { return state_->order; }
  const std::vector<Polynomial>& generators() const { return state_->generators; }

  /// Reduced monic Gröbner basis, ascending by leading monomial.
  const std::vector<Polynomial>& groebner_basis() const {
    ensure_basis();
    return state_->basis;
  }

  bool is_zero() const { return groebner_basis().empty(); }

  bool is_unit() const {
    const auto& b = groebner_basis();
    return b.size() == 1 && b.front().is_constant();
  }

  Polynomial normal_form(const Polynomial& p) const {
    if (p.arity() != arity()) throw MathError("normal form arity mismatch");
    ensure_basis();
    if (state_->work.empty() || p.is_zero()) return p;
    auto rem = detail::reduce(detail::to_work(p, order()).terms, state_->work, order());
    return Polynomial::from_terms(arity(), std::move(rem));
  }

  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

  /// Ideal sum; keeps this ideal's order.
  Ideal operator+(const Ideal& other) const {
    if (other.arity() != arity()) throw MathError("ideal sum arity mismatch");
    std::vector<Polynomial> gens;
    for (const auto& g : generators())
      if (!g.is_zero()) gens.push_back(g);
    for (const auto& g : other.generators())
      if (!g.is_zero()) gens.push_back(g);
    return Ideal(arity(), std::move(gens), order());
  }

  Ideal with_order(MonomialOrder order) const { return Ideal(arity(), generators(), order); }

 private:
  struct State {
    std::size_t arity = 0;
    MonomialOrder order;
    std::vector<Polynomial> generators;
    std::once_flag once;
    std::vector<detail::WorkPoly> work;
    std::vector<Polynomial> basis;
  };

  void ensure_basis() const {
    std::call_once(state_->once, [s = state_.get()] {
      std::vector<detail::WorkPoly> input;
      for (const auto& g : s->generators) input.push_back(detail::to_work(g, s->order));
      s->work = detail::buchberger(std::move(input), s->order);
      for (const auto& w : s->work) s->basis.push_back(detail::from_work(s->arity, w));
    });
  }

  std::shared_ptr<State> state_;
};

inline const std::vector<Polynomial>& groebner_basis(const Ideal& ideal) {
  return ideal.groebner_basis();
}

inline Polynomial normal_form(const Polynomial& p, const Ideal& ideal) {
  return ideal.normal_form(p);
}

/// (J : a) = { d : a*d in J }, via J ∩ <a> computed by eliminating an
/// auxiliary variable t from t*J + (1 - t)*<a>.
inline Ideal ideal_quotient(const Ideal& j, const Polynomial& a) {
  if (a.arity() != j.arity()) throw MathError("ideal quotient arity mismatch");
  if (a.is_zero()) throw MathError("ideal quotient by the zero polynomial");
  if (j.is_zero()) return Ideal::zero(j.arity(), j.order());
  const std::size_t n = j.arity();
  const Polynomial t = Polynomial::variable(n + 1, 0);
  const Polynomial one = Polynomial::constant(n + 1, Scalar(1));
  std::vector<Polynomial> gens;
  for (const auto& g : j.groebner_basis()) gens.push_back(t * extend_front(g, 1));
  gens.push_back((one - t) * extend_front(a, 1));
  Ideal lifted(n + 1, std::move(gens), MonomialOrder::block(1));

  std::vector<Polynomial> quotient;
  for (const auto& h : lifted.groebner_basis()) {
    bool uses_t = std::any_of(h.terms().begin(), h.terms().end(),
                              [](const Term& term) { return term.monomial[0] != 0; });
    if (uses_t) continue;
    quotient.push_back(divide_exact(drop_front(h, 1), a));
  }
  return Ideal(n, std::move(quotient), j.order());
}

}  // namespace pck
