#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "pck/monomial.hpp"
#include "pck/polynomial.hpp"

namespace pck {

namespace detail {

/// Term list sorted strictly descending in a working order.
struct WorkPoly {
  std::vector<Term> terms;
  std::uint64_t sugar = 0;

  bool empty() const { return terms.empty(); }
  const Monomial& lead() const { return terms.front().monomial; }
  const Scalar& lead_coeff() const { return terms.front().coeff; }
};

inline WorkPoly to_work(const Polynomial& p, const MonomialOrder& order) {
  WorkPoly w;
  w.terms = p.terms();
  if (order != Polynomial::storage_order)
    std::sort(w.terms.begin(), w.terms.end(), [&](const Term& a, const Term& b) {
      return order.greater(a.monomial, b.monomial);
    });
  w.sugar = p.degree();
  return w;
}

inline Polynomial from_work(std::size_t arity, const WorkPoly& w) {
  return Polynomial::from_terms(arity, w.terms);
}

inline void make_monic(WorkPoly& w) {
  if (w.empty() || w.lead_coeff().is_one()) return;
  const Scalar inv = w.lead_coeff().inverse();
  for (auto& t : w.terms) t.coeff *= inv;
}

/// Returns p[from..] - c * m * g, keeping descending order.
inline std::vector<Term> sub_scaled(const std::vector<Term>& p, std::size_t from,
                                   const Scalar& c, const Monomial& m,
                                   const std::vector<Term>& g, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial gm = g[j].monomial * m;
    if (i == p.size()) {
      out.push_back({std::move(gm), -(c * g[j].coeff)});
      ++j;
      continue;
    }
    auto cmp = order.compare(p[i].monomial, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(gm), -(c * g[j].coeff)});
      ++j;
    } else {
      Scalar v = p[i].coeff - c * g[j].coeff;
      if (!v.is_zero()) out.push_back({std::move(gm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

/// Full reduction of p by `basis`. When `quotients` is non-null it receives the
/// multipliers, one per basis element, in working-order term lists.
inline std::vector<Term> reduce(std::vector<Term> p, const std::vector<WorkPoly>& basis,
                                const MonomialOrder& order,
                                std::vector<std::vector<Term>>* quotients = nullptr) {
  std::vector<Term> remainder;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term& head = p[pos];
    const WorkPoly* divisor = nullptr;
    std::size_t which = 0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!basis[k].empty() && basis[k].lead().divides(head.monomial)) {
        divisor = &basis[k];
        which = k;
        break;
      }
    }
    if (!divisor) {
      remainder.push_back(head);
      ++pos;
      continue;
    }
    Monomial m = head.monomial / divisor->lead();
    Scalar c = head.coeff / divisor->lead_coeff();
    if (quotients) (*quotients)[which].push_back({m, c});
    p = sub_scaled(p, pos, c, m, divisor->terms, order);
    pos = 0;
  }
  return remainder;
}

inline WorkPoly s_polynomial(const WorkPoly& f, const WorkPoly& g, const MonomialOrder& order) {
  Monomial l = Monomial::lcm(f.lead(), g.lead());
  Monomial mf = l / f.lead();
  Monomial mg = l / g.lead();
  std::vector<Term> a;
  a.reserve(f.terms.size());
  for (const auto& t : f.terms) a.push_back({t.monomial * mf, t.coeff / f.lead_coeff()});
  WorkPoly s;
  s.terms = sub_scaled(a, 0, g.lead_coeff().inverse(), mg, g.terms, order);
  s.sugar = std::max(f.sugar + l.degree() - f.lead().degree(),
                     g.sugar + l.degree() - g.lead().degree());
  return s;
}

/// Buchberger's algorithm with the sugar selection strategy, the coprime
/// criterion, and the chain criterion. Returns the reduced, monic basis
/// sorted ascending by leading monomial.
inline std::vector<WorkPoly> buchberger(std::vector<WorkPoly> input, const MonomialOrder& order) {
  std::vector<WorkPoly> g;
  for (auto& f : input) {
    if (f.empty()) continue;
    make_monic(f);
    g.push_back(std::move(f));
  }
  if (g.empty()) return g;

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
  };
  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_pairs_for = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      Monomial l = Monomial::lcm(g[k].lead(), g[n].lead());
      std::uint64_t sugar = std::max(g[k].sugar + l.degree() - g[k].lead().degree(),
                                     g[n].sugar + l.degree() - g[n].lead().degree());
      queue.push_back({k, n, std::move(l), sugar});
      pending.insert({k, n});
    }
  };
  for (std::size_t n = 1; n < g.size(); ++n) add_pairs_for(n);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      auto c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::pair(a.j, a.i) < std::pair(b.j, b.i);
    });
    Pair p = *best;
    queue.erase(best);
    pending.erase({p.i, p.j});

    if (Monomial::coprime(g[p.i].lead(), g[p.j].lead())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (g[k].lead().divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k)) chain = true;
    }
    if (chain) continue;

    WorkPoly s = s_polynomial(g[p.i], g[p.j], order);
    WorkPoly h;
    h.terms = reduce(std::move(s.terms), g, order);
    h.sugar = s.sugar;
    if (h.empty()) continue;
    make_monic(h);
    g.push_back(std::move(h));
    add_pairs_for(g.size() - 1);
  }

  // Minimize: drop elements whose leading monomial is divisible by another's.
  std::sort(g.begin(), g.end(),
            [&](const WorkPoly& a, const WorkPoly& b) { return order.greater(b.lead(), a.lead()); });
  std::vector<WorkPoly> minimal;
  for (auto& f : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const WorkPoly& m) { return m.lead().divides(f.lead()); });
    if (!redundant) minimal.push_back(std::move(f));
  }
  // Interreduce tails.
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<WorkPoly> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    std::vector<Term> tail(minimal[k].terms.begin() + 1, minimal[k].terms.end());
    std::vector<Term> reduced = reduce(std::move(tail), others, order);
    std::vector<Term> full{minimal[k].terms.front()};
    full.insert(full.end(), reduced.begin(), reduced.end());
    minimal[k].terms = std::move(full);
    make_monic(minimal[k]);
  }
  return minimal;
}

}  // namespace detail

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division of p by `divisors` in `order`:
/// p = sum quotients[i] * divisors[i] + remainder.
inline DivisionResult divide(const Polynomial& p, std::span<const Polynomial> divisors,
                             const MonomialOrder& order = MonomialOrder::grevlex()) {
  std::vector<detail::WorkPoly> work;
  for (const auto& d : divisors) {
    if (d.arity() != p.arity()) throw MathError("division arity mismatch");
    work.push_back(detail::to_work(d, order));
  }
  std::vector<std::vector<Term>> q(divisors.size());
  auto rem = detail::reduce(detail::to_work(p, order).terms, work, order, &q);
  DivisionResult out;
  for (auto& terms : q) out.quotients.push_back(Polynomial::from_terms(p.arity(), std::move(terms)));
  out.remainder = Polynomial::from_terms(p.arity(), std::move(rem));
  return out;
}

/// Exact quotient p / a; throws if a does not divide p.
inline Polynomial divide_exact(const Polynomial& p, const Polynomial& a) {
  if (a.is_zero()) throw MathError("division by the zero polynomial");
  auto r = divide(p, std::span<const Polynomial>(&a, 1));
  if (!r.remainder.is_zero()) throw MathError("polynomial division is not exact");
  return r.quotients.front();
}

/// Embeds p into k + arity variables, new variables first.
inline Polynomial extend_front(const Polynomial& p, std::size_t k) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    std::vector<Monomial::exponent_type> e(k, 0);
    e.insert(e.end(), t.monomial.exponents().begin(), t.monomial.exponents().end());
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(p.arity() + k, std::move(terms));
}

/// Inverse of extend_front; requires the first k variables to be absent.
inline Polynomial drop_front(const Polynomial& p, std::size_t k) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < k; ++i)
      if (t.monomial[i] != 0) throw MathError("drop_front on a polynomial using dropped variables");
    terms.push_back({t.monomial.drop_front(k), t.coeff});
  }
  return Polynomial::from_terms(p.arity() - k, std::move(terms));
}

}  // namespace pck
