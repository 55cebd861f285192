#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pck/error.hpp"
#include "pck/monomial.hpp"
#include "pck/scalar.hpp"

namespace pck {

struct Term {
  Monomial monomial;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Multivariate polynomial over Scalar.
///
/// Terms are kept strictly descending in grevlex with no zero coefficients,
/// so equality of polynomials is equality of term lists.
class Polynomial {
 public:
  static constexpr MonomialOrder storage_order = MonomialOrder::grevlex();

  Polynomial() = default;
  explicit Polynomial(std::size_t arity) : arity_(arity) {}

  static Polynomial constant(std::size_t arity, const Scalar& c) {
    Polynomial p(arity);
    if (!c.is_zero()) p.terms_.push_back({Monomial(arity), c});
    return p;
  }

  static Polynomial variable(std::size_t arity, std::size_t i) {
    if (i >= arity) throw MathError("variable index out of range");
    Polynomial p(arity);
    p.terms_.push_back({Monomial::variable(arity, i), Scalar(1)});
    return p;
  }

  static Polynomial monomial(const Monomial& m, const Scalar& c = Scalar(1)) {
    Polynomial p(m.arity());
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds from arbitrary terms; combines duplicates and drops zeros.
  static Polynomial from_terms(std::size_t arity, std::vector<Term> terms) {
    Polynomial p(arity);
    for (const auto& t : terms)
      if (t.monomial.arity() != arity) throw MathError("term arity mismatch");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
      return storage_order.greater(a.monomial, b.monomial);
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
        p.terms_.back().coeff += t.coeff;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    }
    return p;
  }

  std::size_t arity() const { return arity_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
  }

  /// Constant coefficient (zero if absent).
  Scalar constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
    return Scalar(0);
  }

  Scalar coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.monomial == m) return t.coeff;
    return Scalar(0);
  }

  /// Total degree; the zero polynomial reports 0.
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, Scalar(1));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return merge(a, b, Scalar(-1));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_arity(a, b);
    Polynomial r(a.arity_);
    if (a.is_zero() || b.is_zero()) return r;
    std::vector<Term> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) acc.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
    return from_terms(a.arity_, std::move(acc));
  }

  friend Polynomial operator*(const Scalar& c, const Polynomial& p) {
    Polynomial r(p.arity_);
    if (c.is_zero()) return r;
    r.terms_.reserve(p.size());
    for (const auto& t : p.terms_) r.terms_.push_back({t.monomial, c * t.coeff});
    return r;
  }
  friend Polynomial operator*(const Polynomial& p, const Scalar& c) { return c * p; }
  friend Polynomial operator+(const Polynomial& p, const Scalar& c) {
    return p + constant(p.arity_, c);
  }
  friend Polynomial operator-(const Polynomial& p, const Scalar& c) {
    return p - constant(p.arity_, c);
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(arity_, Scalar(1));
    Polynomial base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// Formal partial derivative with respect to x_i.
  Polynomial derivative(std::size_t i) const {
    if (i >= arity_) throw MathError("derivative index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
      const auto e = t.monomial[i];
      if (e == 0) continue;
      Monomial m = t.monomial;
      m[i] = e - 1;
      out.push_back({std::move(m), t.coeff * Scalar(static_cast<long>(e))});
    }
    // Lowering one exponent can reorder terms under grevlex; re-sort.
    return from_terms(arity_, std::move(out));
  }

  Scalar evaluate(std::span<const Scalar> point) const {
    if (point.size() != arity_) throw MathError("evaluation point has wrong length");
    Scalar sum(0);
    for (const auto& t : terms_) {
      Scalar v = t.coeff;
      for (std::size_t i = 0; i < arity_; ++i)
        for (std::uint32_t k = 0; k < t.monomial[i]; ++k) v *= point[i];
      sum += v;
    }
    return sum;
  }

  double evaluate(std::span<const double> point) const {
    if (point.size() != arity_) throw MathError("evaluation point has wrong length");
    double sum = 0;
    for (const auto& t : terms_) {
      double v = t.coeff.to_double();
      for (std::size_t i = 0; i < arity_; ++i)
        for (std::uint32_t k = 0; k < t.monomial[i]; ++k) v *= point[i];
      sum += v;
    }
    return sum;
  }

  /// Substitutes images[i] for x_i; images share a common arity.
  Polynomial substitute(std::span<const Polynomial> images, std::size_t target_arity) const {
    if (images.size() != arity_) throw MathError("substitution needs one image per variable");
    for (const auto& img : images)
      if (img.arity() != target_arity) throw MathError("substitution image arity mismatch");
    std::vector<std::vector<Polynomial>> powers(arity_);
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target_arity, Scalar(1)));
      while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
      return cache[e];
    };
    Polynomial sum(target_arity);
    for (const auto& t : terms_) {
      Polynomial prod = constant(target_arity, t.coeff);
      for (std::size_t i = 0; i < arity_; ++i)
        if (t.monomial[i]) prod *= power(i, t.monomial[i]);
      sum += prod;
    }
    return sum;
  }

  /// Canonical text with the given variable names (see README for the form).
  std::string to_string(std::span<const std::string> names) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  static void check_arity(const Polynomial& a, const Polynomial& b) {
    if (a.arity_ != b.arity_)
      throw MathError("polynomial arity mismatch (" + std::to_string(a.arity_) + " vs " +
                      std::to_string(b.arity_) + ")");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, const Scalar& sign) {
    check_arity(a, b);
    Polynomial r(a.arity_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const bool negate = !sign.is_one();
    while (i < a.size() || j < b.size()) {
      if (j == b.size() ||
          (i < a.size() && storage_order.greater(a.terms_[i].monomial, b.terms_[j].monomial))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() ||
                 storage_order.greater(b.terms_[j].monomial, a.terms_[i].monomial)) {
        r.terms_.push_back(b.terms_[j++]);
        if (negate) r.terms_.back().coeff = -r.terms_.back().coeff;
      } else {
        Scalar c = negate ? a.terms_[i].coeff - b.terms_[j].coeff
                          : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].monomial, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

/// Free-function forms of the core arithmetic.
enum class ArithOp { add, sub, mul };

inline Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
  switch (op) {
    case ArithOp::add: return p + q;
    case ArithOp::sub: return p - q;
    case ArithOp::mul: return p * q;
  }
  return p;
}

inline Polynomial partial_derivative(const Polynomial& p, std::size_t i) {
  return p.derivative(i);
}

namespace detail {

inline std::string monomial_text(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace detail

inline std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (names.size() != arity_) throw MathError("name list does not match polynomial arity");
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string mono = detail::monomial_text(t.monomial, names);
    std::string piece;
    const Scalar& c = t.coeff;
    if (mono.empty()) {
      piece = c.is_rational() || c.rational_part() == 0 ? c.to_string()
                                                        : "(" + c.to_string() + ")";
    } else if (c.is_one()) {
      piece = mono;
    } else if (c == Scalar(-1)) {
      piece = "-" + mono;
    } else if (c.is_rational() || c.rational_part() == 0) {
      piece = c.to_string() + "*" + mono;
    } else {
      piece = "(" + c.to_string() + ")*" + mono;
    }
    if (out.empty())
      out = piece;
    else if (piece.front() == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

/// Names x1..xn, used when no declared names are at hand.
inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace pck
