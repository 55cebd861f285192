#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pck {

/// Exponent vector x_0^e_0 ... x_{n-1}^e_{n-1}.
class Monomial {
 public:
  using exponent_type = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  Monomial(std::initializer_list<exponent_type> e) : exps_(e) {}
  explicit Monomial(std::vector<exponent_type> e) : exps_(std::move(e)) {}

  static Monomial variable(std::size_t arity, std::size_t i, exponent_type power = 1) {
    Monomial m(arity);
    m.exps_[i] = power;
    return m;
  }

  std::size_t arity() const { return exps_.size(); }
  exponent_type operator[](std::size_t i) const { return exps_[i]; }
  exponent_type& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<exponent_type>& exponents() const { return exps_; }

  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > o.exps_[i]) return false;
    return true;
  }

  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
    return r;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
      if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
    return true;
  }

  /// Drops the first `count` variables.
  Monomial drop_front(std::size_t count) const {
    return Monomial(std::vector<exponent_type>(exps_.begin() + count, exps_.end()));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<exponent_type> exps_;
};

/// Term order on monomials of a fixed arity.
///
/// `block` orders compare the first `block_size` variables by grevlex, and
/// break ties by grevlex on the remaining variables; they eliminate the
/// leading block.
class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, block };

  constexpr MonomialOrder() = default;
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static constexpr MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static constexpr MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::block, k); }

  constexpr Kind kind() const { return kind_; }
  constexpr std::size_t block_size() const { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::lex:
        for (std::size_t i = 0; i < a.arity(); ++i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      case Kind::grevlex:
        return grevlex_range(a, b, 0, a.arity());
      case Kind::block: {
        auto c = grevlex_range(a, b, 0, block_);
        if (c != 0) return c;
        return grevlex_range(a, b, block_, a.arity());
      }
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const {
    switch (kind_) {
      case Kind::lex: return "lex";
      case Kind::grevlex: return "grevlex";
      case Kind::block: return "block(" + std::to_string(block_) + ")";
    }
    return "?";
  }

  friend constexpr bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(Kind k, std::size_t b) : kind_(k), block_(b) {}

  static std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b,
                                            std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }

  Kind kind_ = Kind::grevlex;
  std::size_t block_ = 0;
};

/// All monomials of total degree <= d in `arity` variables, ascending in grevlex.
inline std::vector<Monomial> monomials_up_to(std::size_t arity, std::uint32_t d) {
  std::vector<Monomial> out;
  Monomial cur(arity);
  // Enumerate exponent vectors with sum <= d by odometer recursion.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == arity) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  const auto order = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
  return out;
}

}  // namespace pck
