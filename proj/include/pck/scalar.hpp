#pragma once

#include <gmpxx.h>

#include <cmath>
#include <ostream>
#include <string>

#include "pck/error.hpp"

namespace pck {

/// Exact element a + b*sqrt(d) of Q or of a real quadratic field Q(sqrt(d)).
///
/// The extension tag d is square-free and > 1. It is carried only while the
/// radical part b is nonzero; a scalar with b = 0 always reports d = 0, so two
/// scalars compare equal exactly when their (a, b, d) triples agree. Mixing
/// two different nonzero tags raises FieldError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : rational_(v) {}
  Scalar(long v) : rational_(v) {}
  Scalar(mpq_class r) : rational_(std::move(r)) { rational_.canonicalize(); }
  Scalar(mpq_class a, mpq_class b, unsigned d)
      : rational_(std::move(a)), radical_(std::move(b)), root_(d) {
    rational_.canonicalize();
    radical_.canonicalize();
    if (radical_ != 0) check_root(d);
    normalize();
  }

  /// sqrt(d) for square-free d > 1.
  static Scalar sqrt(unsigned d) { return Scalar(0, 1, d); }

  static bool is_square_free(unsigned long d) {
    if (d < 2) return false;
    for (unsigned long p = 2; p * p <= d; ++p)
      if (d % (p * p) == 0) return false;
    return true;
  }

  const mpq_class& rational_part() const { return rational_; }
  const mpq_class& radical_part() const { return radical_; }
  unsigned root() const { return root_; }

  bool is_zero() const { return rational_ == 0 && radical_ == 0; }
  bool is_rational() const { return radical_ == 0; }
  bool is_one() const { return rational_ == 1 && radical_ == 0; }

  Scalar operator-() const {
    Scalar r = *this;
    r.rational_ = -r.rational_;
    r.radical_ = -r.radical_;
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    root_ = common_root(o);
    rational_ += o.rational_;
    radical_ += o.radical_;
    normalize();
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    root_ = common_root(o);
    rational_ -= o.rational_;
    radical_ -= o.radical_;
    normalize();
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    if (o.radical_ == 0) {
      rational_ *= o.rational_;
      radical_ *= o.rational_;
    } else if (radical_ == 0) {
      radical_ = rational_ * o.radical_;
      rational_ *= o.rational_;
      root_ = o.root_;
    } else {
      const unsigned d = common_root(o);
      mpq_class a = rational_ * o.rational_ + radical_ * o.radical_ * d;
      mpq_class b = rational_ * o.radical_ + radical_ * o.rational_;
      rational_ = std::move(a);
      radical_ = std::move(b);
      root_ = d;
    }
    normalize();
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  Scalar inverse() const {
    if (is_zero()) throw MathError("division by zero scalar");
    if (radical_ == 0) return Scalar(mpq_class(1 / rational_));
    // (a + b r)^-1 = (a - b r) / (a^2 - d b^2); the norm is nonzero for square-free d.
    mpq_class norm = rational_ * rational_ - radical_ * radical_ * root_;
    return Scalar(rational_ / norm, -radical_ / norm, root_);
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.root_ == b.root_ && a.rational_ == b.rational_ &&
           a.radical_ == b.radical_;
  }

  double to_double() const {
    double v = rational_.get_d();
    if (radical_ != 0) v += radical_.get_d() * std::sqrt(static_cast<double>(root_));
    return v;
  }

  /// Canonical text: `a/b`, `c/e*sqrt(d)` or `a/b+c/e*sqrt(d)`; integers
  /// print without a denominator and a unit radical coefficient is elided.
  std::string to_string() const {
    if (radical_ == 0) return rational_.get_str();
    std::string rad;
    if (radical_ == 1)
      rad = "sqrt(" + std::to_string(root_) + ")";
    else if (radical_ == -1)
      rad = "-sqrt(" + std::to_string(root_) + ")";
    else
      rad = radical_.get_str() + "*sqrt(" + std::to_string(root_) + ")";
    if (rational_ == 0) return rad;
    return rational_.get_str() + (rad.front() == '-' ? "" : "+") + rad;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  static void check_root(unsigned d) {
    if (!is_square_free(d))
      throw FieldError("sqrt(" + std::to_string(d) +
                       ") is not a square-free extension > 1");
  }

  unsigned common_root(const Scalar& o) const {
    if (o.radical_ == 0) return root_;
    if (radical_ == 0) return o.root_;
    if (root_ != o.root_)
      throw FieldError("mixed extensions sqrt(" + std::to_string(root_) +
                       ") and sqrt(" + std::to_string(o.root_) + ")");
    return root_;
  }

  void normalize() {
    if (radical_ == 0) root_ = 0;
  }

  mpq_class rational_{0};
  mpq_class radical_{0};
  unsigned root_ = 0;
};

}  // namespace pck
