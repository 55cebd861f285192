#pragma once

// Standard rings and structures used across the suites.

#include <string>
#include <vector>

#include "pck/poisson.hpp"

namespace pck::fixtures {

inline Polynomial var(const RingPresentation& a, std::size_t i) {
  return Polynomial::variable(a.arity(), i);
}

/// Canonical structure on R^{2k} with variables (q1, p1, ..., qk, pk) and {q_i, p_i} = 1.
inline PoissonStructure canonical(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) {
    names.push_back(k == 1 ? "q" : "q" + std::to_string(i));
    names.push_back(k == 1 ? "p" : "p" + std::to_string(i));
  }
  auto ring = make_presentation(names, {});
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Polynomial>> pairs;
  for (std::size_t i = 0; i < k; ++i)
    pairs.push_back({{2 * i, 2 * i + 1}, Polynomial::constant(2 * k, Scalar(1))});
  return PoissonStructure::from_pairs(ring, pairs, true);
}

/// Linear structure on so(3)*: {x,y} = z, {y,z} = x, {z,x} = y.
inline PoissonStructure so3_on(const RingPresentation& ring) {
  auto x = var(ring, 0), y = var(ring, 1), z = var(ring, 2);
  return PoissonStructure::from_pairs(ring, {{{0, 1}, z}, {{1, 2}, x}, {{2, 0}, y}}, true);
}

inline PoissonStructure so3() { return so3_on(make_presentation({"x", "y", "z"}, {})); }

inline Polynomial sphere_relation(std::size_t n = 3) {
  auto x = Polynomial::variable(n, 0), y = Polynomial::variable(n, 1), z = Polynomial::variable(n, 2);
  return x * x + y * y + z * z - Scalar(1);
}

/// {x1,x2} = x3, {x2,x3} = x2, {x1,x3} = 0: antisymmetric but not Poisson.
inline PoissonStructure counter_structure() {
  auto ring = make_presentation({"x1", "x2", "x3"}, {});
  return PoissonStructure::from_pairs(ring, {{{0, 1}, var(ring, 2)}, {{1, 2}, var(ring, 1)}}, true);
}

/// R[p_x, p_y] with the zero bracket and moment mu = p_x + sqrt(2) p_y.
inline MomentData torus_moment() {
  auto ring = make_presentation({"p_x", "p_y"}, {}, MonomialOrder::lex());
  auto zero = PoissonStructure::zero(ring);
  return MomentData(zero, {ring.element(var(ring, 0) + Scalar::sqrt(2) * var(ring, 1))}, {});
}

/// Diagonal S^1 on canonical R^4, mu = ½(q1² + p1²) + ½(q2² + p2²).
inline MomentData circle_on_r4() {
  auto s = canonical(2);
  const auto& r = s.owner();
  auto q1 = var(r, 0), p1 = var(r, 1), q2 = var(r, 2), p2 = var(r, 3);
  const Scalar half(mpq_class(1, 2));
  return MomentData(s, {r.element(half * (q1 * q1 + p1 * p1) + half * (q2 * q2 + p2 * p2))}, {});
}

inline StructureConstants so3_constants() {
  StructureConstants f(3, std::vector<std::vector<Scalar>>(3, std::vector<Scalar>(3)));
  // [e_a, e_b] = ε_abc e_c
  auto set = [&](std::size_t a, std::size_t b, std::size_t c) {
    f[a][b][c] = Scalar(1);
    f[b][a][c] = Scalar(-1);
  };
  set(0, 1, 2);
  set(1, 2, 0);
  set(2, 0, 1);
  return f;
}

/// Angular momentum of the lifted rotation action on T*R^3 with variables
/// (q1, p1, q2, p2, q3, p3).
inline std::vector<Polynomial> angular_momentum(const RingPresentation& r) {
  auto q1 = var(r, 0), p1 = var(r, 1), q2 = var(r, 2), p2 = var(r, 3), q3 = var(r, 4), p3 = var(r, 5);
  return {q2 * p3 - q3 * p2, q3 * p1 - q1 * p3, q1 * p2 - q2 * p1};
}

}  // namespace pck::fixtures
