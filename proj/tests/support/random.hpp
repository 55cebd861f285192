#pragma once

// Random generators shared by the property tests.

#include <random>
#include <vector>

#include "pck/monomial.hpp"
#include "pck/polynomial.hpp"
#include "pck/scalar.hpp"

namespace pck::test {

inline long uniform_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Small rational, or a + b*sqrt(root) when root != 0.
inline Scalar random_scalar(std::mt19937_64& rng, unsigned root = 0) {
  auto q = [&] { return mpq_class(uniform_int(rng, -5, 5), uniform_int(rng, 1, 4)); };
  if (root == 0 || uniform_int(rng, 0, 2) == 0) return Scalar(q());
  return Scalar(q(), q(), root);
}

inline Scalar random_nonzero_scalar(std::mt19937_64& rng, unsigned root = 0) {
  Scalar s;
  do s = random_scalar(rng, root);
  while (s.is_zero());
  return s;
}

/// Random polynomial of total degree <= max_degree with up to max_terms terms.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t arity,
                                    std::uint32_t max_degree, std::size_t max_terms = 4,
                                    unsigned root = 0) {
  const auto monos = monomials_up_to(arity, max_degree);
  std::vector<Term> terms;
  const auto count = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(max_terms)));
  for (std::size_t k = 0; k < count; ++k) {
    const auto& m = monos[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(monos.size()) - 1))];
    terms.push_back({m, random_scalar(rng, root)});
  }
  return Polynomial::from_terms(arity, std::move(terms));
}

/// Variables x_0..x_{n-1} as polynomials.
inline std::vector<Polynomial> variables(std::size_t n) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Polynomial::variable(n, i));
  return v;
}

inline Polynomial constant(std::size_t n, const Scalar& c) { return Polynomial::constant(n, c); }

}  // namespace pck::test
