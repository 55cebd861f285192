#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pck/cring.hpp"
#include "pck/linalg.hpp"

namespace pck {

enum class JacobiStatus { holds, fails, unchecked };

inline const char* to_string(JacobiStatus s) {
  switch (s) {
    case JacobiStatus::holds: return "holds";
    case JacobiStatus::fails: return "fails";
    case JacobiStatus::unchecked: return "unchecked";
  }
  return "?";
}

using PolyMatrix = std::vector<std::vector<Polynomial>>;

namespace detail {

/// <df ∧ dg, Λ> = Σ_{i<j} c_ij (∂_i f ∂_j g − ∂_j f ∂_i g).
inline Polynomial raw_bracket(const PolyMatrix& c, const Polynomial& f, const Polynomial& g) {
  const std::size_t n = c.size();
  Polynomial sum(f.arity());
  if (f.is_constant() || g.is_constant()) return sum;
  std::vector<Polynomial> df, dg;
  for (std::size_t i = 0; i < n; ++i) {
    df.push_back(f.derivative(i));
    dg.push_back(g.derivative(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c[i][j].is_zero()) continue;
      Polynomial cross = df[i] * dg[j] - df[j] * dg[i];
      if (!cross.is_zero()) sum += c[i][j] * cross;
    }
  return sum;
}

}  // namespace detail

/// Bivector Λ = ½ Σ c_ij ∂_i ∧ ∂_j on a presentation P/J, with the bracket
/// {f, g} = Σ_ij c_ij ∂_i f ∂_j g.
///
/// Construction rejects a non-antisymmetric matrix and, when J ≠ 0, a matrix
/// whose bracket does not preserve J (bracket(g, x_i) ∈ J for all generators g).
class PoissonStructure {
 public:
  PoissonStructure(RingPresentation owner, PolyMatrix c, bool check_jacobi)
      : owner_(std::move(owner)), c_(std::move(c)) {
    const std::size_t n = owner_.arity();
    if (c_.size() != n) throw MathError("bracket matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    for (const auto& row : c_) {
      if (row.size() != n) throw MathError("bracket matrix is not square");
      for (const auto& e : row)
        if (e.arity() != n) throw MathError("bracket matrix entry has wrong arity");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!c_[i][i].is_zero()) throw MathError("bracket matrix has a nonzero diagonal entry");
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(c_[i][j] == -c_[j][i]))
          throw MathError("bracket matrix is not antisymmetric at {" + owner_.variables()[i] + ", " +
                          owner_.variables()[j] + "}");
    }
    for (const auto& g : owner_.ideal().generators()) {
      if (g.is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i)
        if (!owner_.ideal().contains(detail::raw_bracket(c_, g, Polynomial::variable(n, i))))
          throw MathError("bracket does not descend to the quotient: {" + owner_.to_string(g) + ", " +
                          owner_.variables()[i] + "} is not in the relation ideal");
    }
    if (check_jacobi) jacobi_ = compute_jacobi();
  }

  /// Structure from the listed nonzero brackets {x_i, x_j} = c for i != j.
  static PoissonStructure from_pairs(
      const RingPresentation& owner,
      const std::vector<std::pair<std::pair<std::size_t, std::size_t>, Polynomial>>& pairs,
      bool check_jacobi) {
    const std::size_t n = owner.arity();
    PolyMatrix c(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (const auto& [ij, value] : pairs) {
      auto [i, j] = ij;
      if (i >= n || j >= n) throw MathError("bracket index out of range");
      if (i == j) throw MathError("bracket of a variable with itself is zero");
      c[i][j] = value;
      c[j][i] = -value;
    }
    return PoissonStructure(owner, std::move(c), check_jacobi);
  }

  static PoissonStructure zero(const RingPresentation& owner) {
    const std::size_t n = owner.arity();
    return PoissonStructure(owner, PolyMatrix(n, std::vector<Polynomial>(n, Polynomial(n))), true);
  }

  const RingPresentation& owner() const { return owner_; }
  const PolyMatrix& matrix() const { return c_; }
  JacobiStatus jacobi_status() const { return jacobi_; }
  std::size_t arity() const { return owner_.arity(); }

  /// Bracket of ambient polynomials, not reduced.
  Polynomial bracket_polynomials(const Polynomial& f, const Polynomial& g) const {
    return detail::raw_bracket(c_, f, g);
  }

  RingElement bracket(const RingElement& a, const RingElement& b) const {
    check_owner(a);
    check_owner(b);
    return owner_.element(bracket_polynomials(a.rep(), b.rep()));
  }

  RingElement jacobi_defect(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = arity();
    if (i >= n || j >= n || k >= n) throw MathError("jacobi index out of range");
    if (i == j || j == k || i == k) throw MathError("jacobi defect needs distinct indices");
    auto x = [&](std::size_t m) { return Polynomial::variable(n, m); };
    Polynomial sum = bracket_polynomials(x(i), bracket_polynomials(x(j), x(k))) +
                     bracket_polynomials(x(j), bracket_polynomials(x(k), x(i))) +
                     bracket_polynomials(x(k), bracket_polynomials(x(i), x(j)));
    return owner_.element(sum);
  }

  /// Jacobi status by checking every coordinate triple.
  JacobiStatus compute_jacobi() const {
    const std::size_t n = arity();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (!jacobi_defect(i, j, k).is_zero()) return JacobiStatus::fails;
    return JacobiStatus::holds;
  }

  PoissonStructure with_jacobi_checked() const {
    PoissonStructure copy = *this;
    copy.jacobi_ = compute_jacobi();
    return copy;
  }

  /// `poisson NAME on RING { {v_i, v_j} = expr; ... }`, zero pairs omitted.
  std::string serialize(const std::string& name, const std::string& ring) const {
    std::string out = "poisson " + name + " on " + ring + " {";
    for (std::size_t i = 0; i < arity(); ++i)
      for (std::size_t j = i + 1; j < arity(); ++j)
        if (!c_[i][j].is_zero())
          out += " {" + owner_.variables()[i] + ", " + owner_.variables()[j] + "} = " +
                 owner_.to_string(c_[i][j]) + ";";
    return out + " }";
  }

  void check_owner(const RingElement& a) const {
    if (!(a.owner() == owner_)) throw MathError("element does not belong to the Poisson ring");
  }

 private:
  friend PoissonStructure quotient_poisson(const PoissonStructure&, const Ideal&);

  RingPresentation owner_;
  PolyMatrix c_;
  JacobiStatus jacobi_ = JacobiStatus::unchecked;
};

inline PoissonStructure make_poisson(const RingPresentation& a, PolyMatrix c, bool check_jacobi) {
  return PoissonStructure(a, std::move(c), check_jacobi);
}

inline RingElement bracket(const PoissonStructure& s, const RingElement& a, const RingElement& b) {
  return s.bracket(a, b);
}

inline RingElement jacobi_defect(const PoissonStructure& s, std::size_t i, std::size_t j,
                                 std::size_t k) {
  return s.jacobi_defect(i, j, k);
}

namespace detail {

inline void check_ideal(const PoissonStructure& s, const Ideal& i) {
  if (i.arity() != s.arity())
    throw MathError("ideal arity " + std::to_string(i.arity()) + " does not match ring arity " +
                    std::to_string(s.arity()));
}

inline std::vector<Polynomial> nonzero_generators(const Ideal& i) {
  std::vector<Polynomial> out;
  for (const auto& g : i.generators())
    if (!g.is_zero()) out.push_back(g);
  return out;
}

}  // namespace detail

/// Generator criterion: bracket(g, x_i) ∈ J + I for every generator g of I and
/// every coordinate x_i. Equivalent to the definition since {·, a} is a
/// derivation and I is an ideal.
inline bool is_poisson_ideal(const PoissonStructure& s, const Ideal& i) {
  detail::check_ideal(s, i);
  const Ideal k = s.owner().ideal() + i;
  const std::size_t n = s.arity();
  for (const auto& g : detail::nonzero_generators(i))
    for (std::size_t v = 0; v < n; ++v)
      if (!k.contains(s.bracket_polynomials(g, Polynomial::variable(n, v)))) return false;
  return true;
}

/// True iff I is closed under the bracket: {g_a, g_b} ∈ J + I for generators.
inline bool is_bracket_closed(const PoissonStructure& s, const Ideal& i) {
  detail::check_ideal(s, i);
  const Ideal k = s.owner().ideal() + i;
  const auto gens = detail::nonzero_generators(i);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!k.contains(s.bracket_polynomials(gens[a], gens[b]))) return false;
  return true;
}

/// Poisson structure on P/(J + I) with the same coefficient matrix.
inline PoissonStructure quotient_poisson(const PoissonStructure& s, const Ideal& i) {
  if (!is_poisson_ideal(s, i)) throw MathError("ideal is not a Poisson ideal; the quotient has no induced bracket");
  if (i.is_zero()) return s;
  RingPresentation q(s.owner().variables(), s.owner().ideal() + i);
  PoissonStructure out(q, s.matrix(), false);
  // Jacobi on the ambient ring passes to the quotient.
  out.jacobi_ = s.jacobi_status() == JacobiStatus::holds ? JacobiStatus::holds : out.compute_jacobi();
  return out;
}

/// Projection A → A/I between the rings of a structure and its quotient.
inline RingMap quotient_projection(const PoissonStructure& from, const PoissonStructure& to) {
  std::vector<RingElement> images;
  for (std::size_t i = 0; i < to.arity(); ++i) images.push_back(to.owner().variable(i));
  return RingMap(from.owner(), to.owner(), std::move(images));
}

/// Components ({h, x_1}, ..., {h, x_N}) of the Hamiltonian vector field of h,
/// so that X_h(f) = {h, f}.
inline std::vector<RingElement> hamiltonian_field(const PoissonStructure& s, const RingElement& h) {
  s.check_owner(h);
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < s.arity(); ++i) out.push_back(s.bracket(h, s.owner().variable(i)));
  return out;
}

inline bool is_casimir(const PoissonStructure& s, const RingElement& c) {
  const auto field = hamiltonian_field(s, c);
  return std::all_of(field.begin(), field.end(), [](const RingElement& e) { return e.is_zero(); });
}

inline bool in_normalizer(const PoissonStructure& s, const Ideal& i, const RingElement& a) {
  detail::check_ideal(s, i);
  s.check_owner(a);
  if (a.is_zero()) return true;
  const Ideal k = s.owner().ideal() + i;
  for (const auto& g : detail::nonzero_generators(i))
    if (!k.contains(s.bracket_polynomials(g, a.rep()))) return false;
  return true;
}

/// Finite window {elements} of an infinite-dimensional subspace, cut at a
/// degree bound.
struct GradedBasis {
  std::size_t degree_bound = 0;
  std::vector<RingElement> elements;
  std::string description;
};

namespace detail {

/// Monomials occurring in `polys`, descending in grevlex.
inline std::vector<Monomial> support(const std::vector<Polynomial>& polys) {
  std::vector<Monomial> monos;
  for (const auto& p : polys)
    for (const auto& t : p.terms()) monos.push_back(t.monomial);
  const auto order = Polynomial::storage_order;
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  return monos;
}

inline linalg::Vector coordinates(const Polynomial& p, const std::vector<Monomial>& columns) {
  linalg::Vector v(columns.size(), Scalar(0));
  std::size_t c = 0;
  for (const auto& t : p.terms()) {  // both descending in grevlex
    while (columns[c] != t.monomial) ++c;
    v[c] = t.coeff;
  }
  return v;
}

inline Polynomial from_coordinates(std::size_t arity, const linalg::Vector& v,
                                   const std::vector<Monomial>& columns) {
  std::vector<Term> terms;
  for (std::size_t c = 0; c < columns.size(); ++c)
    if (!v[c].is_zero()) terms.push_back({columns[c], v[c]});
  return Polynomial::from_terms(arity, std::move(terms));
}

/// Echelon basis of span(polys), ascending by leading monomial.
inline std::vector<Polynomial> echelon_span(std::size_t arity, const std::vector<Polynomial>& polys) {
  const auto columns = support(polys);
  linalg::Matrix m;
  for (const auto& p : polys) m.push_back(coordinates(p, columns));
  linalg::rref(m, columns.size());
  std::vector<Polynomial> out;
  for (auto it = m.rbegin(); it != m.rend(); ++it) out.push_back(from_coordinates(arity, *it, columns));
  return out;
}

/// Basis of { f ∈ P_≤d : bracket(g, f) ∈ K for all g in gens }, as elements of
/// the owner ring. The condition is linear in f's coefficients.
inline GradedBasis annihilator_window(const PoissonStructure& s, const std::vector<Polynomial>& gens,
                                      const Ideal& k, std::size_t d, std::string description) {
  const std::size_t n = s.arity();
  const auto candidates = monomials_up_to(n, static_cast<std::uint32_t>(d));
  // images[g][m] = NF_K({g, m})
  std::vector<std::vector<Polynomial>> images;
  std::vector<Polynomial> all;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (const auto& m : candidates) {
      row.push_back(k.normal_form(s.bracket_polynomials(g, Polynomial::monomial(m))));
      all.push_back(row.back());
    }
    images.push_back(std::move(row));
  }
  const auto columns = support(all);
  linalg::Matrix system;
  for (const auto& row : images) {
    std::vector<linalg::Vector> coords;
    for (const auto& p : row) coords.push_back(coordinates(p, columns));
    for (std::size_t c = 0; c < columns.size(); ++c) {
      linalg::Vector eq;
      for (std::size_t m = 0; m < candidates.size(); ++m) eq.push_back(coords[m][c]);
      system.push_back(std::move(eq));
    }
  }
  std::vector<Polynomial> solutions;
  for (const auto& v : linalg::nullspace(std::move(system), candidates.size())) {
    Polynomial f(n);
    for (std::size_t m = 0; m < candidates.size(); ++m)
      if (!v[m].is_zero()) f += Polynomial::monomial(candidates[m], v[m]);
    solutions.push_back(s.owner().normal_form(f));
  }
  GradedBasis out;
  out.degree_bound = d;
  out.description = std::move(description);
  for (auto& p : echelon_span(n, solutions)) out.elements.push_back(s.owner().element(p));
  return out;
}

}  // namespace detail

/// Basis of N(I) ∩ P_≤d in the owner ring.
inline GradedBasis normalizer_basis(const PoissonStructure& s, const Ideal& i, std::size_t d) {
  detail::check_ideal(s, i);
  return detail::annihilator_window(s, detail::nonzero_generators(i), s.owner().ideal() + i, d,
                                    "normalizer, degree <= " + std::to_string(d));
}

/// Entry of a reduced bracket table: the reduced bracket value and, when it
/// lies in the span of the window basis, its coordinates in that basis.
struct BracketEntry {
  RingElement value;
  std::optional<std::vector<Scalar>> coordinates;
};

/// Finite window onto a reduced Poisson algebra W/(W ∩ K) where W is a
/// window of representatives in the owner ring and K = J + I.
struct ReducedAlgebra {
  std::string kind;
  std::size_t degree_bound = 0;
  RingPresentation quotient;                  // P/(J + I)
  std::vector<RingElement> basis;             // classes in `quotient`
  std::vector<RingElement> representatives;   // lifts in the owner ring
  std::vector<std::vector<BracketEntry>> table;

  bool table_is_zero() const {
    for (const auto& row : table)
      for (const auto& e : row)
        if (!e.value.is_zero()) return false;
    return true;
  }
  bool table_closed() const {
    for (const auto& row : table)
      for (const auto& e : row)
        if (!e.coordinates) return false;
    return true;
  }
};

namespace detail {

inline ReducedAlgebra reduce_window(const PoissonStructure& s, const GradedBasis& window,
                                    const Ideal& k, std::string kind) {
  const std::size_t n = s.arity();
  ReducedAlgebra out;
  out.kind = std::move(kind);
  out.degree_bound = window.degree_bound;
  out.quotient = RingPresentation(s.owner().variables(), k);

  std::vector<Polynomial> classes;
  for (const auto& w : window.elements) classes.push_back(k.normal_form(w.rep()));
  const auto columns = support(classes);
  const std::size_t w = window.elements.size();
  linalg::Matrix m;
  for (std::size_t r = 0; r < w; ++r) {
    auto row = coordinates(classes[r], columns);
    for (std::size_t c = 0; c < w; ++c) row.push_back(Scalar(c == r ? 1 : 0));
    m.push_back(std::move(row));
  }
  const auto pivots = linalg::rref(m, columns.size());
  std::vector<Monomial> pivot_monos;
  for (std::size_t r = pivots.size(); r-- > 0;) {
    linalg::Vector left(m[r].begin(), m[r].begin() + static_cast<std::ptrdiff_t>(columns.size()));
    out.basis.push_back(out.quotient.element(from_coordinates(n, left, columns)));
    RingElement rep = s.owner().zero();
    for (std::size_t c = 0; c < w; ++c)
      if (!m[r][columns.size() + c].is_zero()) rep = rep + m[r][columns.size() + c] * window.elements[c];
    out.representatives.push_back(std::move(rep));
    pivot_monos.push_back(columns[pivots[r]]);
  }

  const std::size_t b = out.basis.size();
  out.table.assign(b, std::vector<BracketEntry>(b));
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      RingElement value = out.quotient.element(
          s.bracket_polynomials(out.representatives[i].rep(), out.representatives[j].rep()));
      std::vector<Scalar> coords;
      Polynomial rebuilt(n);
      for (std::size_t r = 0; r < b; ++r) {
        coords.push_back(value.rep().coefficient(pivot_monos[r]));
        rebuilt += coords.back() * out.basis[r].rep();
      }
      out.table[i][j].value = value;
      if (rebuilt == value.rep()) out.table[i][j].coordinates = std::move(coords);
    }
  return out;
}

}  // namespace detail

/// Window onto N(I)/(I ∩ N(I)) in degrees ≤ d with its bracket table.
inline ReducedAlgebra sw_reduced_algebra(const PoissonStructure& s, const Ideal& i, std::size_t d,
                                         std::string kind = "sw") {
  if (d < 1) throw MathError("reduced algebra needs a degree bound of at least 1");
  const auto window = normalizer_basis(s, i, d);
  return detail::reduce_window(s, window, s.owner().ideal() + i, std::move(kind));
}

/// Comparison of the reduced window with the window of P/(J + I); the map
/// N(I)/(I ∩ N(I)) → P/(J + I) is injective by construction.
struct PoissonDiracReport {
  bool bracket_closed = false;          // Case a: I is a Poisson subalgebra
  std::size_t reduced_dimension = 0;
  std::size_t quotient_dimension = 0;
  bool surjective_up_to_degree = false;
  std::size_t degree_bound = 0;
};

inline PoissonDiracReport poisson_dirac_check(const PoissonStructure& s, const Ideal& i, std::size_t d) {
  const auto reduced = sw_reduced_algebra(s, i, d, "coisotropic");
  const Ideal k = s.owner().ideal() + i;
  std::vector<Polynomial> classes;
  for (const auto& m : monomials_up_to(s.arity(), static_cast<std::uint32_t>(d)))
    classes.push_back(k.normal_form(Polynomial::monomial(m)));
  PoissonDiracReport r;
  r.bracket_closed = is_bracket_closed(s, i);
  r.reduced_dimension = reduced.basis.size();
  r.quotient_dimension = detail::echelon_span(s.arity(), classes).size();
  r.surjective_up_to_degree = r.reduced_dimension == r.quotient_dimension;
  r.degree_bound = d;
  return r;
}

/// Structure constants f[a][b][c] of a Lie algebra: [e_a, e_b] = Σ_c f_ab^c e_c.
using StructureConstants = std::vector<std::vector<std::vector<Scalar>>>;

/// Equivariant moment data: components μ_a with {μ_a, μ_b} = Σ_c f_ab^c μ_c.
class MomentData {
 public:
  MomentData(PoissonStructure structure, std::vector<RingElement> components,
             StructureConstants constants)
      : structure_(std::move(structure)),
        components_(std::move(components)),
        constants_(std::move(constants)) {
    const std::size_t k = components_.size();
    if (k == 0) throw MathError("moment data needs at least one component");
    for (const auto& mu : components_) structure_.check_owner(mu);
    if (constants_.empty()) constants_.assign(k, std::vector<std::vector<Scalar>>(k, std::vector<Scalar>(k)));
    if (constants_.size() != k) throw MathError("structure constants have wrong size");
    for (const auto& plane : constants_) {
      if (plane.size() != k) throw MathError("structure constants have wrong size");
      for (const auto& row : plane)
        if (row.size() != k) throw MathError("structure constants have wrong size");
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c)
          if (!(constants_[a][b][c] == -constants_[b][a][c]))
            throw MathError("structure constants are not antisymmetric");
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        RingElement expected = structure_.owner().zero();
        for (std::size_t c = 0; c < k; ++c)
          if (!constants_[a][b][c].is_zero()) expected = expected + constants_[a][b][c] * components_[c];
        if (!(structure_.bracket(components_[a], components_[b]) == expected))
          throw MathError("moment map is not equivariant: {mu_" + std::to_string(a + 1) + ", mu_" +
                          std::to_string(b + 1) + "} does not match the structure constants");
      }
  }

  const PoissonStructure& structure() const { return structure_; }
  const std::vector<RingElement>& components() const { return components_; }
  const StructureConstants& constants() const { return constants_; }
  std::size_t dimension() const { return components_.size(); }

 private:
  PoissonStructure structure_;
  std::vector<RingElement> components_;
  StructureConstants constants_;
};

/// <μ_1 − α_1, ..., μ_k − α_k> in the ambient ring.
inline Ideal moment_level_ideal(const MomentData& m, const std::vector<Scalar>& alpha) {
  if (alpha.size() != m.dimension())
    throw MathError("level needs " + std::to_string(m.dimension()) + " values, got " +
                    std::to_string(alpha.size()));
  const auto& owner = m.structure().owner();
  std::vector<Polynomial> gens;
  for (std::size_t a = 0; a < alpha.size(); ++a) gens.push_back(m.components()[a].rep() - alpha[a]);
  return Ideal(owner.arity(), std::move(gens), owner.ideal().order());
}

/// Infinitesimal invariants of degree ≤ d: bracket(μ_a, f) ∈ J for all a.
inline GradedBasis invariant_basis(const MomentData& m, std::size_t d) {
  std::vector<Polynomial> gens;
  for (const auto& mu : m.components()) gens.push_back(mu.rep());
  const auto& s = m.structure();
  return detail::annihilator_window(s, gens, s.owner().ideal(), d, "invariants, degree <= " + std::to_string(d));
}

/// Invariants modulo the level ideal at α, degree ≤ d.
inline ReducedAlgebra acg_reduced_ring(const MomentData& m, const std::vector<Scalar>& alpha, std::size_t d) {
  const auto& s = m.structure();
  const auto window = invariant_basis(m, d);
  const Ideal level = moment_level_ideal(m, alpha);
  const Ideal k = s.owner().ideal() + level;
  // The level ideal must be Poisson inside the invariant window.
  for (const auto& w : window.elements)
    for (const auto& g : level.generators())
      if (!k.contains(s.bracket_polynomials(w.rep(), g)))
        throw MathError("level ideal is not Poisson within the invariant window: {" + w.to_string() +
                        ", " + s.owner().to_string(g) + "} is not in the level ideal");
  return detail::reduce_window(s, window, k, "acg");
}

/// Lifts a quotient bracket to the free ambient ring: c_ij is a preimage of
/// {q(x_i), q(x_j)} under q. Jacobi is not checked.
inline PoissonStructure extend_bracket(const RingMap& q, const std::vector<std::vector<RingElement>>& brackets) {
  const auto& source = q.source();
  const auto& target = q.target();
  if (!source.is_free()) throw MathError("extend_bracket needs a free source presentation");
  const std::size_t n = source.arity();
  const std::size_t m = target.arity();
  if (brackets.size() != n) throw MathError("bracket data must be an NxN matrix");
  for (const auto& row : brackets) {
    if (row.size() != n) throw MathError("bracket data must be an NxN matrix");
    for (const auto& e : row)
      if (!(e.owner() == target)) throw MathError("bracket data must live in the target ring");
  }

  // Express each target variable as c_0 + Σ λ_l q(x_l).
  std::vector<Polynomial> spanning{Polynomial::constant(m, Scalar(1))};
  for (const auto& img : q.images()) spanning.push_back(img.rep());
  std::vector<Polynomial> lifts;
  for (std::size_t k = 0; k < m; ++k) {
    Polynomial goal = target.normal_form(Polynomial::variable(m, k));
    std::vector<Polynomial> all = spanning;
    all.push_back(goal);
    const auto columns = detail::support(all);
    // Solve Σ λ_l spanning_l = goal via the nullspace of [spanning | -goal].
    linalg::Matrix sys(columns.size(), linalg::Vector(spanning.size() + 1, Scalar(0)));
    for (std::size_t l = 0; l < spanning.size(); ++l) {
      auto v = detail::coordinates(spanning[l], columns);
      for (std::size_t c = 0; c < columns.size(); ++c) sys[c][l] = v[c];
    }
    auto gv = detail::coordinates(goal, columns);
    for (std::size_t c = 0; c < columns.size(); ++c) sys[c][spanning.size()] = -gv[c];
    std::optional<linalg::Vector> solution;
    for (auto& v : linalg::nullspace(std::move(sys), spanning.size() + 1))
      if (!v.back().is_zero()) {
        const Scalar inv = v.back().inverse();
        for (auto& e : v) e *= inv;
        solution = std::move(v);
        break;
      }
    if (!solution) throw MathError("ring map is not surjective: " + target.variables()[k] +
                                   " is not an affine combination of the images");
    Polynomial lift = Polynomial::constant(n, (*solution)[0]);
    for (std::size_t l = 0; l < n; ++l)
      if (!(*solution)[l + 1].is_zero()) lift += (*solution)[l + 1] * Polynomial::variable(n, l);
    lifts.push_back(std::move(lift));
  }

  PolyMatrix c(n, std::vector<Polynomial>(n, Polynomial(n)));
  for (std::size_t i = 0; i < n; ++i) {
    if (!brackets[i][i].is_zero()) throw MathError("bracket data has a nonzero diagonal entry");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(brackets[i][j] == -brackets[j][i])) throw MathError("bracket data is not antisymmetric");
      c[i][j] = brackets[i][j].rep().substitute(lifts, n);
      c[j][i] = -c[i][j];
    }
  }
  return PoissonStructure(source, std::move(c), false);
}

/// Lift of a Poisson structure on the target ring.
inline PoissonStructure extend_bracket(const RingMap& q, const PoissonStructure& target_structure) {
  if (!(target_structure.owner() == q.target()))
    throw MathError("Poisson structure does not live on the map's target");
  const std::size_t n = q.source().arity();
  std::vector<std::vector<RingElement>> brackets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      brackets[i].push_back(target_structure.bracket(q.images()[i], q.images()[j]));
  return extend_bracket(q, brackets);
}

}  // namespace pck
