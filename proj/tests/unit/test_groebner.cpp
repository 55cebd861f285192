#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "pck/ideal.hpp"
#include "support/random.hpp"

using namespace pck;

namespace {

// Buchberger's criterion checked from scratch: every S-polynomial of the
// basis reduces to zero by plain division.
bool is_groebner(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto f = detail::to_work(basis[i], order);
      auto g = detail::to_work(basis[j], order);
      auto s = detail::s_polynomial(f, g, order);
      auto r = divide(detail::from_work(basis[i].arity(), s), basis, order);
      if (!r.remainder.is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST(Groebner, MonomialIdealIsItsOwnBasis) {
  auto v = test::variables(2);
  const auto& x = v[0];
  const auto& y = v[1];
  Ideal i(2, {x * x, x * y}, MonomialOrder::lex());
  const auto& gb = i.groebner_basis();
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[0], x * y);  // ascending in lex: x*y < x^2
  EXPECT_EQ(gb[1], x * x);
}

TEST(Groebner, PrincipalIdeals) {
  auto v = test::variables(2);
  Ideal i(2, {v[0] - Scalar(1)});
  ASSERT_EQ(i.groebner_basis().size(), 1u);
  EXPECT_EQ(i.groebner_basis()[0], v[0] - Scalar(1));

  // Moment level set p_x + sqrt(2) p_y - alpha for alpha = 3/2.
  const auto& px = v[0];
  const auto& py = v[1];
  const Scalar alpha(mpq_class(3, 2));
  Polynomial level = px + Scalar::sqrt(2) * py - alpha;
  Ideal l(2, {level}, MonomialOrder::lex());
  ASSERT_EQ(l.groebner_basis().size(), 1u);
  EXPECT_EQ(l.groebner_basis()[0], level);
  // Scaled generator yields the same monic basis.
  Ideal l2(2, {Scalar(5) * level});
  EXPECT_EQ(l2.groebner_basis()[0], level);
}

TEST(Groebner, NormalFormExamples) {
  auto v = test::variables(2);
  const auto& x = v[0];
  const auto& y = v[1];
  EXPECT_TRUE(normal_form(x * y, Ideal(2, {x * y})).is_zero());
  EXPECT_EQ(normal_form(x * x, Ideal(2, {x - y}, MonomialOrder::lex())), y * y);
  const Scalar alpha(1);
  Ideal level(2, {x + Scalar::sqrt(2) * y - alpha}, MonomialOrder::lex());
  EXPECT_EQ(normal_form(x, level), test::constant(2, alpha) - Scalar::sqrt(2) * y);
  EXPECT_THROW(normal_form(Polynomial::variable(3, 0), level), MathError);
}

TEST(Groebner, ZeroIdeal) {
  Ideal z = Ideal::zero(2);
  EXPECT_TRUE(z.groebner_basis().empty());
  EXPECT_TRUE(z.is_zero());
  auto p = Polynomial::variable(2, 1) * Polynomial::variable(2, 0);
  EXPECT_EQ(z.normal_form(p), p);
}

TEST(Groebner, UnitIdeal) {
  auto v = test::variables(2);
  Ideal i(2, {v[0], v[0] - Scalar(1)});
  EXPECT_TRUE(i.is_unit());
  EXPECT_TRUE(i.contains(v[1] * v[1]));
}

TEST(Groebner, CyclicThreeIsConsistentUnderBothOrders) {
  auto v = test::variables(3);
  const auto& x = v[0];
  const auto& y = v[1];
  const auto& z = v[2];
  std::vector<Polynomial> gens{x + y + z, x * y + y * z + z * x, x * y * z - Scalar(1)};
  for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
    Ideal i(3, gens, order);
    EXPECT_TRUE(is_groebner(i.groebner_basis(), order)) << order.name();
    for (const auto& g : gens) EXPECT_TRUE(i.contains(g));
  }
  // Lex basis of cyclic-3 has the triangular form {z^3 - 1, y^2 + y z + z^2, x + y + z}.
  Ideal lex(3, gens, MonomialOrder::lex());
  ASSERT_EQ(lex.groebner_basis().size(), 3u);
  EXPECT_EQ(lex.groebner_basis()[0], z.pow(3) - Scalar(1));
}

TEST(Groebner, BasisIsIdempotentAndReduced) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(test::random_polynomial(rng, 3, 2, 3));
    Ideal i(3, gens);
    const auto gb = i.groebner_basis();
    Ideal again(3, gb);
    EXPECT_EQ(again.groebner_basis(), gb);
    EXPECT_TRUE(is_groebner(gb, i.order()));
    for (const auto& g : gens) EXPECT_TRUE(i.contains(g));
    // Reduced: no leading monomial divides any term of another basis element.
    for (std::size_t a = 0; a < gb.size(); ++a) {
      auto la = detail::to_work(gb[a], i.order()).lead();
      EXPECT_TRUE(detail::to_work(gb[a], i.order()).lead_coeff().is_one());
      for (std::size_t b = 0; b < gb.size(); ++b) {
        if (a == b) continue;
        for (const auto& t : gb[b].terms()) EXPECT_FALSE(la.divides(t.monomial));
      }
    }
  }
}

TEST(Groebner, NormalFormIsMultiplicative) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 40; ++k) {
    Ideal i(3, {test::random_polynomial(rng, 3, 2, 3), test::random_polynomial(rng, 3, 2, 3)});
    auto p = test::random_polynomial(rng, 3, 3);
    auto q = test::random_polynomial(rng, 3, 3);
    EXPECT_EQ(i.normal_form(p * q), i.normal_form(i.normal_form(p) * i.normal_form(q)));
  }
}

// Membership soundness: an element built as a combination of the generators
// reduces to zero; division by the basis reconstructs p exactly.
TEST(Groebner, MembershipSoundness) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 60; ++k) {
    std::vector<Polynomial> gens{test::random_polynomial(rng, 3, 2, 3),
                                 test::random_polynomial(rng, 3, 2, 3)};
    Ideal i(3, gens);
    Polynomial member = test::random_polynomial(rng, 3, 1) * gens[0] +
                        test::random_polynomial(rng, 3, 1) * gens[1];
    EXPECT_TRUE(i.contains(member));
    auto p = test::random_polynomial(rng, 3, 3);
    const auto& gb = i.groebner_basis();
    auto div = divide(p, gb, i.order());
    Polynomial rebuilt = div.remainder;
    for (std::size_t b = 0; b < gb.size(); ++b) rebuilt += div.quotients[b] * gb[b];
    EXPECT_EQ(rebuilt, p);
    EXPECT_EQ(div.remainder, i.normal_form(p));
    EXPECT_EQ(i.contains(p), div.remainder.is_zero());
  }
}

TEST(IdealQuotient, Examples) {
  auto v = test::variables(2);
  const auto& x = v[0];
  const auto& y = v[1];
  Ideal q = ideal_quotient(Ideal(2, {x * y}), x);
  ASSERT_EQ(q.groebner_basis().size(), 1u);
  EXPECT_EQ(q.groebner_basis()[0], y);

  Ideal unit = ideal_quotient(Ideal(2, {x}), x);
  EXPECT_TRUE(unit.is_unit());

  Ideal zero = ideal_quotient(Ideal::zero(2), x);
  EXPECT_TRUE(zero.is_zero());

  EXPECT_THROW(ideal_quotient(Ideal(2, {x}), Polynomial(2)), MathError);
}

TEST(IdealQuotient, GeneratorsSatisfyDefinition) {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 30; ++k) {
    Ideal j(2, {test::random_polynomial(rng, 2, 2, 3), test::random_polynomial(rng, 2, 2, 3)});
    auto a = test::random_polynomial(rng, 2, 2, 3);
    if (a.is_zero()) continue;
    Ideal q = ideal_quotient(j, a);
    for (const auto& d : q.generators()) EXPECT_TRUE(j.contains(a * d));
    // J is always contained in (J : a).
    for (const auto& g : j.generators()) EXPECT_TRUE(q.contains(g));
  }
}

TEST(Ideal, ConcurrentBasisAccessIsSafe) {
  auto v = test::variables(3);
  Ideal i(3, {v[0] * v[0] - v[1], v[1] * v[2] - Scalar(1), v[0] + v[2]});
  std::vector<std::vector<Polynomial>> seen(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = i.groebner_basis(); });
  for (auto& th : threads) th.join();
  for (const auto& s : seen) EXPECT_EQ(s, seen[0]);
}
