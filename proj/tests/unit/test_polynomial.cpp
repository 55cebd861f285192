#include <gtest/gtest.h>

#include <random>

#include "pck/polynomial.hpp"
#include "support/random.hpp"

using namespace pck;

namespace {

const std::vector<std::string> xy{"x", "y"};

}  // namespace

TEST(Polynomial, ArithmeticExamples) {
  auto v = test::variables(2);
  const auto& x = v[0];
  const auto& y = v[1];
  const Scalar r2 = Scalar::sqrt(2);
  EXPECT_EQ(poly_arith(x + r2 * y, x - r2 * y, ArithOp::add), Scalar(2) * x);
  EXPECT_EQ(poly_arith(x, y, ArithOp::mul).to_string(xy), "x*y");
  EXPECT_EQ(poly_arith(x + y, x - y, ArithOp::mul), x * x - y * y);
  EXPECT_EQ((x + y) - (x + y), Polynomial(2));
}

TEST(Polynomial, ArityMismatchThrows) {
  auto a = Polynomial::variable(2, 0);
  auto b = Polynomial::variable(3, 0);
  EXPECT_THROW(poly_arith(a, b, ArithOp::add), MathError);
  EXPECT_THROW(a * b, MathError);
}

TEST(Polynomial, NoStoredZeros) {
  auto v = test::variables(2);
  Polynomial p = Polynomial::from_terms(2, {{Monomial{1, 0}, Scalar(3)}, {Monomial{1, 0}, Scalar(-3)}});
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE((0 * v[0]).is_zero());
}

TEST(Polynomial, PartialDerivativeExamples) {
  auto v = test::variables(2);
  const auto& x = v[0];
  const auto& y = v[1];
  EXPECT_EQ(partial_derivative(x * x * y, 0), Scalar(2) * x * y);
  EXPECT_TRUE(partial_derivative(x * x, 1).is_zero());
  const auto p = x.pow(3) + Scalar::sqrt(2) * x;
  EXPECT_EQ(partial_derivative(p, 0), Scalar(3) * x * x + test::constant(2, Scalar::sqrt(2)));
  EXPECT_THROW(partial_derivative(p, 2), MathError);
}

TEST(Polynomial, CanonicalTextOrdersByGrevlexDescending) {
  auto v = test::variables(2);
  const auto& x = v[0];
  const auto& y = v[1];
  EXPECT_EQ((y + x * x + Scalar(mpq_class(1, 2))).to_string(xy), "x^2 + y + 1/2");
  EXPECT_EQ((x * x - y * y).to_string(xy), "x^2 - y^2");
  EXPECT_EQ((Scalar(-3) * x * y + Scalar(1)).to_string(xy), "-3*x*y + 1");
  EXPECT_EQ((x + Scalar::sqrt(2) * y - Scalar(1)).to_string(xy), "x + sqrt(2)*y - 1");
  EXPECT_EQ(((Scalar(1) + Scalar::sqrt(2)) * x + test::constant(2, Scalar(1) - Scalar::sqrt(2)))
                .to_string(xy),
            "(1+sqrt(2))*x + (1-sqrt(2))");
  EXPECT_EQ(Polynomial(2).to_string(xy), "0");
}

TEST(Polynomial, EvaluateAndSubstitute) {
  auto v = test::variables(2);
  const auto& x = v[0];
  const auto& y = v[1];
  std::vector<Scalar> pt{Scalar(2), Scalar(3)};
  EXPECT_EQ((x * y).evaluate(pt), Scalar(6));
  std::vector<double> fpt{2.0, 3.0};
  EXPECT_DOUBLE_EQ((x * y + x).evaluate(fpt), 8.0);
  // x -> t^2, y -> t + 1
  auto t = Polynomial::variable(1, 0);
  std::vector<Polynomial> images{t * t, t + test::constant(1, Scalar(1))};
  EXPECT_EQ((x * y).substitute(images, 1), t.pow(3) + t * t);
}

TEST(Polynomial, LeibnizOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    auto p = test::random_polynomial(rng, 3, 3, 5, 2);
    auto q = test::random_polynomial(rng, 3, 3, 5, 2);
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_EQ((p * q).derivative(i), p * q.derivative(i) + q * p.derivative(i));
  }
}

TEST(Polynomial, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    auto a = test::random_polynomial(rng, 3, 2, 4, 2);
    auto b = test::random_polynomial(rng, 3, 2, 4, 2);
    auto c = test::random_polynomial(rng, 3, 2, 4, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
  }
}

TEST(Monomial, OrdersAgreeOnExamples) {
  const auto lex = MonomialOrder::lex();
  const auto grevlex = MonomialOrder::grevlex();
  // x*y^2 vs x^2: lex prefers x^2, grevlex prefers the higher degree x*y^2.
  Monomial a{1, 2}, b{2, 0};
  EXPECT_TRUE(lex.greater(b, a));
  EXPECT_TRUE(grevlex.greater(a, b));
  // grevlex in 3 vars: x*z vs y^2, same degree, last variable decides: y^2 > x*z.
  Monomial xz{1, 0, 1}, yy{0, 2, 0};
  EXPECT_TRUE(grevlex.greater(yy, xz));
  // Block order eliminates the first variable.
  const auto block = MonomialOrder::block(1);
  Monomial t{1, 0, 0}, big{0, 5, 5};
  EXPECT_TRUE(block.greater(t, big));
  EXPECT_EQ(monomials_up_to(2, 2).size(), 6u);
  EXPECT_EQ(monomials_up_to(4, 2).size(), 15u);
}
