#include <gtest/gtest.h>

#include <random>

#include "pck/scalar.hpp"
#include "support/random.hpp"

using pck::FieldError;
using pck::MathError;
using pck::Scalar;

TEST(Scalar, CancellationInQuadraticField) {
  Scalar a = Scalar(1) + Scalar::sqrt(2);
  Scalar b = Scalar(1) - Scalar::sqrt(2);
  EXPECT_EQ(a + b, Scalar(2));
  EXPECT_TRUE((a + b).is_rational());
  EXPECT_EQ((a + b).root(), 0u);
  // (1 + r)(1 - r) = 1 - 2
  EXPECT_EQ(a * b, Scalar(-1));
}

TEST(Scalar, SqrtSquaredIsRational) {
  EXPECT_EQ(Scalar::sqrt(2) * Scalar::sqrt(2), Scalar(2));
  EXPECT_EQ(Scalar::sqrt(3) * Scalar::sqrt(3), Scalar(3));
}

TEST(Scalar, ZeroTestIsExact) {
  Scalar s = Scalar(mpq_class(1, 3), mpq_class(-2, 7), 5);
  EXPECT_FALSE(s.is_zero());
  EXPECT_TRUE((s - s).is_zero());
}

TEST(Scalar, InverseInExtension) {
  Scalar s = Scalar(3) + Scalar(2) * Scalar::sqrt(2);
  EXPECT_EQ(s * s.inverse(), Scalar(1));
  EXPECT_EQ(s.inverse(), Scalar(3) - Scalar(2) * Scalar::sqrt(2));  // norm 9 - 8 = 1
  EXPECT_THROW(Scalar(0).inverse(), MathError);
}

TEST(Scalar, RejectsNonSquareFreeAndMixedRoots) {
  EXPECT_THROW(Scalar::sqrt(4), FieldError);
  EXPECT_THROW(Scalar::sqrt(12), FieldError);
  EXPECT_THROW(Scalar::sqrt(1), FieldError);
  EXPECT_THROW(Scalar::sqrt(2) + Scalar::sqrt(3), FieldError);
  // Rational scalars mix with any extension.
  EXPECT_NO_THROW(Scalar(mpq_class(1, 2)) * Scalar::sqrt(3));
}

TEST(Scalar, CanonicalText) {
  EXPECT_EQ(Scalar(mpq_class(3, 4)).to_string(), "3/4");
  EXPECT_EQ(Scalar(-5).to_string(), "-5");
  EXPECT_EQ(Scalar::sqrt(2).to_string(), "sqrt(2)");
  EXPECT_EQ((-Scalar::sqrt(2)).to_string(), "-sqrt(2)");
  EXPECT_EQ(Scalar(mpq_class(1, 2), mpq_class(-3, 5), 2).to_string(), "1/2-3/5*sqrt(2)");
  EXPECT_EQ(Scalar(1, 1, 7).to_string(), "1+sqrt(7)");
}

TEST(Scalar, ToDouble) {
  EXPECT_NEAR((Scalar(1) - Scalar::sqrt(2)).to_double(), 1 - std::sqrt(2.0), 1e-15);
}

TEST(Scalar, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 300; ++k) {
    Scalar a = pck::test::random_scalar(rng, 2);
    Scalar b = pck::test::random_scalar(rng, 2);
    Scalar c = pck::test::random_scalar(rng, 2);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Scalar(1));
    }
  }
}
