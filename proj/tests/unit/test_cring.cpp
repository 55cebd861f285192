#include <gtest/gtest.h>

#include <random>

#include "pck/cring.hpp"
#include "support/random.hpp"

using namespace pck;

namespace {

RingPresentation axes() {  // R[x,y]/<xy>
  auto v = test::variables(2);
  return make_presentation({"x", "y"}, {v[0] * v[1]});
}

RingPresentation torus_level(const Scalar& alpha) {  // R[p_x,p_y]/<p_x + sqrt2 p_y - alpha>
  auto v = test::variables(2);
  return make_presentation({"p_x", "p_y"}, {v[0] + Scalar::sqrt(2) * v[1] - alpha},
                           MonomialOrder::lex());
}

}  // namespace

TEST(Presentation, Construction) {
  auto free = make_presentation({"x", "y"}, {});
  EXPECT_TRUE(free.is_free());
  EXPECT_EQ(free.point_determined(), PointDetermined::yes);

  auto q = torus_level(Scalar(0));
  EXPECT_FALSE(q.is_free());
  EXPECT_EQ(q.point_determined(), PointDetermined::unknown);

  auto x = Polynomial::variable(1, 0);
  auto fat = make_presentation({"x"}, {x * x});
  EXPECT_TRUE(is_point(fat, std::vector<Scalar>{Scalar(0)}));
  EXPECT_FALSE(fat.ideal().contains(x));  // J != vanishing ideal of Z_J = {0}

  EXPECT_THROW(make_presentation({"x", "x"}, {}), MathError);
  EXPECT_THROW(make_presentation({"x", "y"}, {x}), MathError);
  EXPECT_EQ(fat.certified(PointDetermined::no).point_determined(), PointDetermined::no);
  EXPECT_THROW(free.certified(PointDetermined::no), MathError);
}

TEST(Presentation, Serialize) {
  EXPECT_EQ(axes().serialize("A"), "ring A (x, y) relations { x*y; }");
  EXPECT_EQ(make_presentation({"q", "p"}, {}).serialize("F"), "ring F (q, p);");
  EXPECT_EQ(torus_level(Scalar(1)).serialize("T"),
            "ring T (p_x, p_y) relations { p_x + sqrt(2)*p_y - 1; } order lex;");
}

TEST(Element, NormalFormRepresentatives) {
  auto t = torus_level(Scalar(1));
  auto v = test::variables(2);
  EXPECT_EQ(element(t, v[0]).rep(), test::constant(2, Scalar(1)) - Scalar::sqrt(2) * v[1]);
  EXPECT_TRUE(element(t, Polynomial(2)).is_zero());

  auto x = Polynomial::variable(1, 0);
  auto fat = make_presentation({"x"}, {x * x});
  EXPECT_EQ(element(fat, x.pow(3) + x * x + x).rep(), x);
  EXPECT_THROW(element(fat, v[0]), MathError);
}

TEST(Points, Membership) {
  auto a = axes();
  EXPECT_TRUE(is_point(a, std::vector<Scalar>{Scalar(0), Scalar(5)}));
  EXPECT_FALSE(is_point(a, std::vector<Scalar>{Scalar(1), Scalar(1)}));
  EXPECT_THROW(is_point(a, std::vector<Scalar>{Scalar(0)}), MathError);

  auto t = torus_level(Scalar(1));
  EXPECT_TRUE(is_point(t, std::vector<Scalar>{Scalar(1) - Scalar::sqrt(2), Scalar(1)}));
  EXPECT_THROW(RPoint(a, {Scalar(1), Scalar(1)}), MathError);
}

TEST(Points, Evaluate) {
  auto free = make_presentation({"x", "y"}, {});
  RPoint pt(free, {Scalar(2), Scalar(3)});
  EXPECT_EQ(evaluate(free.constant(Scalar(1)), pt), Scalar(1));
  EXPECT_EQ(evaluate(free.variable(0) * free.variable(1), pt), Scalar(6));

  auto t = torus_level(Scalar(1));
  RPoint tp(t, {Scalar(1) - Scalar::sqrt(2), Scalar(1)});
  EXPECT_EQ(evaluate(t.variable(0), tp), Scalar(1) - Scalar::sqrt(2));
  EXPECT_THROW(evaluate(free.variable(0), tp), MathError);
}

TEST(Points, EvaluateIsWellDefinedOnCosets) {
  std::mt19937_64 rng(41);
  auto a = axes();
  const auto& j = a.ideal().generators()[0];
  for (int k = 0; k < 100; ++k) {
    auto p = test::random_polynomial(rng, 2, 3);
    auto extra = test::random_polynomial(rng, 2, 2) * j;
    Scalar c = test::random_scalar(rng);
    RPoint pt(a, k % 2 ? std::vector<Scalar>{c, Scalar(0)} : std::vector<Scalar>{Scalar(0), c});
    EXPECT_EQ(evaluate(element(a, p + extra), pt), p.evaluate(pt.coords()));
  }
}

TEST(Germs, AxesExamples) {
  auto a = axes();
  RPoint on_y(a, {Scalar(0), Scalar(1)});
  RPoint on_x(a, {Scalar(1), Scalar(0)});
  EXPECT_TRUE(germ_vanishes(a.variable(0), on_y));
  EXPECT_FALSE(germ_vanishes(a.variable(0), on_x));
  EXPECT_TRUE(germ_vanishes(a.zero(), on_x));
  // At the origin neither axis germ vanishes.
  RPoint origin(a, {Scalar(0), Scalar(0)});
  EXPECT_FALSE(germ_vanishes(a.variable(0), origin));
}

TEST(Germs, FreeRingHasNoNontrivialGermKernel) {
  auto free = make_presentation({"x", "y"}, {});
  RPoint pt(free, {Scalar(3), Scalar(-1)});
  EXPECT_FALSE(germ_vanishes(free.variable(0), pt));
  EXPECT_TRUE(germ_vanishes(free.zero(), pt));
}

TEST(Germs, KernelIsAnIdeal) {
  std::mt19937_64 rng(43);
  auto a = axes();
  int hits = 0;
  for (int k = 0; k < 200 && hits < 100; ++k) {
    auto elem = element(a, test::random_polynomial(rng, 2, 2, 3));
    Scalar c = test::random_nonzero_scalar(rng);
    RPoint pt(a, k % 2 ? std::vector<Scalar>{c, Scalar(0)} : std::vector<Scalar>{Scalar(0), c});
    if (!germ_vanishes(elem, pt)) continue;
    ++hits;
    auto b = element(a, test::random_polynomial(rng, 2, 2, 3));
    EXPECT_TRUE(germ_vanishes(b * elem, pt));
  }
  EXPECT_GT(hits, 20);
}

TEST(RingMaps, Validation) {
  auto a = axes();
  EXPECT_NO_THROW(identity_map(a));

  auto x = Polynomial::variable(1, 0);
  auto fat = make_presentation({"x"}, {x * x});
  auto line = make_presentation({"t"}, {});
  EXPECT_THROW(make_ring_map(fat, line, {line.variable(0)}), MathError);

  auto plane = make_presentation({"x", "y"}, {});
  EXPECT_NO_THROW(make_ring_map(plane, a, {a.variable(0), a.variable(1)}));
  EXPECT_THROW(make_ring_map(plane, a, {a.variable(0)}), MathError);
  EXPECT_THROW(make_ring_map(plane, a, {a.variable(0), plane.variable(1)}), MathError);
}

TEST(RingMaps, SpecOnPoints) {
  auto src = make_presentation({"x"}, {});
  auto tgt = make_presentation({"t"}, {});
  auto t = tgt.variable(0);
  auto sq = make_ring_map(src, tgt, {t * t});
  EXPECT_EQ(spec_on_points(sq, RPoint(tgt, {Scalar(2)})).coords(), std::vector<Scalar>{Scalar(4)});

  auto a = axes();
  RPoint pt(a, {Scalar(0), Scalar(3)});
  EXPECT_EQ(spec_on_points(identity_map(a), pt), pt);

  auto plane = make_presentation({"x", "y"}, {});
  auto proj = make_ring_map(plane, a, {a.variable(0), a.variable(1)});
  EXPECT_TRUE(proj.is_projection());
  EXPECT_EQ(spec_on_points(proj, pt).coords(), pt.coords());
  EXPECT_THROW(spec_on_points(proj, RPoint(plane, {Scalar(1), Scalar(1)})), MathError);
}

TEST(RingMaps, PointFunctoriality) {
  std::mt19937_64 rng(47);
  auto r1 = make_presentation({"a", "b"}, {});
  auto r2 = make_presentation({"u", "v"}, {});
  auto r3 = make_presentation({"s", "t"}, {});
  for (int k = 0; k < 50; ++k) {
    // psi: r1 -> r2, phi: r2 -> r3; phi∘psi: r1 -> r3.
    RingMap psi(r1, r2, {element(r2, test::random_polynomial(rng, 2, 2)),
                         element(r2, test::random_polynomial(rng, 2, 2))});
    RingMap phi(r2, r3, {element(r3, test::random_polynomial(rng, 2, 2)),
                         element(r3, test::random_polynomial(rng, 2, 2))});
    RPoint x(r3, {test::random_scalar(rng, 2), test::random_scalar(rng, 2)});
    EXPECT_EQ(spec_on_points(compose(phi, psi), x), spec_on_points(psi, spec_on_points(phi, x)));
  }
}

// Closed-embedding image law: y ∈ R^2 lies in the image of the projection's
// point map iff every generator of J vanishes at y.
TEST(RingMaps, ClosedEmbeddingImageLaw) {
  std::mt19937_64 rng(53);
  auto a = axes();
  auto plane = make_presentation({"x", "y"}, {});
  auto proj = make_ring_map(plane, a, {a.variable(0), a.variable(1)});
  for (int k = 0; k < 100; ++k) {
    std::vector<Scalar> y{test::random_scalar(rng), test::random_scalar(rng)};
    if (k % 3 == 0) y[static_cast<std::size_t>(k % 2)] = Scalar(0);
    const bool in_zero_set = (y[0] * y[1]).is_zero();
    bool in_image = false;
    if (is_point(a, y)) in_image = spec_on_points(proj, RPoint(a, y)).coords() == y;
    EXPECT_EQ(in_image, in_zero_set);
  }
}
