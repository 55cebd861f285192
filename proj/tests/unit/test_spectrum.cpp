#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "pck/spectrum.hpp"
#include "support/random.hpp"

using namespace pck;

namespace {

RingPresentation circle() {
  auto v = test::variables(2);
  return make_presentation({"x", "y"}, {v[0] * v[0] + v[1] * v[1] - Scalar(1)});
}

RingPresentation axes() {
  auto v = test::variables(2);
  return make_presentation({"x", "y"}, {v[0] * v[1]});
}

std::vector<Interval> square(double r, std::size_t n = 2) { return std::vector<Interval>(n, Interval{-r, r}); }

}  // namespace

TEST(Query, Validation) {
  auto c = circle();
  EXPECT_THROW(ZeroSetQuery(c, square(1), 1, 0.1), MathError);
  EXPECT_THROW(ZeroSetQuery(c, square(1), 3, -0.1), MathError);
  EXPECT_THROW(ZeroSetQuery(c, {{1, 0}, {0, 1}}, 3, 0.1), MathError);
  EXPECT_THROW(ZeroSetQuery(c, square(1, 3), 3, 0.1), MathError);
  EXPECT_NO_THROW(ZeroSetQuery(c, {{0, 0}, {0, 1}}, 2, 0.0));
}

TEST(Sampling, UnitCircle) {
  ZeroSetQuery q(circle(), square(2), 401, 1e-2);
  auto cloud = sample_zero_set(q);
  // Band |r^2 - 1| <= 0.01 has area 0.02π; grid cells are 0.01 x 0.01.
  const double expected = 0.02 * std::numbers::pi / 1e-4;
  EXPECT_NEAR(static_cast<double>(cloud.size()), expected, 0.1 * expected);
  for (std::size_t k = 0; k < cloud.size(); ++k) {
    EXPECT_LE(cloud.residuals[k], 1e-2);
    const auto& p = cloud.points[k];
    EXPECT_NEAR(std::hypot(p[0], p[1]), 1.0, 1e-2);
  }
  EXPECT_EQ(sample_zero_set(q).points, cloud.points);
}

TEST(Sampling, UnitAndZeroIdeals) {
  auto one = make_presentation({"x", "y"}, {test::constant(2, Scalar(1))});
  EXPECT_TRUE(sample_zero_set(ZeroSetQuery(one, square(1), 11, 0.5)).empty());
  auto free = make_presentation({"x", "y"}, {});
  auto full = sample_zero_set(ZeroSetQuery(free, square(1), 11, 0.0));
  EXPECT_EQ(full.size(), 121u);
  EXPECT_EQ(full.points[1], (std::vector<double>{-1.0, -0.8}));
  EXPECT_EQ(full.points.back(), (std::vector<double>{1.0, 1.0}));
}

TEST(Sampling, ExactPointsAreMembers) {
  auto a = axes();
  auto cloud = sample_zero_set(ZeroSetQuery(a, square(2), 9, 0.0));
  EXPECT_EQ(cloud.size(), 17u);
  for (const auto& p : cloud.points) {
    std::vector<Scalar> exact{Scalar(mpq_class(p[0])), Scalar(mpq_class(p[1]))};
    EXPECT_TRUE(is_point(a, exact));
  }
}

TEST(Sampling, ShrinkingToleranceIsMonotone) {
  auto c = circle();
  std::vector<std::vector<double>> previous;
  for (double tol : {0.2, 0.1, 0.05, 0.01, 0.001}) {
    auto cloud = sample_zero_set(ZeroSetQuery(c, square(1.5), 151, tol));
    if (!previous.empty()) {
      EXPECT_LE(cloud.size(), previous.size());
      for (const auto& p : cloud.points)
        EXPECT_TRUE(std::find(previous.begin(), previous.end(), p) != previous.end());
    }
    previous = cloud.points;
  }
}

TEST(BasicOpens, Examples) {
  auto a = axes();
  RPoint on_y(a, {Scalar(0), Scalar(1)});
  RPoint on_x(a, {Scalar(2), Scalar(0)});
  EXPECT_TRUE(basic_open_contains(a.constant(Scalar(1)), on_y));
  EXPECT_FALSE(basic_open_contains(a.zero(), on_y));
  EXPECT_FALSE(basic_open_contains(a.variable(0), on_y));
  EXPECT_TRUE(basic_open_contains(a.variable(0), on_x));

  auto free = make_presentation({"x", "y"}, {});
  auto x = free.variable(0), y = free.variable(1), one = free.constant(Scalar(1));
  RPoint p(free, {Scalar(1), Scalar(0)});
  RPoint r(free, {Scalar(2), Scalar(3)});
  EXPECT_EQ(basic_open_intersection_law(one, one, p), (std::array<bool, 3>{true, true, true}));
  EXPECT_EQ(basic_open_intersection_law(x, y, p), (std::array<bool, 3>{true, false, false}));
  EXPECT_EQ(basic_open_intersection_law(x, y, r), (std::array<bool, 3>{true, true, true}));
  EXPECT_THROW(basic_open_contains(x, on_y), MathError);
}

TEST(BasicOpens, IntersectionLaw) {
  std::mt19937_64 rng(211);
  auto a = axes();
  for (int k = 0; k < 100; ++k) {
    auto f = a.element(test::random_polynomial(rng, 2, 2, 3));
    auto g = a.element(test::random_polynomial(rng, 2, 2, 3));
    const Scalar c = test::uniform_int(rng, 0, 3) == 0 ? Scalar(0) : test::random_scalar(rng);
    RPoint x(a, k % 2 ? std::vector<Scalar>{c, Scalar(0)} : std::vector<Scalar>{Scalar(0), c});
    auto [ua, ub, uab] = basic_open_intersection_law(f, g, x);
    EXPECT_EQ(uab, ua && ub);
  }
}

TEST(BasicOpens, PreimageLaw) {
  std::mt19937_64 rng(223);
  auto src = make_presentation({"u", "v"}, {});
  auto tgt = axes();
  RingMap phi(src, tgt, {tgt.variable(0) * tgt.variable(0) + tgt.variable(1), tgt.variable(1) - tgt.constant(Scalar(1))});
  for (int k = 0; k < 50; ++k) {
    const Scalar c = test::random_scalar(rng);
    RPoint x(tgt, k % 2 ? std::vector<Scalar>{c, Scalar(0)} : std::vector<Scalar>{Scalar(0), c});
    auto a = src.element(test::random_polynomial(rng, 2, 2, 3));
    EXPECT_TRUE(preimage_law_holds(phi, a, x));
  }
  auto cloud = sample_zero_set(ZeroSetQuery(tgt, square(2), 21, 1e-12));
  ASSERT_FALSE(cloud.empty());
  for (const auto& p : cloud.points) {
    auto a = src.element(test::random_polynomial(rng, 2, 2, 3));
    EXPECT_TRUE(preimage_law_holds(phi, a, p, 1e-9));
  }
}

TEST(Embedding, AxesProjection) {
  auto plane = make_presentation({"x", "y"}, {});
  auto a = axes();
  auto proj = make_ring_map(plane, a, {a.variable(0), a.variable(1)});
  auto cloud = sample_zero_set(ZeroSetQuery(a, square(2), 41, 1e-12));
  std::vector<EmbeddingWitness> ws{{a.variable(0), plane.variable(0)},
                                   {a.variable(0) + a.variable(1), plane.variable(0) + plane.variable(1)}};
  auto report = embedding_check(proj, cloud, ws, 1e-9);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.points_checked, cloud.size());

  auto id = identity_map(a);
  EXPECT_TRUE(embedding_check(id, cloud, {}, 1e-9).passed());

  auto line = make_presentation({"t"}, {});
  auto bad = make_ring_map(line, line, {line.variable(0) * line.variable(0)});
  EXPECT_THROW(embedding_check(bad, PointCloud{}, {}, 1e-9), MathError);
  EXPECT_THROW(embedding_check(proj, cloud, {{a.variable(1), plane.variable(0)}}, 1e-9), MathError);
}

TEST(Embedding, TorusLevelLine) {
  auto free = make_presentation({"p_x", "p_y"}, {}, MonomialOrder::lex());
  auto v = test::variables(2);
  const Scalar alpha(1);
  auto level = make_presentation({"p_x", "p_y"}, {v[0] + Scalar::sqrt(2) * v[1] - alpha}, MonomialOrder::lex());
  auto proj = make_ring_map(free, level, {level.variable(0), level.variable(1)});
  PointCloud line;
  line.variables = level.variables();
  for (int k = -20; k <= 20; ++k) {
    const double py = k / 10.0;
    std::vector<double> pt{1.0 - std::sqrt(2.0) * py, py};
    line.residuals.push_back(residual(level, pt));
    line.points.push_back(std::move(pt));
  }
  auto report = embedding_check(proj, line, {{level.variable(1), free.variable(1)}}, 1e-9);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.points_checked, 41u);
}

TEST(Separation, SpotCheck) {
  auto cloud = sample_zero_set(ZeroSetQuery(circle(), square(2), 81, 5e-2));
  ASSERT_GT(cloud.size(), 10u);
  const auto& x = cloud.points.front();
  std::vector<std::vector<double>> rest(cloud.points.begin() + 1, cloud.points.begin() + 8);
  auto f = separate(2, x, rest, 1e-12);
  ASSERT_TRUE(f.has_value());
  EXPECT_GT(std::abs(f->evaluate(x)), 0.0);
  for (const auto& c : rest) EXPECT_LE(std::abs(f->evaluate(c)), 1e-9);
  rest.push_back(x);
  EXPECT_FALSE(separate(2, x, rest, 1e-12).has_value());
}

TEST(Emission, CsvAndJsonAreStable) {
  auto a = axes();
  ZeroSetQuery q(a, square(1), 3, 0.0);
  auto cloud = sample_zero_set(q);
  std::ostringstream csv;
  write_csv(csv, cloud);
  EXPECT_EQ(csv.str(), "x,y,residual\n-1,0,0\n0,-1,0\n0,0,0\n0,1,0\n1,0,0\n");
  const auto json = cloud_json(q, cloud);
  EXPECT_EQ(json, cloud_json(q, sample_zero_set(q)));
  auto parsed = nlohmann::json::parse(json);
  EXPECT_EQ(parsed["points"].size(), 5u);
  EXPECT_EQ(parsed["query"]["relations"][0], "x*y");
  EXPECT_EQ(parsed["residuals"].size(), 5u);
}
