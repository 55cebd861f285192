#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "pck/cring.hpp"

namespace pck {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Grid scan request over a box in R^N.
class ZeroSetQuery {
 public:
  ZeroSetQuery(RingPresentation presentation, std::vector<Interval> box, std::size_t resolution,
               double tolerance)
      : presentation_(std::move(presentation)),
        box_(std::move(box)),
        resolution_(resolution),
        tolerance_(tolerance) {
    if (box_.size() != presentation_.arity())
      throw MathError("box needs " + std::to_string(presentation_.arity()) + " intervals, got " +
                      std::to_string(box_.size()));
    for (const auto& iv : box_)
      if (!(iv.lo <= iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi))
        throw MathError("box interval is empty or not finite");
    if (resolution_ < 2) throw MathError("resolution must be at least 2");
    if (!(tolerance_ >= 0.0)) throw MathError("tolerance must be non-negative");
    double cells = 1.0;
    for (std::size_t i = 0; i < box_.size(); ++i) cells *= static_cast<double>(resolution_);
    if (cells > 1e8) throw MathError("grid has more than 1e8 points");
  }

  const RingPresentation& presentation() const { return presentation_; }
  const std::vector<Interval>& box() const { return box_; }
  std::size_t resolution() const { return resolution_; }
  double tolerance() const { return tolerance_; }

  double coordinate(std::size_t axis, std::size_t k) const {
    const auto& iv = box_[axis];
    if (k + 1 == resolution_) return iv.hi;
    return iv.lo + (iv.hi - iv.lo) * static_cast<double>(k) / static_cast<double>(resolution_ - 1);
  }

 private:
  RingPresentation presentation_;
  std::vector<Interval> box_;
  std::size_t resolution_;
  double tolerance_;
};

struct PointCloud {
  std::vector<std::string> variables;
  std::vector<std::vector<double>> points;
  std::vector<double> residuals;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

/// max |g(x)| over the generators of J.
inline double residual(const RingPresentation& a, std::span<const double> x) {
  double r = 0.0;
  for (const auto& g : a.ideal().generators()) r = std::max(r, std::abs(g.evaluate(x)));
  return r;
}

/// Row-major scan (last variable fastest). Chunks are evaluated in parallel and
/// concatenated in grid order.
inline PointCloud sample_zero_set(const ZeroSetQuery& q) {
  const std::size_t n = q.presentation().arity();
  const std::size_t res = q.resolution();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= res;

  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, total / 4096));
  std::vector<PointCloud> parts(workers);
  auto scan = [&](std::size_t w) {
    const std::size_t begin = total * w / workers, end = total * (w + 1) / workers;
    std::vector<double> x(n);
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::size_t rest = idx;
      for (std::size_t axis = n; axis-- > 0;) {
        x[axis] = q.coordinate(axis, rest % res);
        rest /= res;
      }
      const double r = residual(q.presentation(), x);
      if (r <= q.tolerance()) {
        parts[w].points.push_back(x);
        parts[w].residuals.push_back(r);
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }

  PointCloud out;
  out.variables = q.presentation().variables();
  for (auto& part : parts) {
    out.points.insert(out.points.end(), std::make_move_iterator(part.points.begin()),
                      std::make_move_iterator(part.points.end()));
    out.residuals.insert(out.residuals.end(), part.residuals.begin(), part.residuals.end());
  }
  return out;
}

// Basic opens U_a = { x : x(a) != 0 }.

inline bool basic_open_contains(const RingElement& a, const RPoint& x) { return !evaluate(a, x).is_zero(); }

inline bool basic_open_contains(const RingElement& a, std::span<const double> x, double tol) {
  return std::abs(a.rep().evaluate(x)) > tol;
}

/// (x ∈ U_a, x ∈ U_b, x ∈ U_ab).
inline std::array<bool, 3> basic_open_intersection_law(const RingElement& a, const RingElement& b,
                                                       const RPoint& x) {
  return {basic_open_contains(a, x), basic_open_contains(b, x), basic_open_contains(a * b, x)};
}

/// x ∈ Spec(φ)^{-1}(U_a) iff x ∈ U_{φ(a)}; returns whether both sides agree.
inline bool preimage_law_holds(const RingMap& phi, const RingElement& a, const RPoint& x) {
  return basic_open_contains(phi(a), x) == basic_open_contains(a, spec_on_points(phi, x));
}

inline bool preimage_law_holds(const RingMap& phi, const RingElement& a, std::span<const double> x,
                               double tol) {
  const auto image = spec_on_points(phi, x);
  return basic_open_contains(phi(a), x, tol) == basic_open_contains(a, image, tol);
}

/// Witness for the image law: a lives in the quotient, b in the ambient ring,
/// and the projection sends b to a.
struct EmbeddingWitness {
  RingElement quotient_element;
  RingElement ambient_element;
};

struct EmbeddingReport {
  std::size_t points_checked = 0;
  std::size_t witnesses_checked = 0;
  std::size_t image_failures = 0;
  std::size_t law_failures = 0;
  double max_image_residual = 0.0;
  std::vector<std::string> failures;

  bool passed() const { return image_failures == 0 && law_failures == 0; }
};

/// Checks that sampled points of Z(J + I) map into Z(J) and that the image of
/// U_a is Z(J + I) ∩ {b != 0} for each witness pair.
inline EmbeddingReport embedding_check(const RingMap& projection, const PointCloud& sample,
                                       const std::vector<EmbeddingWitness>& witnesses, double tol) {
  if (!projection.is_projection()) throw MathError("embedding check needs a quotient projection");
  const auto& ambient = projection.source();
  const auto& quotient = projection.target();
  for (const auto& g : ambient.ideal().generators())
    if (!quotient.normal_form(g).is_zero())
      throw MathError("embedding check needs a quotient projection: relation " + ambient.to_string(g) +
                      " is not in the target ideal");
  for (const auto& w : witnesses) {
    if (!(w.quotient_element.owner() == quotient) || !(w.ambient_element.owner() == ambient))
      throw MathError("embedding witness belongs to the wrong ring");
    if (!(projection(w.ambient_element) == w.quotient_element))
      throw MathError("embedding witness " + w.ambient_element.to_string() + " does not map to " +
                      w.quotient_element.to_string());
  }

  EmbeddingReport report;
  report.witnesses_checked = witnesses.size();
  for (const auto& x : sample.points) {
    ++report.points_checked;
    const auto image = spec_on_points(projection, x);
    const double r = residual(ambient, image);
    report.max_image_residual = std::max(report.max_image_residual, r);
    const bool on_target = residual(quotient, x) <= tol;
    if (r > tol || !on_target) {
      ++report.image_failures;
      if (report.failures.size() < 8) report.failures.push_back("point " + std::to_string(report.points_checked) + " leaves the zero set");
    }
    const bool image_in_closed = residual(quotient, image) <= tol;
    for (const auto& w : witnesses) {
      const bool lhs = basic_open_contains(w.quotient_element, x, tol);
      const bool rhs = image_in_closed && basic_open_contains(w.ambient_element, image, tol);
      if (lhs != rhs) {
        ++report.law_failures;
        if (report.failures.size() < 8)
          report.failures.push_back("image law fails for " + w.quotient_element.to_string() + " at point " +
                                    std::to_string(report.points_checked));
      }
    }
  }
  return report;
}

/// Product of squared distances to the points of C: zero on C, positive off C.
struct SeparatingFunction {
  std::vector<Polynomial> factors;

  double evaluate(std::span<const double> x) const {
    double v = 1.0;
    for (const auto& f : factors) v *= f.evaluate(x);
    return v;
  }
};

/// Separator for x against the finite set C, or nothing when x lies in C
/// within tolerance.
inline std::optional<SeparatingFunction> separate(std::size_t arity, std::span<const double> x,
                                                  const std::vector<std::vector<double>>& closed,
                                                  double tol) {
  SeparatingFunction f;
  for (const auto& c : closed) {
    Polynomial d(arity);
    double dist2 = 0.0;
    for (std::size_t i = 0; i < arity; ++i) {
      const Scalar ci(mpq_class(c[i]));
      Polynomial diff = Polynomial::variable(arity, i) - ci;
      d += diff * diff;
      dist2 += (x[i] - c[i]) * (x[i] - c[i]);
    }
    if (dist2 <= tol * tol) return std::nullopt;
    f.factors.push_back(std::move(d));
  }
  return f;
}

namespace detail {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

/// Header of variable names plus `residual`, one row per point.
inline void write_csv(std::ostream& out, const PointCloud& cloud) {
  for (const auto& v : cloud.variables) out << v << ',';
  out << "residual\n";
  for (std::size_t k = 0; k < cloud.points.size(); ++k) {
    for (double c : cloud.points[k]) out << detail::format_double(c) << ',';
    out << detail::format_double(cloud.residuals[k]) << '\n';
  }
}

inline nlohmann::ordered_json query_json(const ZeroSetQuery& q) {
  nlohmann::ordered_json j;
  j["variables"] = q.presentation().variables();
  auto rel = nlohmann::ordered_json::array();
  for (const auto& g : q.presentation().ideal().generators()) rel.push_back(q.presentation().to_string(g));
  j["relations"] = rel;
  auto box = nlohmann::ordered_json::array();
  for (const auto& iv : q.box()) box.push_back({iv.lo, iv.hi});
  j["box"] = box;
  j["resolution"] = q.resolution();
  j["tolerance"] = q.tolerance();
  return j;
}

/// {"query": ..., "points": [[...], ...], "residuals": [...]}.
inline std::string cloud_json(const ZeroSetQuery& q, const PointCloud& cloud) {
  nlohmann::ordered_json j;
  j["query"] = query_json(q);
  j["points"] = cloud.points;
  j["residuals"] = cloud.residuals;
  return j.dump(2) + "\n";
}

}  // namespace pck
