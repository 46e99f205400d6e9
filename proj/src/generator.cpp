#include "haefliger/generator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

#include "haefliger/calculus.hpp"
#include "haefliger/error.hpp"

namespace haefliger {

namespace {

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

/// Index of the R^2 factor that serves as the disk coordinate of the solid
/// torus containing the double point circles, and of the one that serves as
/// the circle coordinate. X = d(D_alpha(y) x D_beta(z)) and cyclically.
struct SphereChart {
  int disk;
  int circle;
  double offset;
};

SphereChart chart_of(AmbientSphere s, double alpha) {
  switch (s) {
    case AmbientSphere::X: return {1, 2, 0.0};
    case AmbientSphere::Y: return {2, 0, 10 * alpha};
    case AmbientSphere::Z: return {0, 1, 20 * alpha};
  }
  return {1, 2, 0.0};
}

/// Maps a point of the solid torus D_alpha x S^1_beta of a sphere to R^3 by
/// the standard (untwisted) embedding, so linking numbers are preserved.
Vec3 chart_point(const std::array<double, 6>& p, const SphereChart& c, double alpha) {
  const double u0 = p[2 * c.disk], u1 = p[2 * c.disk + 1];
  const double theta = std::atan2(p[2 * c.circle + 1], p[2 * c.circle]);
  const double r = 2 * alpha + u0;
  return {c.offset + r * std::cos(theta), r * std::sin(theta), u1};
}

struct CircleData {
  LiftId lift;
  AmbientSphere sphere;
  // Center as multiples of (beta', beta') in each R^2 factor.
  std::array<int, 3> center_units;
  int plane;
};

// L_i^e as listed for Haefliger's generator, with b' = beta' * (1, 1).
constexpr std::array<CircleData, 12> kCircles{{
    {{1, 0}, AmbientSphere::Y, {-1, 0, -1}, 2},
    {{1, 1}, AmbientSphere::X, {0, 1, 0}, 2},
    {{2, 0}, AmbientSphere::X, {0, -1, 0}, 2},
    {{2, 1}, AmbientSphere::Y, {1, 0, 1}, 2},
    {{3, 0}, AmbientSphere::Z, {-1, -1, 0}, 0},
    {{3, 1}, AmbientSphere::Y, {0, 0, 1}, 0},
    {{4, 0}, AmbientSphere::Y, {0, 0, -1}, 0},
    {{4, 1}, AmbientSphere::Z, {1, 1, 0}, 0},
    {{5, 0}, AmbientSphere::X, {0, -1, -1}, 1},
    {{5, 1}, AmbientSphere::Z, {1, 0, 0}, 1},
    {{6, 0}, AmbientSphere::Z, {-1, 0, 0}, 1},
    {{6, 1}, AmbientSphere::X, {0, 1, 1}, 1},
}};

int slot(LiftId id) { return 2 * (id.crossing - 1) + id.level; }

}  // namespace

const char* to_string(AmbientSphere s) {
  switch (s) {
    case AmbientSphere::X: return "X";
    case AmbientSphere::Y: return "Y";
    case AmbientSphere::Z: return "Z";
  }
  return "?";
}

const std::array<LiftPair, 6>& generator_hopf_pairs() {
  static const std::array<LiftPair, 6> pairs{{
      {{1, 1}, {6, 1}},
      {{2, 0}, {5, 0}},
      {{1, 0}, {4, 0}},
      {{2, 1}, {3, 1}},
      {{3, 0}, {6, 0}},
      {{4, 1}, {5, 1}},
  }};
  return pairs;
}

CrossingDiagram generator_diagram(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidParams, "k must be positive");
  RawDiagram raw;
  raw.k = k;
  raw.m = 6;
  for (const auto& [a, b] : generator_hopf_pairs()) raw.lk.push_back({a, b, 1});
  return validate_diagram(raw);
}

std::vector<DoublePointCircle> generator_double_point_curves(const BorromeanParams& params, int resolution) {
  if (params.k != 1) throw Error(ErrorKind::InvalidParams, "explicit double point curves exist only for k = 1");
  if (params.alpha <= 0 || params.beta <= 0) throw Error(ErrorKind::InvalidParams, "alpha and beta must be positive");
  if (!(2 * params.beta < params.alpha)) throw Error(ErrorKind::InvalidParams, "requires 2*beta < alpha");
  if (resolution < 3) throw Error(ErrorKind::InvalidParams, "resolution must be at least 3");

  const double alpha = to_double(params.alpha);
  const double beta = to_double(params.beta);
  const double beta_prime = beta / std::sqrt(2.0 * params.k);

  std::vector<DoublePointCircle> out;
  out.reserve(kCircles.size());
  for (const auto& circle : kCircles) {
    DoublePointCircle c;
    c.lift = circle.lift;
    c.sphere = circle.sphere;
    c.plane = circle.plane;
    c.radius = beta;
    for (int f = 0; f < 3; ++f) {
      c.center[2 * f] = circle.center_units[f] * beta_prime;
      c.center[2 * f + 1] = circle.center_units[f] * beta_prime;
    }
    const SphereChart chart = chart_of(circle.sphere, alpha);
    std::vector<Vec3> vertices;
    vertices.reserve(resolution);
    // Circles in the disk factor (meridians of the solid torus) run clockwise
    // so that every Hopf pair links +1.
    const double turn = circle.plane == chart.disk ? -1.0 : 1.0;
    for (int j = 0; j < resolution; ++j) {
      const double t = turn * 2 * std::numbers::pi * j / resolution;
      auto p = c.center;
      p[2 * circle.plane] += beta * std::cos(t);
      p[2 * circle.plane + 1] += beta * std::sin(t);
      vertices.push_back(chart_point(p, chart, alpha));
    }
    c.curve = PolyCurve(std::move(vertices));
    out.push_back(std::move(c));
  }
  return out;
}

GeneratorReport verify_generator(const BorromeanParams& params, int resolution, std::uint64_t seed) {
  const auto circles = generator_double_point_curves(params, resolution);

  GeneratorReport report;
  RawDiagram raw;
  raw.k = 1;
  raw.m = 6;
  for (std::size_t a = 0; a < circles.size(); ++a) {
    for (std::size_t b = a + 1; b < circles.size(); ++b) {
      const int lk = linking_number_any_axis(circles[a].curve, circles[b].curve, ProjectionAxis{}, seed);
      const int sa = slot(circles[a].lift), sb = slot(circles[b].lift);
      report.linking[sa][sb] = report.linking[sb][sa] = lk;
      if (lk != 0) {
        ++report.nonzero_pairs;
        raw.lk.push_back({circles[a].lift, circles[b].lift, lk});
      }
    }
  }

  const auto& pairs = generator_hopf_pairs();
  report.global_sign = report.linking[slot(pairs[0].first)][slot(pairs[0].second)];
  if (std::abs(report.global_sign) != 1)
    throw std::runtime_error("generator Hopf pair does not have linking number +-1");
  const CrossingDiagram expected = generator_diagram(1);
  for (std::size_t a = 0; a < circles.size(); ++a)
    for (std::size_t b = a + 1; b < circles.size(); ++b) {
      const LiftId la = circles[a].lift, lb = circles[b].lift;
      if (report.linking[slot(la)][slot(lb)] != report.global_sign * expected.lk(la, lb))
        throw std::runtime_error("computed linking matrix differs from the generator diagram");
    }

  const CrossingDiagram computed = validate_diagram(raw);
  report.h = delta_h_reduced(computed, {1});
  for (int i = 1; i <= 6; ++i) report.single_switch[i - 1] = delta_h_reduced(computed, {i});
  return report;
}

}  // namespace haefliger
