#include "haefliger/linking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "haefliger/error.hpp"

namespace haefliger {

namespace mp = boost::multiprecision;

double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

double det3(Vec3 a, Vec3 b, Vec3 c) { return dot(a, cross(b, c)); }

PolyCurve::PolyCurve(std::vector<Vec3> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw Error(ErrorKind::InvalidCurve, "a curve needs at least 3 vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vec3& v = vertices_[i];
    if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
      throw Error(ErrorKind::InvalidCurve, "non-finite coordinate at vertex " + std::to_string(i));
    if (v == vertex(i + 1))
      throw Error(ErrorKind::InvalidCurve, "zero-length segment at vertex " + std::to_string(i));
  }
}

PolyCurve PolyCurve::reversed() const {
  return PolyCurve(std::vector<Vec3>(vertices_.rbegin(), vertices_.rend()));
}

PolyCurve PolyCurve::translated(Vec3 offset) const {
  std::vector<Vec3> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(v + offset);
  return PolyCurve(std::move(out));
}

ProjectionAxis::ProjectionAxis(Vec3 direction) : direction_(direction) {
  if (std::abs(norm(direction) - 1.0) > 1e-12)
    throw Error(ErrorKind::InvalidParams, "projection axis must have unit length");
}

ProjectionAxis ProjectionAxis::normalized(Vec3 direction) {
  double n = norm(direction);
  if (!(n > 0) || !std::isfinite(n)) throw Error(ErrorKind::InvalidParams, "projection axis must be nonzero");
  ProjectionAxis axis;
  axis.direction_ = (1.0 / n) * direction;
  return axis;
}

namespace detail {

namespace {

mp::cpp_rational exact(double v) { return mp::cpp_rational(v); }

struct ExactVec {
  mp::cpp_rational x, y, z;
};

ExactVec exact(Vec3 v) { return {exact(v.x), exact(v.y), exact(v.z)}; }

ExactVec sub(const ExactVec& a, const ExactVec& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

int exact_det_sign(const ExactVec& a, const ExactVec& b, const ExactVec& c) {
  mp::cpp_rational d = a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
                       a.z * (b.x * c.y - b.y * c.x);
  return d.sign();
}

double permanent(Vec3 a, Vec3 b, Vec3 c) {
  using std::abs;
  return abs(a.x) * (abs(b.y * c.z) + abs(b.z * c.y)) + abs(a.y) * (abs(b.x * c.z) + abs(b.z * c.x)) +
         abs(a.z) * (abs(b.x * c.y) + abs(b.y * c.x));
}

constexpr double kFilter = 32 * std::numeric_limits<double>::epsilon();

}  // namespace

int orient_sign(Vec3 a, Vec3 b, Vec3 c) {
  double d = det3(a, b, c);
  if (std::abs(d) > kFilter * permanent(a, b, c)) return d > 0 ? 1 : -1;
  return exact_det_sign(exact(a), exact(b), exact(c));
}

int orient_diff_sign(Vec3 p0, Vec3 p1, Vec3 q0, Vec3 q1, Vec3 r) {
  Vec3 u = p1 - p0;
  Vec3 v = q1 - q0;
  double d = det3(u, v, r);
  if (std::abs(d) > kFilter * permanent(u, v, r)) return d > 0 ? 1 : -1;
  return exact_det_sign(sub(exact(p1), exact(p0)), sub(exact(q1), exact(q0)), exact(r));
}

}  // namespace detail

namespace {

struct Bounds {
  Vec3 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
          std::numeric_limits<double>::max()};
  Vec3 hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest(),
          std::numeric_limits<double>::lowest()};

  void add(const PolyCurve& c) {
    for (const auto& v : c.vertices()) {
      lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
      hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
  }
  double diagonal() const { return norm(hi - lo); }
};

double tolerance_for(std::initializer_list<const PolyCurve*> curves) {
  Bounds b;
  for (const auto* c : curves) b.add(*c);
  return 1e-9 * b.diagonal();
}

/// Orthonormal frame (e1, e2) of the projection plane.
struct Plane {
  Vec3 axis, e1, e2;

  explicit Plane(Vec3 a) : axis(a) {
    Vec3 helper = std::abs(a.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    e1 = cross(a, helper);
    e1 = (1.0 / norm(e1)) * e1;
    e2 = cross(a, e1);
  }
  std::array<double, 2> project(Vec3 p) const { return {dot(p, e1), dot(p, e2)}; }
};

struct Box2 {
  double x0, x1, y0, y1;
};

Box2 segment_box(const Plane& plane, Vec3 a, Vec3 b, double pad) {
  auto pa = plane.project(a);
  auto pb = plane.project(b);
  return {std::min(pa[0], pb[0]) - pad, std::max(pa[0], pb[0]) + pad, std::min(pa[1], pb[1]) - pad,
          std::max(pa[1], pb[1]) + pad};
}

bool overlap(const Box2& a, const Box2& b) {
  return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

void check_not_vertical(const PolyCurve& c, Vec3 axis, double tol) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vec3 u = c.vertex(i + 1) - c.vertex(i);
    if (norm(cross(u, axis)) < tol)
      throw Error(ErrorKind::NonGenericProjection,
                  "segment " + std::to_string(i) + " is parallel to the projection axis");
  }
}

/// Crossing of the projections of segments P = p1p2 and Q = q1q2.
/// Returns nothing when they are disjoint; throws on degenerate contact.
struct SegmentCrossing {
  bool p_over;
  int sign;
};

std::optional<SegmentCrossing> crossing_of(Vec3 p1, Vec3 p2, Vec3 q1, Vec3 q2, Vec3 axis, double tol) {
  int s1 = detail::orient_diff_sign(p1, p2, p1, q1, axis);
  int s2 = detail::orient_diff_sign(p1, p2, p1, q2, axis);
  int s3 = detail::orient_diff_sign(q1, q2, q1, p1, axis);
  int s4 = detail::orient_diff_sign(q1, q2, q1, p2, axis);
  if (s1 * s2 > 0 || s3 * s4 > 0) return std::nullopt;
  if (s1 == 0 || s2 == 0 || s3 == 0 || s4 == 0)
    throw Error(ErrorKind::NonGenericProjection, "projected segments touch at a vertex or overlap");

  Vec3 u = p2 - p1;
  Vec3 v = q2 - q1;
  double o1 = det3(u, q1 - p1, axis);
  double o2 = det3(u, q2 - p1, axis);
  double o3 = det3(v, p1 - q1, axis);
  double o4 = det3(v, p2 - q1, axis);
  double lu = norm(cross(u, axis));
  double lv = norm(cross(v, axis));
  if (std::min(std::abs(o1), std::abs(o2)) / lu < tol || std::min(std::abs(o3), std::abs(o4)) / lv < tol)
    throw Error(ErrorKind::NonGenericProjection, "projection crossing lies within tolerance of a vertex");

  double s = o3 / (o3 - o4);
  double t = o1 / (o1 - o2);
  double height = dot(p1 + s * u - q1 - t * v, axis);
  if (std::abs(height) < tol) throw Error(ErrorKind::CurvesIntersect, "curves meet in space");

  int frame = detail::orient_diff_sign(p1, p2, q1, q2, axis);
  bool p_over = height > 0;
  return SegmentCrossing{p_over, p_over ? frame : -frame};
}

std::vector<ProjectedCrossing> crossings_impl(const PolyCurve& a, const PolyCurve& b, Vec3 axis, double tol,
                                              bool self) {
  Plane plane(axis);
  std::vector<Box2> boxes_b;
  boxes_b.reserve(b.size());
  for (std::size_t j = 0; j < b.size(); ++j)
    boxes_b.push_back(segment_box(plane, b.vertex(j), b.vertex(j + 1), tol));

  std::vector<ProjectedCrossing> out;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    Box2 box_a = segment_box(plane, a.vertex(i), a.vertex(i + 1), tol);
    for (std::size_t j = self ? i + 1 : 0; j < b.size(); ++j) {
      if (self && (j == i + 1 || (i == 0 && j == n - 1))) continue;
      if (!overlap(box_a, boxes_b[j])) continue;
      auto c = crossing_of(a.vertex(i), a.vertex(i + 1), b.vertex(j), b.vertex(j + 1), axis, tol);
      if (c) out.push_back({i, j, c->p_over, c->sign});
    }
  }
  return out;
}

/// Adjacent projected segments folding back onto each other.
void check_no_foldback(const PolyCurve& c, Vec3 axis) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vec3 p0 = c.vertex(i), p1 = c.vertex(i + 1), p2 = c.vertex(i + 2);
    if (detail::orient_diff_sign(p0, p1, p1, p2, axis) == 0) {
      Vec3 u = cross(cross(axis, p1 - p0), axis);
      Vec3 v = cross(cross(axis, p2 - p1), axis);
      if (dot(u, v) < 0)
        throw Error(ErrorKind::NonGenericProjection, "projection folds back at vertex " + std::to_string(i + 1));
    }
  }
}

double segment_distance(Vec3 p0, Vec3 p1, Vec3 q0, Vec3 q1) {
  Vec3 d1 = p1 - p0, d2 = q1 - q0, r = p0 - q0;
  double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
  double c = dot(d1, r), b = dot(d1, d2);
  double denom = a * e - b * b;
  double s = denom > 1e-300 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
  double t = (b * s + f) / e;
  if (t < 0) {
    t = 0;
    s = std::clamp(-c / a, 0.0, 1.0);
  } else if (t > 1) {
    t = 1;
    s = std::clamp((b - c) / a, 0.0, 1.0);
  }
  return norm((p0 + s * d1) - (q0 + t * d2));
}

}  // namespace

std::vector<ProjectedCrossing> projected_crossings(const PolyCurve& m, const PolyCurve& n,
                                                   const ProjectionAxis& axis) {
  double tol = tolerance_for({&m, &n});
  Vec3 a = axis.direction();
  check_not_vertical(m, a, tol);
  check_not_vertical(n, a, tol);
  return crossings_impl(m, n, a, tol, false);
}

int linking_number_pl(const PolyCurve& m, const PolyCurve& n, const ProjectionAxis& axis) {
  int total = 0;
  for (const auto& c : projected_crossings(m, n, axis)) total += c.sign;
  if (total % 2 != 0)
    throw Error(ErrorKind::NonGenericProjection, "odd signed crossing count; projection is not generic");
  return total / 2;
}

int writhe_pl(const PolyCurve& l, const ProjectionAxis& axis) {
  double tol = tolerance_for({&l});
  Vec3 a = axis.direction();
  check_not_vertical(l, a, tol);
  check_no_foldback(l, a);
  int total = 0;
  for (const auto& c : crossings_impl(l, l, a, tol, true)) total += c.sign;
  return total;
}

double gauss_linking_quadrature(const PolyCurve& m, const PolyCurve& n, int subdivisions) {
  if (subdivisions < 1) throw Error(ErrorKind::InvalidParams, "subdivisions must be positive");
  {
    double tol = tolerance_for({&m, &n});
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < n.size(); ++j)
        if (segment_distance(m.vertex(i), m.vertex(i + 1), n.vertex(j), n.vertex(j + 1)) < tol)
          throw Error(ErrorKind::CurvesIntersect, "curves meet in space");
  }

  // 3-point Gauss-Legendre nodes and weights on [0, 1].
  const double r = std::sqrt(0.6) / 2;
  const std::array<double, 3> nodes{0.5 - r, 0.5, 0.5 + r};
  const std::array<double, 3> weights{5.0 / 18, 8.0 / 18, 5.0 / 18};

  auto samples = [&](const PolyCurve& c) {
    struct Sample {
      Vec3 point, tangent;
      double weight;
    };
    std::vector<Sample> out;
    out.reserve(c.size() * subdivisions * 3);
    const double h = 1.0 / subdivisions;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vec3 p = c.vertex(i), d = c.vertex(i + 1) - p;
      for (int s = 0; s < subdivisions; ++s)
        for (int q = 0; q < 3; ++q) out.push_back({p + ((s + nodes[q]) * h) * d, d, weights[q] * h});
    }
    return out;
  };
  auto sm = samples(m);
  auto sn = samples(n);

  double total = 0;
  for (const auto& a : sm) {
    double row = 0;
    for (const auto& b : sn) {
      Vec3 diff = a.point - b.point;
      double dist = norm(diff);
      row += b.weight * det3(a.tangent, b.tangent, diff) / (dist * dist * dist);
    }
    total += a.weight * row;
  }
  return total / (4 * std::numbers::pi);
}

ProjectionAxis random_axis(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (;;) {
    Vec3 v{normal(rng), normal(rng), normal(rng)};
    if (norm(v) > 1e-3) return ProjectionAxis::normalized(v);
  }
}

int linking_number_any_axis(const PolyCurve& m, const PolyCurve& n, const ProjectionAxis& preferred,
                            std::uint64_t seed, int attempts) {
  try {
    return linking_number_pl(m, n, preferred);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonGenericProjection) throw;
  }
  for (int i = 0; i < attempts; ++i) {
    try {
      return linking_number_pl(m, n, random_axis(seed + static_cast<std::uint64_t>(i)));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonGenericProjection) throw;
    }
  }
  throw Error(ErrorKind::NonGenericProjection, "no generic projection axis found");
}

PolyCurve connected_sum_pl(const PolyCurve& m1, const PolyCurve& m2, std::pair<std::size_t, std::size_t> band,
                           const ProjectionAxis& axis, std::span<const PolyCurve> designated) {
  const auto [i, j] = band;
  if (i >= m1.size() || j >= m2.size())
    throw Error(ErrorKind::IndexOutOfRange, "band vertex index outside the curve");

  const Vec3 a0 = m1.vertex(i), a1 = m1.vertex(i + 1);
  const Vec3 b0 = m2.vertex(j), b1 = m2.vertex(j + 1);

  double tol = tolerance_for({&m1, &m2});
  for (const auto& c : designated) tol = std::max(tol, tolerance_for({&m1, &m2, &c}));

  // New edges a0 -> b1 and b0 -> a1 must stay clear of both curves, except at
  // the segments they attach to.
  auto clear_of = [&](Vec3 p, Vec3 q, const PolyCurve& c, std::size_t skip_a, std::size_t skip_b,
                      std::size_t skip_c) {
    for (std::size_t s = 0; s < c.size(); ++s) {
      if (s == skip_a || s == skip_b || s == skip_c) continue;
      if (segment_distance(p, q, c.vertex(s), c.vertex(s + 1)) < tol) return false;
    }
    return true;
  };
  const std::size_t n1 = m1.size(), n2 = m2.size();
  const std::size_t m1_prev = (i + n1 - 1) % n1, m1_next = (i + 1) % n1;
  const std::size_t m2_prev = (j + n2 - 1) % n2, m2_next = (j + 1) % n2;
  // a0 -> b1 touches m1 at a0 (segments i-1 and i) and m2 at b1 (segments j and j+1).
  if (!clear_of(a0, b1, m1, m1_prev, i, i) || !clear_of(a0, b1, m2, j, m2_next, j) ||
      !clear_of(b0, a1, m1, i, m1_next, i) || !clear_of(b0, a1, m2, m2_prev, j, j) ||
      segment_distance(a0, b1, b0, a1) < tol)
    throw Error(ErrorKind::BandObstructed, "band edge meets a curve");

  Vec3 ax = axis.direction();
  auto crosses = [&](Vec3 p, Vec3 q, Vec3 r, Vec3 s) {
    try {
      return crossing_of(p, q, r, s, ax, tol).has_value();
    } catch (const Error&) {
      return true;
    }
  };
  const std::array<std::pair<Vec3, Vec3>, 4> quad{{{a0, a1}, {a0, b1}, {b0, b1}, {b0, a1}}};
  for (const auto& c : designated) {
    for (std::size_t s = 0; s < c.size(); ++s)
      for (const auto& [p, q] : quad)
        if (crosses(p, q, c.vertex(s), c.vertex(s + 1)))
          throw Error(ErrorKind::BandObstructed, "band changes the crossings with a designated curve");
  }

  std::vector<Vec3> out;
  out.reserve(n1 + n2);
  for (std::size_t s = 0; s <= i; ++s) out.push_back(m1.vertex(s));
  for (std::size_t s = 1; s <= n2; ++s) out.push_back(m2.vertex(j + s));
  for (std::size_t s = i + 1; s < n1; ++s) out.push_back(m1.vertex(s));
  return PolyCurve(std::move(out));
}

}  // namespace haefliger
