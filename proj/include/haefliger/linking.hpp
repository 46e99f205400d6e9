#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace haefliger {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

double dot(Vec3 a, Vec3 b);
Vec3 cross(Vec3 a, Vec3 b);
double norm(Vec3 a);
double det3(Vec3 a, Vec3 b, Vec3 c);

/// Closed oriented polygon in R^3. The last vertex joins back to the first.
class PolyCurve {
public:
  PolyCurve() = default;
  /// Throws InvalidCurve on fewer than three vertices or a zero-length segment.
  explicit PolyCurve(std::vector<Vec3> vertices);

  const std::vector<Vec3>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  Vec3 vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  PolyCurve reversed() const;
  PolyCurve translated(Vec3 offset) const;

  friend bool operator==(const PolyCurve&, const PolyCurve&) = default;

private:
  std::vector<Vec3> vertices_;
};

/// Unit projection direction. Points with larger `dot(p, direction())` are
/// "over" when viewed along the axis.
class ProjectionAxis {
public:
  ProjectionAxis() = default;
  /// Requires unit length within 1e-12 (InvalidParams otherwise).
  explicit ProjectionAxis(Vec3 direction);
  static ProjectionAxis normalized(Vec3 direction);

  Vec3 direction() const noexcept { return direction_; }

private:
  Vec3 direction_{0, 0, 1};
};

/// Signed projection crossing between two segments. `sign` uses the
/// right-handed rule sign(det(t_over, t_under, axis)).
struct ProjectedCrossing {
  std::size_t segment_a = 0;
  std::size_t segment_b = 0;
  bool a_over = false;
  int sign = 0;
};

/// All crossings between the projections of `m` and `n`.
/// Throws NonGenericProjection or CurvesIntersect.
std::vector<ProjectedCrossing> projected_crossings(const PolyCurve& m, const PolyCurve& n,
                                                   const ProjectionAxis& axis);

/// Half the signed count of projection crossings between M and N.
int linking_number_pl(const PolyCurve& m, const PolyCurve& n,
                      const ProjectionAxis& axis = ProjectionAxis{});

/// Signed self-crossing count of the projection of L.
int writhe_pl(const PolyCurve& l, const ProjectionAxis& axis = ProjectionAxis{});

/// Gauss double integral (1/4pi) \oint\oint det(g1', g2', g1 - g2) / |g1 - g2|^3
/// evaluated with composite 3-point Gauss-Legendre rules, each segment cut
/// into `subdivisions` pieces. Summation order is fixed.
double gauss_linking_quadrature(const PolyCurve& m, const PolyCurve& n, int subdivisions);

/// Random unit axis drawn from the seeded generator (uniform on the sphere).
ProjectionAxis random_axis(std::uint64_t seed);

/// Tries `preferred` first, then seeded random axes until the projection is
/// generic. Rethrows CurvesIntersect immediately.
int linking_number_any_axis(const PolyCurve& m, const PolyCurve& n,
                            const ProjectionAxis& preferred = ProjectionAxis{},
                            std::uint64_t seed = 1, int attempts = 16);

/// Band sum joining segment (band.first, band.first+1) of M1 with segment
/// (band.second, band.second+1) of M2. The result runs along M1 to vertex
/// band.first, crosses to M2 at band.second+1, goes once around M2 to
/// band.second and returns to M1 at band.first+1.
///
/// Throws BandObstructed when a new edge meets either curve in space, or
/// when any edge of the band quadrilateral crosses one of `designated` in
/// projection (which would break additivity of linking numbers with those
/// curves).
PolyCurve connected_sum_pl(const PolyCurve& m1, const PolyCurve& m2,
                           std::pair<std::size_t, std::size_t> band,
                           const ProjectionAxis& axis = ProjectionAxis{},
                           std::span<const PolyCurve> designated = {});

namespace detail {
/// Exact sign of det(a, b, c) for double inputs (filtered, with a
/// rational fallback when the floating estimate is inconclusive).
int orient_sign(Vec3 a, Vec3 b, Vec3 c);
/// Exact sign of det(b - a, d - c, axis) style determinants built from
/// coordinate differences: sign(det(p1 - p0, q1 - q0, r)).
int orient_diff_sign(Vec3 p0, Vec3 p1, Vec3 q0, Vec3 q1, Vec3 r);
}  // namespace detail

}  // namespace haefliger
