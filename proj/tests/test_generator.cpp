#include <doctest.h>

#include <map>
#include <set>

#include "haefliger/calculus.hpp"
#include "haefliger/error.hpp"
#include "haefliger/generator.hpp"
#include "test_support.hpp"

using namespace haefliger;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::ParseError;
}

int index_of(LiftId l) { return 2 * (l.crossing - 1) + l.level; }

}  // namespace

TEST_CASE("generator diagram") {
  for (int k = 1; k <= 3; ++k) {
    CrossingDiagram g = generator_diagram(k);
    CHECK(g.k() == k);
    CHECK(g.m() == 6);
    CHECK(g.lk_entries().size() == 6);
    for (const auto& pair : generator_hopf_pairs()) CHECK(g.lk(pair.first, pair.second) == 1);
    CHECK(g.lk_entries() == generator_diagram(1).lk_entries());
  }
  // Every lift belongs to exactly one Hopf pair.
  std::set<LiftId> seen;
  for (const auto& [a, b] : generator_hopf_pairs()) {
    CHECK(seen.insert(a).second);
    CHECK(seen.insert(b).second);
  }
  CHECK(seen.size() == 12);
}

TEST_CASE("double point circles") {
  auto circles = generator_double_point_curves(BorromeanParams{}, 48);
  REQUIRE(circles.size() == 12);
  std::map<AmbientSphere, int> per_sphere;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    const auto& c = circles[i];
    CHECK(index_of(c.lift) == static_cast<int>(i));
    CHECK(c.curve.size() == 48);
    CHECK(c.radius > 0);
    CHECK((c.plane >= 0 && c.plane <= 2));
    ++per_sphere[c.sphere];
  }
  CHECK(per_sphere[AmbientSphere::X] == 4);
  CHECK(per_sphere[AmbientSphere::Y] == 4);
  CHECK(per_sphere[AmbientSphere::Z] == 4);
  // The two lifts of a double point lie on different spheres.
  for (std::size_t i = 0; i < 12; i += 2) CHECK(circles[i].sphere != circles[i + 1].sphere);
}

TEST_CASE("double point circles: parameter errors") {
  CHECK(kind_of([] { generator_double_point_curves({Rational(4), Rational(1), 2}); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { generator_double_point_curves({Rational(4), Rational(2), 1}); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { generator_double_point_curves({Rational(4), Rational(1), 1}, 2); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { generator_double_point_curves({Rational(4), Rational(-1), 1}); }) == ErrorKind::InvalidParams);
}

TEST_CASE("verify_generator recovers the six Hopf pairs") {
  GeneratorReport r = verify_generator(BorromeanParams{}, 64);
  CHECK(r.nonzero_pairs == 6);
  CHECK(r.global_sign == 1);
  CHECK(r.h == Rational(1));
  for (const auto& s : r.single_switch) CHECK(s == Rational(1));

  // Independent check of the matrix from the raw curves.
  auto circles = generator_double_point_curves(BorromeanParams{}, 64);
  int nonzero = 0;
  for (int a = 0; a < 12; ++a) {
    CHECK(r.linking[a][a] == 0);
    for (int b = a + 1; b < 12; ++b) {
      CHECK(r.linking[a][b] == r.linking[b][a]);
      int lk = testing::brute_force_lk(circles[a].curve, circles[b].curve, random_axis(a * 12 + b).direction());
      CHECK(lk == r.linking[a][b]);
      nonzero += lk != 0;
    }
  }
  CHECK(nonzero == 6);
  for (const auto& [x, y] : generator_hopf_pairs()) CHECK(r.linking[index_of(x)][index_of(y)] == 1);
}

TEST_CASE("verify_generator is independent of resolution and sizes") {
  for (int n : {32, 48, 128}) {
    GeneratorReport r = verify_generator(BorromeanParams{}, n);
    CHECK(r.nonzero_pairs == 6);
    CHECK(r.h == Rational(1));
  }
  GeneratorReport r = verify_generator({Rational(5), Rational(2), 1}, 40, 7);
  CHECK(r.h == Rational(1));
  r = verify_generator({Rational(9, 2), Rational(1, 3), 1}, 40, 9);
  CHECK(r.h == Rational(1));
}
