#include <doctest.h>

#include <algorithm>

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

std::vector<int> nonzero_values(const CrossingDiagram& d) {
  std::vector<int> v;
  for (const auto& [key, value] : d.lk_entries()) v.push_back(value);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("lift order is the crossing-change pair order") {
  CHECK(LiftId{1, 1} < LiftId{2, 0});
  CHECK(LiftId{2, 0} < LiftId{2, 1});
  CHECK_FALSE(LiftId{2, 1} < LiftId{2, 0});
  CHECK(make_lift_pair({3, 1}, {1, 0}) == LiftPair{{1, 0}, {3, 1}});
}

TEST_CASE("validate_diagram") {
  SUBCASE("empty diagram is valid") {
    CrossingDiagram d = validate_diagram({1, 0, {}, {}});
    CHECK(d.m() == 0);
    CHECK(d.lk_entries().empty());
  }
  SUBCASE("index out of range") {
    RawDiagram raw{1, 2, {{{1, 0}, {3, 1}, 2}}, {}};
    CHECK(kind_of([&] { validate_diagram(raw); }) == ErrorKind::IndexOutOfRange);
    raw = {1, 2, {}, {{{0, 0}, 1}}};
    CHECK(kind_of([&] { validate_diagram(raw); }) == ErrorKind::IndexOutOfRange);
    raw = {1, 2, {{{1, 2}, {2, 0}, 1}}, {}};
    CHECK(kind_of([&] { validate_diagram(raw); }) == ErrorKind::IndexOutOfRange);
  }
  SUBCASE("conflicting restatement is asymmetric") {
    RawDiagram raw{1, 2, {{{1, 0}, {2, 1}, 2}, {{2, 1}, {1, 0}, 3}}, {}};
    CHECK(kind_of([&] { validate_diagram(raw); }) == ErrorKind::AsymmetricEntry);
  }
  SUBCASE("consistent restatement collapses") {
    RawDiagram raw{1, 2, {{{1, 0}, {2, 1}, 2}, {{2, 1}, {1, 0}, 2}}, {}};
    CrossingDiagram d = validate_diagram(raw);
    CHECK(d.lk_entries().size() == 1);
    CHECK(d.lk({2, 1}, {1, 0}) == 2);
  }
  SUBCASE("self pair of one lift is rejected, the two lifts of a crossing are fine") {
    CHECK(kind_of([] { validate_diagram({1, 1, {{{1, 0}, {1, 0}, 1}}, {}}); }) == ErrorKind::InvalidEntry);
    CHECK(validate_diagram({1, 1, {{{1, 0}, {1, 1}, 1}}, {}}).lk({1, 1}, {1, 0}) == 1);
  }
  SUBCASE("missing entries are zero") {
    CrossingDiagram d = validate_diagram({1, 3, {{{1, 0}, {2, 0}, 5}}, {}});
    CHECK(d.lk({3, 0}, {2, 1}) == 0);
    CHECK(d.writhe({3, 0}) == 0);
  }
  SUBCASE("generator diagram is valid") {
    CrossingDiagram d = generator_diagram(1);
    CHECK(d.m() == 6);
    CHECK(d.lk_entries().size() == 6);
  }
}

TEST_CASE("crossing_change") {
  CrossingDiagram g = generator_diagram(1);

  SUBCASE("empty set is the identity") { CHECK(crossing_change(g, {}) == g); }

  SUBCASE("generator, S = {1}") {
    CrossingDiagram s = crossing_change(g, {1});
    CHECK(s.lk({1, 0}, {6, 1}) == 1);
    CHECK(s.lk({1, 1}, {6, 1}) == 0);
    CHECK(s.lk({1, 1}, {4, 0}) == 1);
  }

  SUBCASE("writhe keys swap levels too") {
    CrossingDiagram d = validate_diagram({1, 2, {}, {{{2, 0}, 3}}});
    CHECK(crossing_change(d, {2}).writhe({2, 1}) == 3);
    CHECK(crossing_change(d, {1}).writhe({2, 0}) == 3);
  }

  SUBCASE("out of range") {
    CHECK(kind_of([&] { crossing_change(g, {7}); }) == ErrorKind::IndexOutOfRange);
  }
}

TEST_CASE("crossing_change properties on random diagrams") {
  std::mt19937_64 rng(testing::test_seed());
  for (int trial = 0; trial < 300; ++trial) {
    CrossingDiagram d = validate_diagram(testing::random_raw_diagram(rng, 6, 5, 0.5, true));
    CrossingSet s = testing::random_subset(rng, d.m());
    CrossingSet t = testing::random_subset(rng, d.m());
    CrossingSet sym;
    std::set_symmetric_difference(s.begin(), s.end(), t.begin(), t.end(), std::inserter(sym, sym.end()));

    CHECK(crossing_change(crossing_change(d, s), s) == d);
    CHECK(crossing_change(crossing_change(d, s), t) == crossing_change(d, sym));
    CrossingDiagram c = crossing_change(d, s);
    CHECK(c.m() == d.m());
    CHECK(nonzero_values(c) == nonzero_values(d));
    CHECK(validate_diagram(d.to_raw()) == d);
  }
}
