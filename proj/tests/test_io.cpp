#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "haefliger/error.hpp"
#include "haefliger/generator.hpp"
#include "haefliger/io.hpp"
#include "test_support.hpp"

using namespace haefliger;
using io::json;

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

}  // namespace

TEST_CASE("diagram JSON round trip") {
  CrossingDiagram g = generator_diagram(2);
  CHECK(io::diagram_from_json(io::diagram_to_json(g)) == g);

  std::mt19937_64 rng(testing::test_seed());
  for (int trial = 0; trial < 100; ++trial) {
    CrossingDiagram d = validate_diagram(testing::random_raw_diagram(rng, 6, 5, 0.5, true));
    CHECK(io::diagram_from_json(json::parse(io::diagram_to_json(d).dump())) == d);
  }
}

TEST_CASE("diagram JSON parsing") {
  json j = json::parse(R"({"k": 1, "m": 2, "lk": [{"i": 1, "ei": 0, "j": 2, "ej": 1, "value": 3}]})");
  CrossingDiagram d = io::diagram_from_json(j);
  CHECK(d.lk({2, 1}, {1, 0}) == 3);
  CHECK(d.writhe_entries().empty());

  SUBCASE("conflicting restatement") {
    j["lk"].push_back({{"i", 2}, {"ei", 1}, {"j", 1}, {"ej", 0}, {"value", 4}});
    CHECK(kind_of([&] { io::diagram_from_json(j); }) == ErrorKind::AsymmetricEntry);
  }
  SUBCASE("identical restatement") {
    j["lk"].push_back({{"i", 2}, {"ei", 1}, {"j", 1}, {"ej", 0}, {"value", 3}});
    CHECK(kind_of([&] { io::diagram_from_json(j); }) == ErrorKind::ParseError);
  }
  SUBCASE("bad level") {
    j["lk"][0]["ei"] = 2;
    CHECK(kind_of([&] { io::diagram_from_json(j); }) == ErrorKind::ParseError);
  }
  SUBCASE("out of range crossing") {
    j["lk"][0]["j"] = 5;
    CHECK(kind_of([&] { io::diagram_from_json(j); }) == ErrorKind::IndexOutOfRange);
  }
  SUBCASE("missing and mistyped fields") {
    CHECK(kind_of([] { io::diagram_from_json(json::parse(R"({"m": 1})")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { io::diagram_from_json(json::parse(R"({"k": "1", "m": 1})")); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { io::diagram_from_json(json::parse("[]")); }) == ErrorKind::ParseError);
  }
}

TEST_CASE("curve JSON") {
  std::vector<PolyCurve> curves{testing::unit_square(), testing::threading_rectangle()};
  CHECK(io::curves_from_json(json::parse(io::curves_to_json(curves).dump())) == curves);
  CHECK(kind_of([] { io::curves_from_json(json::parse(R"({"components": [[[0, 0]]]})")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::curves_from_json(json::parse(R"({"points": []})")); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::curves_from_json(json::parse(R"({"components": [[[0,0,0],[1,0,0]]]})")); }) ==
        ErrorKind::InvalidCurve);
}

TEST_CASE("rationals") {
  CHECK(io::rational_to_json(Rational(-1, 2)).dump() == R"({"num":-1,"den":2})");
  CHECK(io::rational_to_json(Rational(4, 2)).dump() == R"({"num":2,"den":1})");
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_rational("1/2z"); }) == ErrorKind::ParseError);
}

TEST_CASE("read_json_file") {
  auto path = std::filesystem::temp_directory_path() / "haefliger_io_test.json";
  {
    std::ofstream f(path);
    f << "{ not json";
  }
  CHECK(kind_of([&] { io::read_json_file(path.string()); }) == ErrorKind::ParseError);
  std::filesystem::remove(path);
  CHECK(kind_of([&] { io::read_json_file(path.string()); }) == ErrorKind::ParseError);
}
