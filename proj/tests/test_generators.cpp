#include <doctest.h>

#include "expected_values.hpp"
#include "octic/formulas.hpp"
#include "octic/generators.hpp"
#include "octic/incidence.hpp"

using namespace octic;

// Every shipped plane fixture is certified against its advertised strata:
// the generators pick fixed small-integer planes and this test is the
// genericity proof.
TEST_CASE("every plane fixture realizes its advertised descriptor") {
  for (const auto& expected : testing::plane_fixture_expectations()) {
    CAPTURE(expected.name);
    auto planes = build_generator(expected.name);
    REQUIRE(planes.has_value());
    REQUIRE(planes->size() == 8);
    IncidenceReport report = analyze(*planes);
    REQUIRE(report.violations.empty());
    ArrangementDescriptor desc = to_descriptor(report);
    CHECK(desc.p4_0 == expected.p4_0);
    CHECK(desc.p4_1 == expected.p4_1);
    CHECK(desc.p5_0 == expected.p5_0);
    CHECK(desc.p5_1 == expected.p5_1);
    CHECK(desc.p5_2 == expected.p5_2);
    CHECK(desc.l3 == expected.l3);
    CHECK(euler_closed_form(desc).value == expected.euler);
  }
}

TEST_CASE("generator aliases and parameter ranges") {
  CHECK(build_generator("cube+2@6").has_value());
  CHECK(build_generator("cube+2@6") == build_generator("cube-plus-6"));
  CHECK(build_generator("generic-8").has_value());
  CHECK(build_generator("generic-5")->size() == 5);
  CHECK_FALSE(build_generator("generic-1").has_value());
  CHECK_FALSE(build_generator("cube+2@7").has_value());
  CHECK_FALSE(build_generator("no-such-family").has_value());
  CHECK_THROWS_AS(cube_plus(7), Error);
  CHECK_THROWS_AS(glued_tetrahedra(3), Error);
  CHECK_THROWS_AS(generic_planes(1), Error);
}

TEST_CASE("moment-curve planes are provably generic for small n") {
  for (int n : {4, 6, 10}) {
    IncidenceReport report = analyze(generic_planes(n));
    CHECK(report.violations.empty());
    CHECK(static_cast<long long>(report.lines.size()) == n * (n - 1) / 2);
    CHECK(report.count_points(3) ==
          static_cast<long long>(n) * (n - 1) * (n - 2) / 6);
  }
}
