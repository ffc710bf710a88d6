#include <doctest.h>

#include <set>

#include "expected_values.hpp"
#include "octic/enumerate.hpp"
#include "octic/fixtures.hpp"
#include "octic/formulas.hpp"

using namespace octic;

TEST_CASE("there are 22 octic degree partitions") {
  CHECK(octic_degree_partitions().size() == 22);
}

TEST_CASE("zero bounds enumerate exactly the strata-free partitions") {
  std::vector<long long> values;
  long long count = 0;
  enumerate_descriptors(EnumerationBounds{}, std::nullopt,
                        [&](const ArrangementDescriptor& d, const EulerResult& e) {
                          ++count;
                          values.push_back(e.value);
                          CHECK(d.p4_0 + d.p4_1 + d.p5_0 + d.p5_1 + d.p5_2 +
                                    d.l3 ==
                                0);
                        });
  CHECK(count == 22);

  // The value set covers every zero-count table row; the one partition the
  // table omits, (1,3,4), lands on the already-listed value -120.
  std::set<long long> value_set(values.begin(), values.end());
  std::set<long long> zero_rows;
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    const auto& d = corpus()[i];
    if (d.p4_0 + d.p4_1 + d.p5_0 + d.p5_1 + d.p5_2 + d.l3 == 0)
      zero_rows.insert(testing::kCorpusEuler[i]);
  }
  CHECK(zero_rows.size() == 21);
  CHECK(value_set == zero_rows);
}

TEST_CASE("bounded enumeration over eight planes sweeps 40..88 in steps of 4") {
  EnumerationBounds bounds;
  bounds.p4_0 = 12;
  std::set<long long> values;
  enumerate_descriptors(bounds, std::vector<long long>(8, 1),
                        [&](const ArrangementDescriptor&, const EulerResult& e) {
                          values.insert(e.value);
                        });
  for (long long v = 40; v <= 88; v += 4) CHECK(values.count(v) == 1);
  CHECK(values.size() == 13);
}

TEST_CASE("an explicitly empty degree multiset enumerates nothing") {
  long long count = 0;
  enumerate_descriptors(EnumerationBounds{}, std::vector<long long>{},
                        [&](const ArrangementDescriptor&, const EulerResult&) {
                          ++count;
                        });
  CHECK(count == 0);
}

TEST_CASE("every enumerated descriptor validates") {
  EnumerationBounds bounds{2, 5, 1, 2, 2, 2};
  enumerate_descriptors(bounds, std::nullopt,
                        [&](const ArrangementDescriptor& d, const EulerResult&) {
                          CHECK(validate(d).ok());
                        });
}

TEST_CASE("corpus rows validate and perturbed rows fail the line relation") {
  for (const auto& desc : corpus()) CHECK(validate(desc).ok());
  for (const auto& desc : corpus()) {
    ArrangementDescriptor perturbed = desc;
    perturbed.p4_1 += 1;  // breaks 5*l3 = p4_1 + 2*p5_1 + 4*p5_2
    ValidationReport report = validate(perturbed);
    REQUIRE_FALSE(report.ok());
    CHECK(report.issues.front().code == "triple-line-relation");
  }
}

TEST_CASE("named descriptor fixtures resolve") {
  REQUIRE(descriptor_fixture("octic-smooth").has_value());
  CHECK(descriptor_fixture("octic-smooth")->degrees ==
        std::vector<long long>{8});
  REQUIRE(descriptor_fixture("table-63").has_value());
  CHECK(descriptor_fixture("table-63")->l3 == 4);
  REQUIRE(descriptor_fixture("elliptic-E3").has_value());
  CHECK(descriptor_fixture("elliptic-E3")->p5_1 == 1);
  CHECK_FALSE(descriptor_fixture("table-64").has_value());
  CHECK_FALSE(descriptor_fixture("nonsense").has_value());
}
