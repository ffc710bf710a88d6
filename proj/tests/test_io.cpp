#include <doctest.h>

#include <random>
#include <sstream>

#include "expected_values.hpp"
#include "octic/branch.hpp"
#include "octic/fixtures.hpp"
#include "octic/formulas.hpp"
#include "octic/generators.hpp"
#include "octic/io.hpp"

using namespace octic;

TEST_CASE("descriptors survive a serialization round trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    ArrangementDescriptor d = testing::random_valid_descriptor(rng);
    CHECK(descriptor_from_json(descriptor_to_json(d)) == d);
  }
  for (const auto& d : elliptic_corpus())
    CHECK(descriptor_from_json(descriptor_to_json(d)) == d);
}

TEST_CASE("plane lists round trip and accept rational entries") {
  auto planes = pencil_chain();
  CHECK(planes_from_json(planes_to_json(planes)) == planes);

  Json doc;
  doc["format"] = kPlanesFormat;
  doc["planes"] = Json::array({Json::array({"1/2", "-1/3", 0, 1})});
  auto parsed = planes_from_json(doc);
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0] == RationalPlane::from_integers(3, -2, 0, 6));
}

TEST_CASE("parse errors carry useful messages") {
  std::istringstream no_format("{\"degrees\": [8]}");
  CHECK_THROWS_AS(parse_document(no_format, "test"), ParseError);

  std::istringstream garbage("not json");
  CHECK_THROWS_AS(parse_document(garbage, "test"), ParseError);

  Json bad_degrees;
  bad_degrees["degrees"] = "eight";
  CHECK_THROWS_AS(descriptor_from_json(bad_degrees), ParseError);

  Json bad_case;
  bad_case["degrees"] = Json::array({8});
  bad_case["elliptic_case"] = "E9";
  CHECK_THROWS_AS(descriptor_from_json(bad_case), ParseError);

  Json bad_plane;
  bad_plane["format"] = kPlanesFormat;
  bad_plane["planes"] = Json::array({Json::array({1, 2, 3})});
  CHECK_THROWS_AS(planes_from_json(bad_plane), ParseError);
}

TEST_CASE("branch documents round trip and drive the ledger") {
  // Two components of degrees 1 and 7 meeting in a degree-7 plane section.
  Json doc;
  doc["format"] = kBranchFormat;
  doc["ambient_euler"] = 4;
  doc["surfaces"] = Json::array({Json{{"name", "plane"}, {"euler", 3}},
                                 Json{{"name", "septic"}, {"euler", 189}}});
  doc["curves"] =
      Json::array({Json{{"surfaces", Json::array({"plane", "septic"})},
                        {"euler", -28}}});
  BranchModel model = branch_from_json(doc);
  ResolutionTrace trace = resolve_run(model);
  CHECK(trace.euler.value == -240);

  BranchModel round = branch_from_json(branch_to_json(model));
  CHECK(resolve_run(round).euler.value == -240);
}

TEST_CASE("branch documents with repeated points use the count field") {
  ArrangementDescriptor desc;
  desc.degrees = {1, 1, 6};
  BranchModel generic = branch_from_descriptor(desc);
  Json doc = branch_to_json(generic);
  // 6 separate identical point entries collapse to one entry with count 6.
  Json compact = doc;
  compact["points"] = Json::array(
      {Json{{"surfaces", Json::array({"S0", "S1", "S2"})}, {"count", 6}}});
  BranchModel model = branch_from_json(compact);
  CHECK(resolve_run(model).euler.value == euler_closed_form(desc).value);
}

TEST_CASE("inconsistent branch documents are parse errors") {
  Json doc;
  doc["format"] = kBranchFormat;
  doc["surfaces"] = Json::array({Json{{"name", "A"}, {"euler", 3}},
                                 Json{{"name", "B"}, {"euler", 3}},
                                 Json{{"name", "C"}, {"euler", 3}}});
  doc["curves"] = Json::array(
      {Json{{"surfaces", Json::array({"A", "B"})}, {"euler", 2}}});
  doc["points"] =
      Json::array({Json{{"surfaces", Json::array({"A", "B", "C"})}}});
  CHECK_THROWS_AS(branch_from_json(doc), ParseError);

  Json dup = doc;
  dup["surfaces"].push_back(Json{{"name", "A"}, {"euler", 3}});
  CHECK_THROWS_AS(branch_from_json(dup), ParseError);
}

TEST_CASE("truncated documents throw parse errors, never crash") {
  std::string full = descriptor_to_json(corpus()[52]).dump();
  for (std::size_t cut = 0; cut < full.size(); cut += 3) {
    std::istringstream in(full.substr(0, cut));
    try {
      Json doc = parse_document(in, "fuzz");
      descriptor_from_json(doc);
    } catch (const ParseError&) {
      // expected for almost every prefix
    }
  }
  CHECK(true);
}

TEST_CASE("serialization is deterministic") {
  auto planes = four_pencils();
  IncidenceReport report = analyze(planes);
  CHECK(report_to_json(report).dump(2) == report_to_json(report).dump(2));
  ResolutionTrace trace = resolve_run(branch_from_incidence(report));
  ResolutionTrace again = resolve_run(branch_from_incidence(analyze(planes)));
  CHECK(trace_to_json(trace).dump(2) == trace_to_json(again).dump(2));
}
