#include "octic/fixtures.hpp"

#include <cstdio>

#include "octic/generators.hpp"

namespace octic {

namespace {

ArrangementDescriptor row(std::vector<long long> degrees, long long p4_0 = 0,
                          long long p4_1 = 0, long long p5_0 = 0,
                          long long p5_1 = 0, long long p5_2 = 0,
                          long long l3 = 0) {
  ArrangementDescriptor d;
  d.degrees = std::move(degrees);
  d.p4_0 = p4_0;
  d.p4_1 = p4_1;
  d.p5_0 = p5_0;
  d.p5_1 = p5_1;
  d.p5_2 = p5_2;
  d.l3 = l3;
  return d;
}

ArrangementDescriptor elliptic_row(EllipticCase tag,
                                   std::vector<long long> degrees,
                                   long long p5_1) {
  ArrangementDescriptor d = row(std::move(degrees), 0, 0, 0, p5_1, 0, 0);
  d.elliptic_case = tag;
  return d;
}

}  // namespace

const std::vector<ArrangementDescriptor>& corpus() {
  static const std::vector<ArrangementDescriptor> kCorpus = {
      row({8}),                                     //  1
      row({1, 7}),                                  //  2
      row({2, 6}),                                  //  3
      row({1, 1, 6}),                               //  4
      row({3, 5}),                                  //  5
      row({4, 4}),                                  //  6
      row({1, 2, 5}),                               //  7
      row({1, 1, 1, 5}),                            //  8
      row({1, 1, 1, 5}, 1),                         //  9
      row({2, 2, 4}),                               // 10
      row({2, 3, 3}),                               // 11
      row({1, 1, 2, 4}),                            // 12
      row({1, 1, 2, 4}, 1),                         // 13
      row({1, 1, 2, 4}, 2),                         // 14
      row({1, 1, 3, 3}),                            // 15
      row({1, 1, 3, 3}, 1),                         // 16
      row({1, 1, 1, 1, 4}),                         // 17
      row({1, 1, 1, 1, 4}, 1),                      // 18
      row({1, 2, 2, 3}),                            // 19
      row({1, 2, 2, 3}, 1),                         // 20
      row({1, 1, 1, 1, 4}, 0, 0, 1),                // 21
      row({1, 2, 2, 3}, 3),                         // 22
      row({2, 2, 2, 2}),                            // 23
      row({1, 1, 1, 2, 3}),                         // 24
      row({1, 1, 1, 2, 3}, 1),                      // 25
      row({1, 1, 1, 2, 3}, 2),                      // 26
      row({1, 1, 1, 2, 3}, 3),                      // 27
      row({1, 1, 2, 2, 2}),                         // 28
      row({1, 1, 1, 1, 1, 3}),                      // 29
      row({1, 1, 1, 1, 1, 3}, 1),                   // 30
      row({1, 1, 1, 1, 1, 3}, 2),                   // 31
      row({1, 1, 1, 1, 1, 3}, 3),                   // 32
      row({1, 1, 1, 1, 2, 2}),                      // 33
      row({1, 1, 1, 1, 2, 2}, 1),                   // 34
      row({1, 1, 1, 1, 2, 2}, 2),                   // 35
      row({1, 1, 1, 1, 2, 2}, 3),                   // 36
      row({1, 1, 1, 1, 2, 2}, 0, 0, 1),             // 37
      row({1, 1, 1, 1, 1, 1, 2}),                   // 38
      row({1, 1, 1, 1, 1, 1, 2}, 1),                // 39
      row({1, 1, 1, 1, 1, 1, 2}, 2),                // 40
      row({1, 1, 1, 1, 1, 1, 2}, 3),                // 41
      row({1, 1, 1, 1, 1, 1, 2}, 0, 0, 1),          // 42
      row({1, 1, 1, 1, 1, 1, 1, 1}),                // 43
      row({1, 1, 1, 1, 1, 1, 1, 1}, 1),             // 44
      row({1, 1, 1, 1, 1, 1, 1, 1}, 2),             // 45
      row({1, 1, 1, 1, 1, 1, 1, 1}, 3),             // 46
      row({1, 1, 1, 1, 1, 1, 1, 1}, 4),             // 47
      row({1, 1, 1, 1, 1, 1, 1, 1}, 5),             // 48
      row({1, 1, 1, 1, 1, 1, 1, 1}, 6),             // 49
      row({1, 1, 1, 1, 1, 1, 1, 1}, 7),             // 50
      row({1, 1, 1, 1, 1, 1, 1, 1}, 8),             // 51
      row({1, 1, 1, 1, 1, 1, 1, 1}, 9),             // 52
      row({1, 1, 1, 1, 1, 1, 1, 1}, 0, 1, 0, 2, 0, 1),  // 53
      row({1, 1, 1, 1, 1, 1, 1, 1}, 0, 8, 0, 1, 0, 2),  // 54
      row({1, 1, 1, 1, 1, 1, 1, 1}, 12),                // 55
      row({1, 1, 1, 1, 1, 1, 1, 1}, 0, 4, 0, 1, 1, 2),  // 56
      row({1, 1, 1, 1, 1, 1, 1, 1}, 0, 6, 0, 2, 0, 2),  // 57
      row({1, 1, 1, 1, 1, 1, 1, 1}, 0, 7, 0, 0, 2, 3),  // 58
      row({1, 1, 1, 1, 1, 1, 1, 1}, 0, 9, 0, 1, 1, 3),  // 59
      row({1, 1, 1, 1, 1, 1, 1, 1}, 0, 3, 0, 0, 3, 3),  // 60
      row({1, 1, 1, 1, 1, 1, 1, 1}, 1, 3, 0, 0, 3, 3),  // 61
      row({1, 1, 1, 1, 1, 1, 1, 1}, 2, 3, 0, 0, 3, 3),  // 62
      row({1, 1, 1, 1, 1, 1, 1, 1}, 0, 4, 0, 0, 4, 4),  // 63
  };
  return kCorpus;
}

const std::vector<ArrangementDescriptor>& elliptic_corpus() {
  static const std::vector<ArrangementDescriptor> kElliptic = {
      elliptic_row(EllipticCase::E1, {2, 2, 2, 2}, 0),
      elliptic_row(EllipticCase::E2, {1, 1, 2, 2, 2}, 0),
      elliptic_row(EllipticCase::E3, {1, 1, 2, 2, 2}, 1),
      elliptic_row(EllipticCase::E4, {1, 1, 2, 2, 2}, 2),
  };
  return kElliptic;
}

std::optional<ArrangementDescriptor> descriptor_fixture(const std::string& name) {
  if (name == "octic-smooth") return corpus()[0];
  if (name.rfind("table-", 0) == 0 && name.size() == 8) {
    int index = (name[6] - '0') * 10 + (name[7] - '0');
    if (name[6] >= '0' && name[6] <= '9' && name[7] >= '0' && name[7] <= '9' &&
        index >= 1 && index <= static_cast<int>(corpus().size()))
      return corpus()[index - 1];
  }
  if (name.rfind("elliptic-E", 0) == 0 && name.size() == 11) {
    int index = name[10] - '1';
    if (index >= 0 && index < static_cast<int>(elliptic_corpus().size()))
      return elliptic_corpus()[index];
  }
  return std::nullopt;
}

std::optional<std::vector<RationalPlane>> plane_fixture(const std::string& name) {
  return build_generator(name);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  names.push_back("octic-smooth");
  for (std::size_t i = 1; i <= corpus().size(); ++i) {
    char buffer[16];
    std::snprintf(buffer, sizeof(buffer), "table-%02zu", i);
    names.push_back(buffer);
  }
  for (int i = 1; i <= 4; ++i) names.push_back("elliptic-E" + std::to_string(i));
  for (const auto& entry : generator_registry()) names.push_back(entry.name);
  return names;
}

}  // namespace octic
