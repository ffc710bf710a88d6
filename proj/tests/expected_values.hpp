#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "octic/descriptor.hpp"
#include "octic/enumerate.hpp"
#include "octic/formulas.hpp"

namespace octic::testing {

// Euler numbers of the 63 reference arrangements, in corpus order.
inline constexpr std::array<long long, 63> kCorpusEuler = {
    -296, -240, -200, -180, -176, -168, -140, -120, -116, -104, -92,
    -84,  -80,  -76,  -72,  -68,  -64,  -60,  -56,  -52,  -48,  -44,
    -40,  -36,  -32,  -28,  -24,  -20,  -16,  -12,  -8,   -4,   0,
    4,    8,    12,   16,   20,   24,   28,   32,   36,   40,   44,
    48,   52,   56,   60,   64,   68,   72,   76,   80,   84,   88,
    92,   96,   104,  108,  112,  116,  120,  136};

// Euler numbers of the four classified triple-elliptic-curve cases.
inline constexpr std::array<long long, 4> kEllipticEuler = {-16, 12, 24, 36};

struct PlaneFixtureExpectation {
  std::string name;
  long long p4_0, p4_1, p5_0, p5_1, p5_2, l3;
  long long euler;
};

// Certified strata and Euler numbers of every shipped plane-list fixture.
inline const std::vector<PlaneFixtureExpectation>& plane_fixture_expectations() {
  static const std::vector<PlaneFixtureExpectation> kExpectations = [] {
    std::vector<PlaneFixtureExpectation> v;
    for (int k = 0; k <= 6; ++k)
      v.push_back({"cube-plus-" + std::to_string(k), 3 + k, 0, 0, 0, 0, 0,
                   52 + 4 * k});
    v.push_back({"octahedron", 12, 0, 0, 0, 0, 0, 88});
    for (int m = 0; m <= 2; ++m)
      v.push_back({"glued-tetrahedra-" + std::to_string(m), m, 3, 0, 0, 3, 3,
                   112 + 4 * m});
    v.push_back({"pencil-chain", 0, 7, 0, 0, 2, 3, 104});
    v.push_back({"four-pencils", 0, 4, 0, 0, 4, 4, 136});
    v.push_back({"planes-8-generic", 0, 0, 0, 0, 0, 0, 40});
    return v;
  }();
  return kExpectations;
}

// A uniformly-sampled valid non-elliptic descriptor, for property tests.
inline ArrangementDescriptor random_valid_descriptor(std::mt19937_64& rng) {
  const auto& partitions = octic_degree_partitions();
  std::uniform_int_distribution<std::size_t> pick(0, partitions.size() - 1);
  std::uniform_int_distribution<long long> small(0, 4);
  for (;;) {
    ArrangementDescriptor d;
    d.degrees = partitions[pick(rng)];
    d.l3 = small(rng) % 3;
    // Solve 5*l3 = p4_1 + 2*p5_1 + 4*p5_2 by choosing p5_2 and p5_1 first.
    long long budget = 5 * d.l3;
    d.p5_2 = std::uniform_int_distribution<long long>(0, budget / 4)(rng);
    budget -= 4 * d.p5_2;
    d.p5_1 = std::uniform_int_distribution<long long>(0, budget / 2)(rng);
    budget -= 2 * d.p5_1;
    d.p4_1 = budget;
    d.p4_0 = small(rng);
    d.p5_0 = small(rng) % 2;
    if (validate(d).ok()) return d;
  }
}

}  // namespace octic::testing
