#include "octic/enumerate.hpp"

#include <algorithm>

#include "octic/formulas.hpp"

namespace octic {

namespace {

void build_partitions(long long remaining, long long min_part,
                      std::vector<long long>& current,
                      std::vector<std::vector<long long>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (long long part = min_part; part <= remaining; ++part) {
    current.push_back(part);
    build_partitions(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

const std::vector<std::vector<long long>>& octic_degree_partitions() {
  static const std::vector<std::vector<long long>> kPartitions = [] {
    std::vector<std::vector<long long>> out;
    std::vector<long long> current;
    build_partitions(8, 1, current, out);
    return out;
  }();
  return kPartitions;
}

void enumerate_descriptors(
    const EnumerationBounds& bounds,
    const std::optional<std::vector<long long>>& degrees,
    const std::function<void(const ArrangementDescriptor&, const EulerResult&)>&
        emit) {
  std::vector<std::vector<long long>> degree_sets;
  if (degrees) {
    if (degrees->empty()) return;
    std::vector<long long> sorted = *degrees;
    std::sort(sorted.begin(), sorted.end());
    degree_sets.push_back(std::move(sorted));
  } else {
    degree_sets = octic_degree_partitions();
  }

  for (const auto& ds : degree_sets) {
    ArrangementDescriptor desc;
    desc.degrees = ds;
    for (long long l3 = 0; l3 <= bounds.l3; ++l3)
      for (long long p4_0 = 0; p4_0 <= bounds.p4_0; ++p4_0)
        for (long long p4_1 = 0; p4_1 <= bounds.p4_1; ++p4_1)
          for (long long p5_0 = 0; p5_0 <= bounds.p5_0; ++p5_0)
            for (long long p5_1 = 0; p5_1 <= bounds.p5_1; ++p5_1)
              for (long long p5_2 = 0; p5_2 <= bounds.p5_2; ++p5_2) {
                desc.l3 = l3;
                desc.p4_0 = p4_0;
                desc.p4_1 = p4_1;
                desc.p5_0 = p5_0;
                desc.p5_1 = p5_1;
                desc.p5_2 = p5_2;
                if (!validate(desc).ok()) continue;
                emit(desc, euler_closed_form(desc));
              }
  }
}

}  // namespace octic
