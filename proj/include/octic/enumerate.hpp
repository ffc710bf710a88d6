#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "octic/descriptor.hpp"

namespace octic {

/// Per-field maxima for descriptor enumeration.
struct EnumerationBounds {
  long long p4_0 = 0;
  long long p4_1 = 0;
  long long p5_0 = 0;
  long long p5_1 = 0;
  long long p5_2 = 0;
  long long l3 = 0;
};

/// All multisets of positive integers summing to 8, ascending, in a fixed
/// deterministic order.
const std::vector<std::vector<long long>>& octic_degree_partitions();

/// Streams every valid non-elliptic descriptor within the bounds, paired
/// with its closed-form Euler number. When degrees is provided only that
/// degree multiset is scanned; an explicitly empty multiset yields nothing.
/// Emitted descriptors are combinatorial candidates; geometric realizability
/// is not decided here.
void enumerate_descriptors(
    const EnumerationBounds& bounds,
    const std::optional<std::vector<long long>>& degrees,
    const std::function<void(const ArrangementDescriptor&, const EulerResult&)>&
        emit);

}  // namespace octic
