#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octic/descriptor.hpp"
#include "octic/geometry.hpp"

namespace octic {

/// The 63 octic arrangements of the reference table, in table order. Only
/// the combinatorial data is stored here; the Euler numbers are always
/// computed, and the expected values live in the test suite alone.
const std::vector<ArrangementDescriptor>& corpus();

/// The four classified triple-elliptic-curve descriptors.
const std::vector<ArrangementDescriptor>& elliptic_corpus();

/// Named descriptor fixtures: octic-smooth, table-01..table-63,
/// elliptic-E1..elliptic-E4.
std::optional<ArrangementDescriptor> descriptor_fixture(const std::string& name);

/// Named plane-list fixtures, backed by the geometry generators.
std::optional<std::vector<RationalPlane>> plane_fixture(const std::string& name);

/// All fixture names, for error messages and the examples command.
std::vector<std::string> fixture_names();

}  // namespace octic
