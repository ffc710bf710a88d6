#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "octic/branch.hpp"
#include "octic/descriptor.hpp"
#include "octic/enumerate.hpp"
#include "octic/incidence.hpp"

namespace octic {

using Json = nlohmann::ordered_json;

// Document format tags. Each structured document carries its tag in a
// leading "format" field.
inline constexpr const char* kDescriptorFormat = "octic-descriptor/1";
inline constexpr const char* kPlanesFormat = "octic-planes/1";
inline constexpr const char* kBranchFormat = "octic-branch/1";
inline constexpr const char* kIncidenceFormat = "octic-incidence/1";
inline constexpr const char* kTraceFormat = "octic-trace/1";

Json descriptor_to_json(const ArrangementDescriptor& desc);
ArrangementDescriptor descriptor_from_json(const Json& j);

Json planes_to_json(const std::vector<RationalPlane>& planes);
/// Plane entries are arrays of four integers or "p/q" strings; rational
/// coefficients are cleared to a canonical integer representation.
std::vector<RationalPlane> planes_from_json(const Json& j);

Json branch_to_json(const BranchModel& model);
BranchModel branch_from_json(const Json& j);

Json report_to_json(const IncidenceReport& report);
Json validation_to_json(const ValidationReport& report);
Json euler_to_json(const EulerResult& result);
Json state_to_json(const LedgerState& state);
Json trace_to_json(const ResolutionTrace& trace);

/// Parses any of the three input document kinds from text, dispatching on
/// the "format" field. Throws ParseError with a useful message.
Json parse_document(std::istream& in, const std::string& origin);

std::string format_of(const Json& document);

}  // namespace octic
