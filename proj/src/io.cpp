#include "octic/io.hpp"

#include <istream>
#include <map>

namespace octic {

namespace {

long long require_count(const Json& j, const char* key) {
  if (!j.contains(key)) return 0;
  if (!j[key].is_number_integer())
    throw ParseError(std::string(key) + " must be an integer");
  return j[key].get<long long>();
}

Json bigint_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

}  // namespace

Json descriptor_to_json(const ArrangementDescriptor& desc) {
  Json j;
  j["format"] = kDescriptorFormat;
  j["degrees"] = desc.degrees;
  j["p4_0"] = desc.p4_0;
  j["p4_1"] = desc.p4_1;
  j["p5_0"] = desc.p5_0;
  j["p5_1"] = desc.p5_1;
  j["p5_2"] = desc.p5_2;
  j["l3"] = desc.l3;
  if (desc.elliptic_case) j["elliptic_case"] = to_string(*desc.elliptic_case);
  return j;
}

ArrangementDescriptor descriptor_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("descriptor document must be an object");
  if (!j.contains("degrees") || !j["degrees"].is_array())
    throw ParseError("descriptor needs a 'degrees' array");
  ArrangementDescriptor desc;
  for (const auto& d : j["degrees"]) {
    if (!d.is_number_integer())
      throw ParseError("degrees must be integers");
    desc.degrees.push_back(d.get<long long>());
  }
  desc.p4_0 = require_count(j, "p4_0");
  desc.p4_1 = require_count(j, "p4_1");
  desc.p5_0 = require_count(j, "p5_0");
  desc.p5_1 = require_count(j, "p5_1");
  desc.p5_2 = require_count(j, "p5_2");
  desc.l3 = require_count(j, "l3");
  if (j.contains("elliptic_case")) {
    if (!j["elliptic_case"].is_string())
      throw ParseError("elliptic_case must be a string");
    auto c = elliptic_case_from_string(j["elliptic_case"].get<std::string>());
    if (!c)
      throw ParseError("unknown elliptic_case '" +
                       j["elliptic_case"].get<std::string>() + "'");
    desc.elliptic_case = c;
  }
  return desc;
}

Json planes_to_json(const std::vector<RationalPlane>& planes) {
  Json j;
  j["format"] = kPlanesFormat;
  Json list = Json::array();
  for (const auto& plane : planes) {
    Json row = Json::array();
    for (const auto& c : plane.coeffs) row.push_back(bigint_to_json(c));
    list.push_back(std::move(row));
  }
  j["planes"] = std::move(list);
  return j;
}

std::vector<RationalPlane> planes_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("planes") || !j["planes"].is_array())
    throw ParseError("plane list document needs a 'planes' array");
  std::vector<RationalPlane> planes;
  for (const auto& row : j["planes"]) {
    if (!row.is_array() || row.size() != 4)
      throw ParseError("each plane needs exactly four coefficients");
    std::array<Rational, 4> entries;
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& cell = row[i];
      if (cell.is_number_integer())
        entries[i] = Rational(big_from(cell.get<long long>()), 1);
      else if (cell.is_string())
        entries[i] = parse_rational(cell.get<std::string>());
      else
        throw ParseError("plane coefficients must be integers or 'p/q' strings");
    }
    planes.push_back(RationalPlane::from_rationals(entries));
  }
  return planes;
}

Json branch_to_json(const BranchModel& model) {
  Json j;
  j["format"] = kBranchFormat;
  j["ambient_euler"] = model.ambient_euler;
  Json surfaces = Json::array();
  for (const auto& s : model.surfaces())
    surfaces.push_back({{"name", s.name}, {"euler", s.euler}});
  j["surfaces"] = std::move(surfaces);
  Json curves = Json::array();
  for (const auto& c : model.curves()) {
    Json names = Json::array();
    for (int s : c.surfaces) names.push_back(model.surfaces()[s].name);
    curves.push_back({{"surfaces", std::move(names)}, {"euler", c.euler}});
  }
  j["curves"] = std::move(curves);
  Json points = Json::array();
  for (const auto& p : model.points()) {
    Json names = Json::array();
    for (int s : p.surfaces) names.push_back(model.surfaces()[s].name);
    points.push_back({{"surfaces", std::move(names)}});
  }
  j["points"] = std::move(points);
  return j;
}

BranchModel branch_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("branch document must be an object");
  BranchModel model;
  if (j.contains("ambient_euler")) {
    if (!j["ambient_euler"].is_number_integer())
      throw ParseError("ambient_euler must be an integer");
    model.ambient_euler = j["ambient_euler"].get<long long>();
  }
  if (!j.contains("surfaces") || !j["surfaces"].is_array())
    throw ParseError("branch document needs a 'surfaces' array");
  std::map<std::string, int> surface_ids;
  for (const auto& s : j["surfaces"]) {
    if (!s.is_object() || !s.contains("name") || !s.contains("euler") ||
        !s["name"].is_string() || !s["euler"].is_number_integer())
      throw ParseError("each surface needs a name and an integer euler");
    std::string name = s["name"].get<std::string>();
    if (surface_ids.count(name))
      throw ParseError("duplicate surface name '" + name + "'");
    surface_ids[name] = model.add_surface(name, s["euler"].get<long long>());
  }
  auto resolve = [&](const Json& names) {
    if (!names.is_array()) throw ParseError("'surfaces' must be an array");
    std::vector<int> ids;
    for (const auto& n : names) {
      if (!n.is_string()) throw ParseError("surface references must be names");
      auto it = surface_ids.find(n.get<std::string>());
      if (it == surface_ids.end())
        throw ParseError("unknown surface '" + n.get<std::string>() + "'");
      ids.push_back(it->second);
    }
    return ids;
  };
  if (j.contains("curves")) {
    for (const auto& c : j["curves"]) {
      if (!c.is_object() || !c.contains("surfaces") || !c.contains("euler") ||
          !c["euler"].is_number_integer())
        throw ParseError("each curve needs surfaces and an integer euler");
      model.add_curve(resolve(c["surfaces"]), c["euler"].get<long long>());
    }
  }
  if (j.contains("points")) {
    for (const auto& p : j["points"]) {
      if (!p.is_object() || !p.contains("surfaces"))
        throw ParseError("each point needs a surfaces list");
      long long count = 1;
      if (p.contains("count")) {
        if (!p["count"].is_number_integer() || p["count"].get<long long>() < 1)
          throw ParseError("point count must be a positive integer");
        count = p["count"].get<long long>();
      }
      auto ids = resolve(p["surfaces"]);
      for (long long i = 0; i < count; ++i) model.add_point(ids);
    }
  }
  try {
    model.link_incidences();
  } catch (const LedgerError& e) {
    throw ParseError(std::string("inconsistent branch data: ") + e.what());
  }
  return model;
}

Json report_to_json(const IncidenceReport& report) {
  Json j;
  j["format"] = kIncidenceFormat;
  j["planes"] = report.plane_count;
  Json lines = Json::array();
  for (const auto& l : report.lines) {
    Json plucker = Json::array();
    for (const auto& c : l.line.plucker) plucker.push_back(bigint_to_json(c));
    lines.push_back({{"plucker", std::move(plucker)},
                     {"planes", l.line.planes_through},
                     {"q", l.line.multiplicity()},
                     {"t", l.t_count}});
  }
  j["lines"] = std::move(lines);
  Json points = Json::array();
  for (const auto& p : report.points) {
    Json coords = Json::array();
    for (const auto& c : p.point.coords) coords.push_back(bigint_to_json(c));
    points.push_back({{"coordinates", std::move(coords)},
                      {"multiplicity", p.multiplicity},
                      {"triple_lines", p.triple_lines},
                      {"planes", p.plane_indices},
                      {"lines", p.line_indices}});
  }
  j["points"] = std::move(points);
  Json violations = Json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"kind", v.kind}, {"detail", v.detail}});
  j["violations"] = std::move(violations);
  return j;
}

Json validation_to_json(const ValidationReport& report) {
  Json issues = Json::array();
  for (const auto& issue : report.issues)
    issues.push_back({{"code", issue.code}, {"message", issue.message}});
  Json j;
  j["ok"] = report.ok();
  j["issues"] = std::move(issues);
  return j;
}

Json euler_to_json(const EulerResult& result) {
  Json terms = Json::array();
  for (const auto& [name, value] : result.trace)
    terms.push_back({{"term", name}, {"value", value}});
  Json j;
  j["value"] = result.value;
  j["path"] = to_string(result.path);
  j["terms"] = std::move(terms);
  return j;
}

Json state_to_json(const LedgerState& state) {
  Json j;
  j["e_ambient"] = state.e_ambient;
  j["e_components"] = state.component_euler_sum;
  j["E2"] = state.double_curve_euler_sum;
  j["E3"] = state.triple_curve_euler_sum;
  j["p3"] = state.triple_points;
  j["p5_0"] = state.p5_0;
  j["p5_1"] = state.p5_1;
  j["p5_2"] = state.p5_2;
  return j;
}

Json trace_to_json(const ResolutionTrace& trace) {
  Json j;
  j["format"] = kTraceFormat;
  Json initial = state_to_json(trace.initial);
  initial["invariant"] = invariant_value(trace.initial);
  j["initial"] = std::move(initial);
  Json steps = Json::array();
  for (const auto& record : trace.steps) {
    Json step;
    step["kind"] = to_string(record.step.kind);
    step["center"] = record.center;
    if (record.step.kind == StepKind::B || record.step.kind == StepKind::D) {
      step["center_euler"] = record.step.center_euler;
      step["t"] = record.step.t;
    }
    step["epsilon"] = record.step.epsilon();
    step["state"] = state_to_json(record.state);
    step["invariant"] = record.invariant;
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  j["euler"] = euler_to_json(trace.euler);
  return j;
}

Json parse_document(std::istream& in, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("format") || !j["format"].is_string())
    throw ParseError(origin + ": document has no 'format' field");
  return j;
}

std::string format_of(const Json& document) {
  return document.value("format", std::string());
}

}  // namespace octic
