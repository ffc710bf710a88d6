#include "octic/incidence.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace octic {

long long IncidenceReport::count_lines(int q) const {
  long long n = 0;
  for (const auto& l : lines)
    if (l.line.multiplicity() == q) ++n;
  return n;
}

long long IncidenceReport::count_points(int p, int k) const {
  long long n = 0;
  for (const auto& pt : points)
    if (pt.multiplicity == p && pt.triple_lines == k) ++n;
  return n;
}

long long IncidenceReport::count_points(int p) const {
  long long n = 0;
  for (const auto& pt : points)
    if (pt.multiplicity == p) ++n;
  return n;
}

IncidenceReport analyze(const std::vector<RationalPlane>& planes) {
  const int n = static_cast<int>(planes.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (planes[i] == planes[j])
        throw ValidationError("duplicate plane at indices " +
                              std::to_string(i) + " and " + std::to_string(j));

  IncidenceReport report;
  report.plane_count = n;

  // Every pair of distinct planes spans a line; pairs sharing a line merge.
  std::map<std::array<BigInt, 6>, std::set<int>> line_map;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto line = meet_planes(planes[i], planes[j]);
      if (!line) throw Error("coincident planes escaped the duplicate check");
      auto& through = line_map[line->plucker];
      through.insert(i);
      through.insert(j);
    }
  for (auto& [plucker, through] : line_map) {
    IncidenceLine entry;
    entry.line.plucker = plucker;
    entry.line.planes_through.assign(through.begin(), through.end());
    report.lines.push_back(std::move(entry));
  }

  // Points come from plane triples of rank three, deduplicated canonically.
  std::map<std::array<BigInt, 4>, IncidencePoint> point_map;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        auto point = intersect_three(planes[i], planes[j], planes[k]);
        if (!point) continue;  // pencil: the triple contributes a line
        point_map.emplace(point->coords, IncidencePoint{});
      }
  for (auto& [coords, entry] : point_map) {
    entry.point = ProjectivePoint(coords);
    for (int i = 0; i < n; ++i)
      if (plane_contains(planes[i], entry.point))
        entry.plane_indices.push_back(i);
    entry.multiplicity = static_cast<int>(entry.plane_indices.size());
    report.points.push_back(std::move(entry));
  }

  // Incidences between the collected lines and points: a line passes through
  // a point exactly when at least two of its planes do.
  for (std::size_t pi = 0; pi < report.points.size(); ++pi) {
    auto& pt = report.points[pi];
    for (std::size_t li = 0; li < report.lines.size(); ++li) {
      const auto& through = report.lines[li].line.planes_through;
      int shared = 0;
      for (int plane : through)
        if (std::binary_search(pt.plane_indices.begin(),
                               pt.plane_indices.end(), plane))
          ++shared;
      if (shared >= 2) {
        pt.line_indices.push_back(static_cast<int>(li));
        if (static_cast<int>(through.size()) == 3) ++pt.triple_lines;
      }
    }
  }

  // t-count for a q-fold line: points on it of multiplicity at least q+1.
  for (std::size_t li = 0; li < report.lines.size(); ++li) {
    int q = report.lines[li].line.multiplicity();
    int t = 0;
    for (const auto& pt : report.points)
      if (pt.multiplicity >= q + 1 &&
          std::binary_search(pt.line_indices.begin(), pt.line_indices.end(),
                             static_cast<int>(li)))
        ++t;
    report.lines[li].t_count = t;
  }

  for (const auto& l : report.lines)
    if (l.line.multiplicity() >= 4)
      report.violations.push_back(
          {"curve", "line " + vector_to_string(l.line.plucker) + " lies on " +
                        std::to_string(l.line.multiplicity()) + " planes"});
  for (const auto& pt : report.points) {
    if (pt.multiplicity >= 6)
      report.violations.push_back(
          {"point", "point " + pt.point.str() + " lies on " +
                        std::to_string(pt.multiplicity) + " planes"});
    // Forced by plane counting; a failure here is an internal bug.
    if (pt.multiplicity == 4 && pt.triple_lines > 1)
      throw Error("4-fold point on more than one triple line");
    if (pt.multiplicity == 5 && pt.triple_lines > 2)
      throw Error("5-fold point on more than two triple lines");
  }

  return report;
}

ArrangementDescriptor to_descriptor(const IncidenceReport& report) {
  if (!report.violations.empty())
    throw ViolationError("arrangement violates hypotheses: " +
                         report.violations.front().detail);
  ArrangementDescriptor desc;
  desc.degrees.assign(report.plane_count, 1);
  desc.l3 = report.count_lines(3);
  desc.p4_0 = report.count_points(4, 0);
  desc.p4_1 = report.count_points(4, 1);
  desc.p5_0 = report.count_points(5, 0);
  desc.p5_1 = report.count_points(5, 1);
  desc.p5_2 = report.count_points(5, 2);
  return desc;
}

}  // namespace octic
