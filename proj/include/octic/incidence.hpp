#pragma once

#include <string>
#include <vector>

#include "octic/descriptor.hpp"
#include "octic/geometry.hpp"

namespace octic {

struct IncidenceLine {
  ArrangementLine line;
  // Number of points on the line whose multiplicity exceeds the line's own.
  int t_count = 0;
};

struct IncidencePoint {
  ProjectivePoint point;
  int multiplicity = 0;            // planes through the point
  int triple_lines = 0;            // incident lines of multiplicity three
  std::vector<int> plane_indices;  // sorted
  std::vector<int> line_indices;   // sorted, indices into IncidenceReport::lines
};

struct IncidenceViolation {
  std::string kind;  // "curve" or "point"
  std::string detail;
};

/// Complete multiple-line / multiple-point structure of a plane arrangement.
/// Lines and points are canonically sorted, so equal inputs produce
/// identical reports.
struct IncidenceReport {
  int plane_count = 0;
  std::vector<IncidenceLine> lines;
  std::vector<IncidencePoint> points;  // only multiplicity >= 3
  std::vector<IncidenceViolation> violations;

  long long count_lines(int q) const;
  long long count_points(int p, int k) const;
  long long count_points(int p) const;
};

/// Computes the full incidence report of a list of pairwise distinct planes.
/// Throws ValidationError on duplicate planes. Hypothesis violations (a
/// 4-fold-or-higher line, a 6-fold-or-higher point) are collected in the
/// report, not thrown.
IncidenceReport analyze(const std::vector<RationalPlane>& planes);

/// Reads the descriptor off a violation-free report of a degree-one
/// arrangement. Throws ViolationError when violations are present.
ArrangementDescriptor to_descriptor(const IncidenceReport& report);

}  // namespace octic
