#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octic/descriptor.hpp"
#include "octic/incidence.hpp"
#include "octic/ledger.hpp"

namespace octic {

/// Combinatorial model of a branch locus: abstract surfaces, the multiple
/// curves cut out on them, and the multiple points with explicit curve
/// incidences. This is everything the staged resolution needs; no ambient
/// geometry is kept.
class BranchModel {
public:
  struct Surface {
    std::string name;
    long long euler = 0;
  };

  struct Curve {
    std::vector<int> surfaces;  // sorted surface ids; size 2 or 3
    long long euler = 0;
    std::vector<int> points;    // alive point ids on this curve
    bool alive = true;

    int multiplicity() const { return static_cast<int>(surfaces.size()); }
  };

  struct Point {
    std::vector<int> surfaces;  // sorted surface ids; size 3, 4 or 5
    std::vector<int> curves;    // alive curve ids through this point
    bool alive = true;

    int multiplicity() const { return static_cast<int>(surfaces.size()); }
  };

  long long ambient_euler = 4;

  int add_surface(const std::string& name, long long euler);
  int add_curve(std::vector<int> surfaces, long long euler);
  int add_point(std::vector<int> surfaces);

  /// Attaches every point to the curves determined by its surface set (a
  /// curve passes through a point when all of the curve's surfaces do) and
  /// checks structural consistency. Call once after the initial build.
  void link_incidences();

  const std::vector<Surface>& surfaces() const { return surfaces_; }
  const std::vector<Curve>& curves() const { return curves_; }
  const std::vector<Point>& points() const { return points_; }

  long long component_euler_total() const;
  LedgerState initial_state() const;

  std::vector<Surface>& mutable_surfaces() { return surfaces_; }
  std::vector<Curve>& mutable_curves() { return curves_; }
  std::vector<Point>& mutable_points() { return points_; }

  std::string surface_names(const std::vector<int>& ids) const;

private:
  std::vector<Surface> surfaces_;
  std::vector<Curve> curves_;
  std::vector<Point> points_;
};

/// Branch model of a plane arrangement from its incidence report. Planes
/// have Euler number 3 and every arrangement line Euler number 2.
BranchModel branch_from_incidence(const IncidenceReport& report);

/// Generic branch model of a strata-free descriptor: pairwise intersection
/// curves with complete-intersection Euler numbers and d_i d_j d_k ordinary
/// triple points per component triple. Descriptors with any nonzero count
/// need explicit curve data and are rejected here.
BranchModel branch_from_descriptor(const ArrangementDescriptor& desc);

struct StepRecord {
  BlowupStep step;
  std::string center;  // human-readable description of the center
  LedgerState state;   // state after the step
  long long invariant = 0;
};

struct ResolutionTrace {
  LedgerState initial;
  std::vector<StepRecord> steps;
  LedgerState final_state;
  EulerResult euler;

  long long step_count(StepKind kind) const;
};

struct RunOptions {
  // Permutes the order in which stage-d double curves are processed; the
  // terminal Euler number must not depend on it.
  std::optional<std::uint64_t> shuffle_double_curves;
};

/// Executes the four resolution stages (5-fold points, triple curves, 4-fold
/// points, double curves) on a copy of the model, checking after every step
/// that the conserved quantity is unchanged and that the tracked integers
/// match the worklist. Throws LedgerError on any inconsistency.
ResolutionTrace resolve_run(const BranchModel& model,
                            const RunOptions& options = {});

}  // namespace octic
