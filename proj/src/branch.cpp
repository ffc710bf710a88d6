#include "octic/branch.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "octic/formulas.hpp"

namespace octic {

namespace {

bool contains(const std::vector<int>& sorted, int value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

bool subset(const std::vector<int>& inner, const std::vector<int>& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

void erase_value(std::vector<int>& v, int value) {
  v.erase(std::remove(v.begin(), v.end(), value), v.end());
}

}  // namespace

int BranchModel::add_surface(const std::string& name, long long euler) {
  surfaces_.push_back({name, euler});
  return static_cast<int>(surfaces_.size()) - 1;
}

int BranchModel::add_curve(std::vector<int> surfaces, long long euler) {
  std::sort(surfaces.begin(), surfaces.end());
  if (surfaces.size() < 2 || surfaces.size() > 3)
    throw LedgerError("curve must lie on two or three surfaces");
  Curve curve;
  curve.surfaces = std::move(surfaces);
  curve.euler = euler;
  curves_.push_back(std::move(curve));
  return static_cast<int>(curves_.size()) - 1;
}

int BranchModel::add_point(std::vector<int> surfaces) {
  std::sort(surfaces.begin(), surfaces.end());
  if (surfaces.size() < 3 || surfaces.size() > 5)
    throw LedgerError("point multiplicity must be 3, 4 or 5");
  Point point;
  point.surfaces = std::move(surfaces);
  points_.push_back(std::move(point));
  return static_cast<int>(points_.size()) - 1;
}

void BranchModel::link_incidences() {
  // Unique curve per surface pair in the initial arrangement.
  std::set<std::pair<int, int>> seen_pairs;
  for (const auto& curve : curves_) {
    for (std::size_t i = 0; i < curve.surfaces.size(); ++i)
      for (std::size_t j = i + 1; j < curve.surfaces.size(); ++j) {
        auto pair = std::make_pair(curve.surfaces[i], curve.surfaces[j]);
        if (!seen_pairs.insert(pair).second)
          throw LedgerError("two initial curves share a surface pair");
      }
  }
  for (int pi = 0; pi < static_cast<int>(points_.size()); ++pi) {
    auto& point = points_[pi];
    point.curves.clear();
    for (int ci = 0; ci < static_cast<int>(curves_.size()); ++ci) {
      if (subset(curves_[ci].surfaces, point.surfaces)) {
        point.curves.push_back(ci);
        curves_[ci].points.push_back(pi);
      }
    }
    int triples = 0;
    for (int ci : point.curves)
      if (curves_[ci].multiplicity() == 3) ++triples;
    int m = point.multiplicity();
    int expected_curves = 0;
    if (m == 3) expected_curves = 3;
    if (m == 4) expected_curves = triples ? 4 : 6;
    if (m == 5) expected_curves = 10 - 3 * triples + triples;
    if (static_cast<int>(point.curves.size()) != expected_curves)
      throw LedgerError("point " + surface_names(point.surfaces) + " lies on " +
                        std::to_string(point.curves.size()) +
                        " curves, expected " + std::to_string(expected_curves));
    if ((m == 3 && triples != 0) || (m == 4 && triples > 1) ||
        (m == 5 && triples > 2))
      throw LedgerError("point multiplicity incompatible with incident triple curves");
  }
}

long long BranchModel::component_euler_total() const {
  long long total = 0;
  for (const auto& s : surfaces_) total += s.euler;
  return total;
}

LedgerState BranchModel::initial_state() const {
  LedgerState state;
  state.e_ambient = ambient_euler;
  state.component_euler_sum = component_euler_total();
  for (const auto& curve : curves_) {
    if (!curve.alive) continue;
    if (curve.multiplicity() == 2) state.double_curve_euler_sum += curve.euler;
    if (curve.multiplicity() == 3) state.triple_curve_euler_sum += curve.euler;
  }
  for (const auto& point : points_) {
    if (!point.alive) continue;
    int m = point.multiplicity();
    if (m == 3) ++state.triple_points;
    if (m == 5) {
      int triples = 0;
      for (int ci : point.curves)
        if (curves_[ci].multiplicity() == 3) ++triples;
      if (triples == 0) ++state.p5_0;
      if (triples == 1) ++state.p5_1;
      if (triples == 2) ++state.p5_2;
    }
  }
  return state;
}

std::string BranchModel::surface_names(const std::vector<int>& ids) const {
  std::string out = "(";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += surfaces_[ids[i]].name;
  }
  out += ")";
  return out;
}

BranchModel branch_from_incidence(const IncidenceReport& report) {
  if (!report.violations.empty())
    throw ViolationError("arrangement violates hypotheses: " +
                         report.violations.front().detail);
  BranchModel model;
  for (int i = 0; i < report.plane_count; ++i)
    model.add_surface("P" + std::to_string(i), 3);
  for (const auto& line : report.lines)
    model.add_curve(line.line.planes_through, 2);
  for (const auto& point : report.points) model.add_point(point.plane_indices);
  model.link_incidences();
  return model;
}

BranchModel branch_from_descriptor(const ArrangementDescriptor& desc) {
  if (desc.elliptic_case)
    throw ValidationError("elliptic cases carry no generic branch model");
  ValidationReport report = validate(desc);
  if (!report.ok())
    throw ValidationError("invalid descriptor: " + report.issues.front().message);
  if (desc.p4_0 || desc.p4_1 || desc.p5_0 || desc.p5_1 || desc.p5_2 || desc.l3)
    throw ValidationError(
        "descriptor has singular strata; resolve it from a plane list or a "
        "branch file that pins the curve data");

  BranchModel model;
  const auto& d = desc.degrees;
  for (std::size_t i = 0; i < d.size(); ++i)
    model.add_surface("S" + std::to_string(i),
                      d[i] * d[i] * d[i] - 4 * d[i] * d[i] + 6 * d[i]);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      model.add_curve({static_cast<int>(i), static_cast<int>(j)},
                      (4 - d[i] - d[j]) * d[i] * d[j]);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j)
      for (std::size_t k = j + 1; k < d.size(); ++k) {
        long long copies = d[i] * d[j] * d[k];
        for (long long c = 0; c < copies; ++c)
          model.add_point({static_cast<int>(i), static_cast<int>(j),
                           static_cast<int>(k)});
      }
  model.link_incidences();
  return model;
}

long long ResolutionTrace::step_count(StepKind kind) const {
  long long n = 0;
  for (const auto& record : steps)
    if (record.step.kind == kind) ++n;
  return n;
}

namespace {

// Mutable run over a copy of the model. The tracked LedgerState is advanced
// by the delta table only; after every step it is compared against counts
// recomputed from the worklist, so the table and the structural simulation
// check each other.
class Runner {
public:
  Runner(BranchModel model, const RunOptions& options)
      : model_(std::move(model)), options_(options) {}

  ResolutionTrace run() {
    state_ = model_.initial_state();
    trace_.initial = state_;
    conserved_ = invariant_value(state_);

    stage_five_fold_points();
    if (state_.p5_0 || state_.p5_1 || state_.p5_2)
      throw LedgerError("5-fold points remain after stage a");
    stage_triple_curves();
    if (state_.triple_curve_euler_sum != 0 || alive_triple_curves() != 0)
      throw LedgerError("triple curves remain after stage b");
    stage_four_fold_points();
    stage_double_curves();
    if (state_.double_curve_euler_sum != 0 || state_.triple_points != 0)
      throw LedgerError("branch locus not smooth after stage d");
    for (const auto& point : model_.points())
      if (point.alive) throw LedgerError("unresolved point after final stage");
    for (const auto& curve : model_.curves())
      if (curve.alive) throw LedgerError("unresolved curve after final stage");

    trace_.final_state = state_;
    trace_.euler.value = invariant_value(state_);
    trace_.euler.path = EulerPath::Ledger;
    trace_.euler.trace = {
        {"ambient_euler_doubled", 2 * state_.e_ambient},
        {"branch_euler", -state_.component_euler_sum},
    };
    if (trace_.euler.value != 2 * state_.e_ambient - state_.component_euler_sum)
      throw LedgerError("terminal invariant is not the smooth-cover value");
    return std::move(trace_);
  }

private:
  int alive_triple_curves() const {
    int n = 0;
    for (const auto& curve : model_.curves())
      if (curve.alive && curve.multiplicity() == 3) ++n;
    return n;
  }

  int incident_triples(const BranchModel::Point& point) const {
    int n = 0;
    for (int ci : point.curves)
      if (model_.curves()[ci].multiplicity() == 3) ++n;
    return n;
  }

  void detach_point_from_curve(int point_id, int curve_id) {
    erase_value(model_.mutable_curves()[curve_id].points, point_id);
  }

  void kill_point(int point_id) {
    auto& point = model_.mutable_points()[point_id];
    for (int ci : point.curves) detach_point_from_curve(point_id, ci);
    point.curves.clear();
    point.alive = false;
  }

  // Center codimension and branch multiplicity of each step kind.
  static BlowupQuery center_query(StepKind kind) {
    switch (kind) {
      case StepKind::A1:
      case StepKind::A2:
      case StepKind::A3: return {3, 5};
      case StepKind::B: return {2, 3};
      case StepKind::C: return {3, 4};
      case StepKind::D: return {2, 2};
    }
    throw LedgerError("unknown step kind");
  }

  void record(const BlowupStep& step, const std::string& center) {
    AdmissibilityResult admissibility = is_admissible(center_query(step.kind));
    if (!admissibility.admissible || admissibility.epsilon != step.epsilon())
      throw LedgerError("inadmissible blow-up center at " + center);
    state_ = apply_delta(state_, step_delta(step));
    long long invariant = invariant_value(state_);
    if (invariant != conserved_)
      throw LedgerError("invariant changed at step " + to_string(step.kind) +
                        " on " + center + ": " + std::to_string(invariant) +
                        " != " + std::to_string(conserved_));
    check_state_matches_worklist(center);
    trace_.steps.push_back({step, center, state_, invariant});
  }

  // The delta table and the structural simulation must agree at all times.
  void check_state_matches_worklist(const std::string& center) const {
    long long e2 = 0, e3 = 0, p3 = 0, p5[3] = {0, 0, 0};
    for (const auto& curve : model_.curves()) {
      if (!curve.alive) continue;
      if (curve.multiplicity() == 2) e2 += curve.euler;
      if (curve.multiplicity() == 3) e3 += curve.euler;
    }
    for (const auto& point : model_.points()) {
      if (!point.alive) continue;
      if (point.multiplicity() == 3) ++p3;
      if (point.multiplicity() == 5) ++p5[incident_triples(point)];
    }
    if (e2 != state_.double_curve_euler_sum ||
        e3 != state_.triple_curve_euler_sum || p3 != state_.triple_points ||
        p5[0] != state_.p5_0 || p5[1] != state_.p5_1 || p5[2] != state_.p5_2)
      throw LedgerError("tracked state diverged from worklist after " + center);
  }

  // Stage a: blow up every 5-fold point. The exceptional plane joins the
  // branch; its five trace lines are new double curves, one new ordinary
  // triple point appears per double curve through the center, and each
  // triple curve through the center picks up one 4-fold point where its
  // strict transform meets the exceptional plane.
  void stage_five_fold_points() {
    for (int pid = 0; pid < static_cast<int>(model_.points().size()); ++pid) {
      if (!model_.points()[pid].alive) continue;
      if (model_.points()[pid].multiplicity() != 5) continue;

      std::vector<int> surfaces = model_.points()[pid].surfaces;
      std::vector<int> triple_ids, double_ids;
      for (int ci : model_.points()[pid].curves) {
        if (model_.curves()[ci].multiplicity() == 3)
          triple_ids.push_back(ci);
        else
          double_ids.push_back(ci);
      }
      int k = static_cast<int>(triple_ids.size());
      if (k > 2) throw LedgerError("5-fold point on more than two triple curves");
      if (static_cast<int>(double_ids.size()) != 10 - 3 * k)
        throw LedgerError("5-fold point with wrong double-curve pencil");

      std::string center = "point" + model_.surface_names(surfaces);
      int exceptional = model_.add_surface("E" + std::to_string(pid), 3);

      std::map<int, int> trace_of;  // original surface id -> trace curve id
      for (int s : surfaces)
        trace_of[s] = model_.add_curve({exceptional, s}, 2);

      kill_point(pid);

      for (int ci : double_ids) {
        const auto& pair = model_.curves()[ci].surfaces;
        int new_point =
            model_.add_point({exceptional, pair[0], pair[1]});
        attach(new_point, {trace_of[pair[0]], trace_of[pair[1]], ci});
      }
      for (int ci : triple_ids) {
        std::vector<int> triple_surfaces = model_.curves()[ci].surfaces;
        std::vector<int> point_surfaces = triple_surfaces;
        point_surfaces.push_back(exceptional);
        int new_point = model_.add_point(point_surfaces);
        std::vector<int> incident = {ci};
        for (int s : triple_surfaces) incident.push_back(trace_of[s]);
        attach(new_point, incident);
      }

      StepKind kind = k == 0 ? StepKind::A1 : (k == 1 ? StepKind::A2 : StepKind::A3);
      record(make_point_step(kind), center);
    }
  }

  // Stage b: blow up every triple curve. The exceptional ruled surface joins
  // the branch: three sections (copies of the curve) become double curves,
  // each 4-fold point on the curve is replaced by a fiber line and three
  // ordinary triple points shared with the strict transforms of the double
  // curves through it.
  void stage_triple_curves() {
    for (int cid = 0; cid < static_cast<int>(model_.curves().size()); ++cid) {
      if (!model_.curves()[cid].alive) continue;
      if (model_.curves()[cid].multiplicity() != 3) continue;

      std::vector<int> curve_surfaces = model_.curves()[cid].surfaces;
      long long center_euler = model_.curves()[cid].euler;
      std::vector<int> fourfold = model_.curves()[cid].points;
      std::string center = "curve" + model_.surface_names(curve_surfaces);

      for (int pid : fourfold)
        if (model_.points()[pid].multiplicity() != 4)
          throw LedgerError("non-4-fold point on a triple curve at stage b");
      long long t = static_cast<long long>(fourfold.size());

      int exceptional = model_.add_surface("EC" + std::to_string(cid), 0);
      std::map<int, int> section_of;
      for (int s : curve_surfaces)
        section_of[s] = model_.add_curve({exceptional, s}, center_euler);

      for (int pid : fourfold) {
        auto point_surfaces = model_.points()[pid].surfaces;
        std::vector<int> extra;
        std::set_difference(point_surfaces.begin(), point_surfaces.end(),
                            curve_surfaces.begin(), curve_surfaces.end(),
                            std::back_inserter(extra));
        if (extra.size() != 1)
          throw LedgerError("4-fold point on triple curve without a fourth surface");
        int fourth = extra[0];

        std::vector<int> through;  // double curves through the point, besides the center
        for (int ci : model_.points()[pid].curves)
          if (ci != cid) through.push_back(ci);
        if (through.size() != 3)
          throw LedgerError("4-fold point on triple curve with wrong curve pencil");

        int fiber = model_.add_curve({exceptional, fourth}, 2);
        kill_point(pid);
        for (int ci : through) {
          const auto& pair = model_.curves()[ci].surfaces;
          int own = pair[0] == fourth ? pair[1] : pair[0];
          if (!contains(curve_surfaces, own) || !contains(pair, fourth))
            throw LedgerError("double curve through 4-fold point has unexpected surfaces");
          int new_point = model_.add_point({exceptional, own, fourth});
          attach(new_point, {section_of[own], fiber, ci});
        }
      }

      model_.mutable_curves()[cid].alive = false;
      model_.mutable_curves()[cid].points.clear();
      record(make_curve_step(StepKind::B, center_euler, t), center);
    }
  }

  // Stage c: blow up the remaining 4-fold points. The exceptional divisor
  // stays out of the branch; the six double curves through the point are
  // separated and nothing else changes.
  void stage_four_fold_points() {
    for (int pid = 0; pid < static_cast<int>(model_.points().size()); ++pid) {
      if (!model_.points()[pid].alive) continue;
      if (model_.points()[pid].multiplicity() != 4) continue;
      if (incident_triples(model_.points()[pid]) != 0)
        throw LedgerError("4-fold point on a triple curve survived stage b");
      if (model_.points()[pid].curves.size() != 6)
        throw LedgerError("4-fold point with wrong double-curve pencil");
      std::string center = "point" + model_.surface_names(model_.points()[pid].surfaces);
      kill_point(pid);
      record(make_point_step(StepKind::C), center);
    }
  }

  // Stage d: blow up every double curve. Each consumes the ordinary triple
  // points still on it; the other two curves through each such point lose it.
  // Stages a and b already ran, so every section, fiber and trace line is in
  // the curve list by now; stage d creates no curves of its own.
  void stage_double_curves() {
    std::vector<int> order;
    for (int cid = 0; cid < static_cast<int>(model_.curves().size()); ++cid)
      if (model_.curves()[cid].alive &&
          model_.curves()[cid].multiplicity() == 2)
        order.push_back(cid);
    if (options_.shuffle_double_curves) {
      std::mt19937_64 rng(*options_.shuffle_double_curves);
      std::shuffle(order.begin(), order.end(), rng);
    }

    for (int cid : order) {
      if (!model_.curves()[cid].alive)
        throw LedgerError("double curve consumed before its stage-d step");

      std::string center = "curve" + model_.surface_names(model_.curves()[cid].surfaces);
      long long center_euler = model_.curves()[cid].euler;
      std::vector<int> on_curve = model_.curves()[cid].points;
      for (int pid : on_curve) {
        if (model_.points()[pid].multiplicity() != 3)
          throw LedgerError("non-triple point on a double curve at stage d");
        if (model_.points()[pid].curves.size() != 3)
          throw LedgerError("triple point without exactly three double curves");
        kill_point(pid);
      }
      long long t = static_cast<long long>(on_curve.size());
      model_.mutable_curves()[cid].alive = false;
      model_.mutable_curves()[cid].points.clear();
      record(make_curve_step(StepKind::D, center_euler, t), center);
    }
  }

  void attach(int point_id, const std::vector<int>& curve_ids) {
    auto& point = model_.mutable_points()[point_id];
    for (int ci : curve_ids) {
      if (!model_.curves()[ci].alive)
        throw LedgerError("attaching a point to a dead curve");
      point.curves.push_back(ci);
      model_.mutable_curves()[ci].points.push_back(point_id);
    }
  }

  BranchModel model_;
  RunOptions options_;
  LedgerState state_;
  long long conserved_ = 0;
  ResolutionTrace trace_;
};

}  // namespace

ResolutionTrace resolve_run(const BranchModel& model, const RunOptions& options) {
  Runner runner(model, options);
  return runner.run();
}

}  // namespace octic
