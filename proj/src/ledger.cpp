#include "octic/ledger.hpp"

#include <sstream>

#include "octic/exact.hpp"

namespace octic {

long long invariant_value(const LedgerState& s) {
  return 2 * s.e_ambient - s.component_euler_sum +
         2 * s.double_curve_euler_sum - s.triple_points +
         6 * s.triple_curve_euler_sum + 12 * s.p5_2 + 9 * s.p5_1 + 6 * s.p5_0;
}

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::A1: return "A1";
    case StepKind::A2: return "A2";
    case StepKind::A3: return "A3";
    case StepKind::B: return "B";
    case StepKind::C: return "C";
    case StepKind::D: return "D";
  }
  return "?";
}

BlowupStep make_point_step(StepKind kind) {
  if (kind == StepKind::B || kind == StepKind::D)
    throw LedgerError("curve step kinds carry center data");
  return BlowupStep{kind, 0, 0};
}

BlowupStep make_curve_step(StepKind kind, long long center_euler, long long t) {
  if (kind != StepKind::B && kind != StepKind::D)
    throw LedgerError("point step kinds carry no curve data");
  if (t < 0) throw LedgerError("negative t-count");
  return BlowupStep{kind, center_euler, t};
}

StepDelta step_delta(const BlowupStep& step) {
  const long long e = step.center_euler;
  const long long t = step.t;
  switch (step.kind) {
    case StepKind::A1: return {2, 8, 10, 0, 10, -1, 0, 0};
    case StepKind::A2: return {2, 8, 10, 0, 7, 0, -1, 0};
    case StepKind::A3: return {2, 8, 10, 0, 4, 0, 0, -1};
    case StepKind::B:
      return {e, 2 * e + t, 3 * e + 2 * t, -e, 3 * t, 0, 0, 0};
    case StepKind::C: return {2, 4, 0, 0, 0, 0, 0, 0};
    case StepKind::D: return {e, t, -e, 0, -t, 0, 0, 0};
  }
  throw LedgerError("unknown step kind");
}

LedgerState apply_delta(const LedgerState& s, const StepDelta& d) {
  LedgerState out = s;
  out.e_ambient += d.e_ambient;
  out.component_euler_sum += d.component_euler_sum;
  out.double_curve_euler_sum += d.double_curve_euler_sum;
  out.triple_curve_euler_sum += d.triple_curve_euler_sum;
  out.triple_points += d.triple_points;
  out.p5_0 += d.p5_0;
  out.p5_1 += d.p5_1;
  out.p5_2 += d.p5_2;
  return out;
}

AdmissibilityResult is_admissible(const BlowupQuery& query) {
  if (query.codimension != 2 && query.codimension != 3)
    throw Error("center codimension must be 2 or 3");
  if (query.multiplicity < 1) throw Error("multiplicity must be >= 1");
  AdmissibilityResult result;
  result.epsilon = static_cast<int>(query.multiplicity % 2);
  result.admissible =
      query.multiplicity == 2 * (query.codimension - 1) + result.epsilon;
  return result;
}

std::string LinearPoly::str() const {
  std::ostringstream os;
  os << constant;
  if (coeff_e) os << (coeff_e > 0 ? " + " : " - ") << std::abs(coeff_e) << "*e";
  if (coeff_t) os << (coeff_t > 0 ? " + " : " - ") << std::abs(coeff_t) << "*t";
  return os.str();
}

namespace {

struct PolyDelta {
  LinearPoly e_ambient, component_euler_sum, double_curve_euler_sum,
      triple_curve_euler_sum, triple_points, p5_0, p5_1, p5_2;
};

PolyDelta symbolic_delta(StepKind kind) {
  auto c = [](long long v) { return LinearPoly{v, 0, 0}; };
  auto e = [](long long k) { return LinearPoly{0, k, 0}; };
  auto t = [](long long k) { return LinearPoly{0, 0, k}; };
  auto et = [](long long ke, long long kt) { return LinearPoly{0, ke, kt}; };
  switch (kind) {
    case StepKind::A1:
      return {c(2), c(8), c(10), c(0), c(10), c(-1), c(0), c(0)};
    case StepKind::A2:
      return {c(2), c(8), c(10), c(0), c(7), c(0), c(-1), c(0)};
    case StepKind::A3:
      return {c(2), c(8), c(10), c(0), c(4), c(0), c(0), c(-1)};
    case StepKind::B:
      return {e(1), et(2, 1), et(3, 2), e(-1), t(3), c(0), c(0), c(0)};
    case StepKind::C:
      return {c(2), c(4), c(0), c(0), c(0), c(0), c(0), c(0)};
    case StepKind::D:
      return {e(1), t(1), e(-1), c(0), t(-1), c(0), c(0), c(0)};
  }
  throw LedgerError("unknown step kind");
}

LinearPoly scale(const LinearPoly& p, long long k) {
  return {p.constant * k, p.coeff_e * k, p.coeff_t * k};
}

LinearPoly add(const LinearPoly& a, const LinearPoly& b) {
  return {a.constant + b.constant, a.coeff_e + b.coeff_e,
          a.coeff_t + b.coeff_t};
}

}  // namespace

std::vector<DeltaRowCertificate> verify_delta_rows() {
  std::vector<DeltaRowCertificate> certificates;
  for (StepKind kind : {StepKind::A1, StepKind::A2, StepKind::A3, StepKind::B,
                        StepKind::C, StepKind::D}) {
    PolyDelta d = symbolic_delta(kind);
    LinearPoly residual{0, 0, 0};
    residual = add(residual, scale(d.e_ambient, 2));
    residual = add(residual, scale(d.component_euler_sum, -1));
    residual = add(residual, scale(d.double_curve_euler_sum, 2));
    residual = add(residual, scale(d.triple_points, -1));
    residual = add(residual, scale(d.triple_curve_euler_sum, 6));
    residual = add(residual, scale(d.p5_2, 12));
    residual = add(residual, scale(d.p5_1, 9));
    residual = add(residual, scale(d.p5_0, 6));

    std::ostringstream expansion;
    expansion << to_string(kind) << ": 2*(" << d.e_ambient.str() << ") - ("
              << d.component_euler_sum.str() << ") + 2*("
              << d.double_curve_euler_sum.str() << ") - ("
              << d.triple_points.str() << ") + 6*("
              << d.triple_curve_euler_sum.str() << ") + 12*(" << d.p5_2.str()
              << ") + 9*(" << d.p5_1.str() << ") + 6*(" << d.p5_0.str()
              << ") = " << residual.str();
    certificates.push_back({kind, residual, expansion.str()});
  }
  return certificates;
}

}  // namespace octic
