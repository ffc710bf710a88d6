#pragma once

#include <string>
#include <vector>

namespace octic {

/// The eight tracked integers of a resolution in progress. e_ambient is the
/// Euler number of the current ambient threefold; the rest summarize the
/// branch locus.
struct LedgerState {
  long long e_ambient = 4;
  long long component_euler_sum = 0;
  long long double_curve_euler_sum = 0;
  long long triple_curve_euler_sum = 0;
  long long triple_points = 0;
  long long p5_0 = 0;
  long long p5_1 = 0;
  long long p5_2 = 0;

  bool operator==(const LedgerState&) const = default;
};

/// 2*e(V) - e + 2*E2 - p3 + 6*E3 + 12*p5_2 + 9*p5_1 + 6*p5_0. Conserved by
/// every admissible blow-up; equals the Euler number of the double cover
/// once the branch locus is smooth.
long long invariant_value(const LedgerState& s);

/// The six blow-up step kinds: A1/A2/A3 resolve 5-fold points on 0/1/2
/// triple curves, B a triple curve, C a 4-fold point, D a double curve.
enum class StepKind { A1, A2, A3, B, C, D };

std::string to_string(StepKind k);

/// One typed resolution step. Curve steps (B, D) carry the Euler number of
/// the center and the count t of higher-multiplicity points on it; point
/// steps carry no parameters. epsilon records whether the exceptional
/// divisor joins the branch locus (1 for odd center multiplicity: A*, B).
struct BlowupStep {
  StepKind kind;
  long long center_euler = 0;
  long long t = 0;

  int epsilon() const {
    return (kind == StepKind::C || kind == StepKind::D) ? 0 : 1;
  }
};

BlowupStep make_point_step(StepKind kind);
BlowupStep make_curve_step(StepKind kind, long long center_euler, long long t);

/// Per-step changes of the eight tracked integers.
struct StepDelta {
  long long e_ambient = 0;
  long long component_euler_sum = 0;
  long long double_curve_euler_sum = 0;
  long long triple_curve_euler_sum = 0;
  long long triple_points = 0;
  long long p5_0 = 0;
  long long p5_1 = 0;
  long long p5_2 = 0;
};

StepDelta step_delta(const BlowupStep& step);

LedgerState apply_delta(const LedgerState& s, const StepDelta& d);

/// Query for the admissibility classification: a center of codimension r
/// (2 for curves, 3 for points) and generic multiplicity m in the branch.
struct BlowupQuery {
  int codimension = 2;
  long long multiplicity = 0;
};

struct AdmissibilityResult {
  bool admissible = false;
  int epsilon = 0;  // multiplicity mod 2
};

/// Admissible exactly when m = 2(r-1) + epsilon, i.e. curve centers of
/// multiplicity 2 or 3 and point centers of multiplicity 4 or 5. Throws on
/// codimension outside {2,3} or multiplicity < 1.
AdmissibilityResult is_admissible(const BlowupQuery& query);

/// Linear polynomial in the center Euler number e and the point count t.
struct LinearPoly {
  long long constant = 0;
  long long coeff_e = 0;
  long long coeff_t = 0;

  bool is_zero() const { return !constant && !coeff_e && !coeff_t; }
  std::string str() const;
};

struct DeltaRowCertificate {
  StepKind kind;
  LinearPoly residual;  // invariant change; must be identically zero
  std::string expansion;
};

/// Symbolic check that each delta row conserves the invariant, as a
/// polynomial identity in e and t.
std::vector<DeltaRowCertificate> verify_delta_rows();

}  // namespace octic
