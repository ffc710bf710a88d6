#include "octic/formulas.hpp"

#include <algorithm>
#include <sstream>

#include "octic/exact.hpp"

namespace octic {

std::string to_string(EllipticCase c) {
  switch (c) {
    case EllipticCase::E1: return "E1";
    case EllipticCase::E2: return "E2";
    case EllipticCase::E3: return "E3";
    case EllipticCase::E4: return "E4";
  }
  return "?";
}

std::optional<EllipticCase> elliptic_case_from_string(const std::string& s) {
  if (s == "E1") return EllipticCase::E1;
  if (s == "E2") return EllipticCase::E2;
  if (s == "E3") return EllipticCase::E3;
  if (s == "E4") return EllipticCase::E4;
  return std::nullopt;
}

std::string to_string(EulerPath p) {
  switch (p) {
    case EulerPath::ClosedForm: return "closed-form";
    case EulerPath::Upstairs: return "strata";
    case EulerPath::Ledger: return "ledger";
  }
  return "?";
}

long long component_euler_sum(std::span<const long long> degrees) {
  long long sum = 0;
  for (long long d : degrees) sum += d * d * d - 4 * d * d + 6 * d;
  return sum;
}

long long intersection_pair_sum(std::span<const long long> degrees) {
  long long sum = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (std::size_t j = i + 1; j < degrees.size(); ++j)
      sum += (4 - degrees[i] - degrees[j]) * degrees[i] * degrees[j];
  return sum;
}

long long triple_product_sum(std::span<const long long> degrees) {
  long long sum = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i)
    for (std::size_t j = i + 1; j < degrees.size(); ++j)
      for (std::size_t k = j + 1; k < degrees.size(); ++k)
        sum += degrees[i] * degrees[j] * degrees[k];
  return sum;
}

namespace {

long long degree_total(const ArrangementDescriptor& d) {
  long long t = 0;
  for (long long x : d.degrees) t += x;
  return t;
}

std::vector<long long> sorted_degrees(const ArrangementDescriptor& d) {
  std::vector<long long> s = d.degrees;
  std::sort(s.begin(), s.end());
  return s;
}

// Raw triple-point count; may be negative for inconsistent descriptors.
long long raw_triple_points(const ArrangementDescriptor& d) {
  return triple_product_sum(d.degrees) - 4 * (d.p4_0 + d.p4_1) -
         10 * (d.p5_0 + d.p5_1 + d.p5_2) + (d.p4_1 + d.p5_1 + 2 * d.p5_2 - d.l3);
}

struct EllipticPattern {
  EllipticCase tag;
  std::vector<long long> degrees;  // ascending
  long long p5_1;
  long long euler;
};

// The four classified arrangements with a triple elliptic curve; they are
// distinguished at descriptor level by degrees and p5_1, and all live with
// every other count zero.
const std::vector<EllipticPattern>& elliptic_patterns() {
  static const std::vector<EllipticPattern> kPatterns = {
      {EllipticCase::E1, {2, 2, 2, 2}, 0, -16},
      {EllipticCase::E2, {1, 1, 2, 2, 2}, 0, 12},
      {EllipticCase::E3, {1, 1, 2, 2, 2}, 1, 24},
      {EllipticCase::E4, {1, 1, 2, 2, 2}, 2, 36},
  };
  return kPatterns;
}

const EllipticPattern& pattern_for(EllipticCase c) {
  for (const auto& p : elliptic_patterns())
    if (p.tag == c) return p;
  throw Error("unknown elliptic case");
}

void check_elliptic_match(const ArrangementDescriptor& d, ValidationReport& report) {
  const EllipticPattern& pat = pattern_for(*d.elliptic_case);
  auto add = [&](const std::string& code, const std::string& msg) {
    report.issues.push_back({code, msg});
  };
  if (sorted_degrees(d) != pat.degrees)
    add("elliptic-degrees",
        "degrees do not match classified case " + to_string(pat.tag));
  if (d.p5_1 != pat.p5_1)
    add("elliptic-p5-1", "p5_1 must be " + std::to_string(pat.p5_1) +
                             " for case " + to_string(pat.tag));
  if (d.p4_0 != 0 || d.p4_1 != 0 || d.p5_0 != 0 || d.p5_2 != 0 || d.l3 != 0)
    add("elliptic-counts",
        "all counts other than p5_1 must vanish for a classified elliptic case");
}

}  // namespace

ValidationReport validate(const ArrangementDescriptor& desc) {
  ValidationReport report;
  auto add = [&](const std::string& code, const std::string& msg) {
    report.issues.push_back({code, msg});
  };

  if (desc.degrees.empty()) add("degrees-empty", "no components given");
  for (long long d : desc.degrees)
    if (d < 1) {
      add("degree-positive", "component degrees must be >= 1");
      break;
    }
  if (long long total = degree_total(desc); total != 8)
    add("degree-sum",
        "component degrees sum to " + std::to_string(total) + ", expected 8");

  const std::pair<const char*, long long> counts[] = {
      {"p4_0", desc.p4_0}, {"p4_1", desc.p4_1}, {"p5_0", desc.p5_0},
      {"p5_1", desc.p5_1}, {"p5_2", desc.p5_2}, {"l3", desc.l3}};
  for (const auto& [name, value] : counts)
    if (value < 0) add("count-negative", std::string(name) + " is negative");

  if (desc.elliptic_case) {
    check_elliptic_match(desc, report);
    return report;
  }

  long long lhs = 5 * desc.l3;
  long long rhs = desc.p4_1 + 2 * desc.p5_1 + 4 * desc.p5_2;
  if (lhs != rhs)
    add("triple-line-relation",
        "5*l3 = " + std::to_string(lhs) + " but p4_1 + 2*p5_1 + 4*p5_2 = " +
            std::to_string(rhs));

  if (report.ok()) {
    long long p3 = raw_triple_points(desc);
    if (p3 < 0)
      add("triple-points-negative",
          "implied isolated triple point count is " + std::to_string(p3));
  }
  return report;
}

long long implied_triple_points(const ArrangementDescriptor& desc) {
  if (desc.elliptic_case)
    throw ValidationError("triple points are not derived for elliptic cases");
  ValidationReport report = validate(desc);
  if (!report.ok())
    throw ValidationError("invalid descriptor: " + report.issues.front().message);
  return raw_triple_points(desc);
}

long long closed_form_value(std::span<const long long> degrees, long long p4_0,
                            long long p4_1, long long p5_0, long long p5_1,
                            long long p5_2, long long l3) {
  const ClosedFormCoefficients k;
  return 8 - component_euler_sum(degrees) + 2 * intersection_pair_sum(degrees) -
         triple_product_sum(degrees) + k.p4_0 * p4_0 + k.p4_1 * p4_1 +
         k.p5_0 * p5_0 + k.p5_1 * p5_1 + k.p5_2 * p5_2 + k.l3 * l3;
}

EulerResult euler_closed_form(const ArrangementDescriptor& desc) {
  if (desc.elliptic_case)
    throw ValidationError(
        "descriptor has a triple elliptic curve; use classify_elliptic");
  ValidationReport report = validate(desc);
  if (!report.ok())
    throw ValidationError("invalid descriptor: " + report.issues.front().message);

  EulerResult result;
  result.path = EulerPath::ClosedForm;
  result.trace = {
      {"base", 8},
      {"component_euler_sum", -component_euler_sum(desc.degrees)},
      {"pair_curve_term", 2 * intersection_pair_sum(desc.degrees)},
      {"triple_product_term", -triple_product_sum(desc.degrees)},
      {"p4_0_term", 4 * desc.p4_0},
      {"p4_1_term", 3 * desc.p4_1},
      {"p5_0_term", 16 * desc.p5_0},
      {"p5_1_term", 18 * desc.p5_1},
      {"p5_2_term", 20 * desc.p5_2},
      {"l3_term", desc.l3},
  };
  result.value = 0;
  for (const auto& [name, term] : result.trace) result.value += term;
  return result;
}

EulerResult euler_from_strata(const ExtendedDescriptor& ext) {
  if (ext.isolated_triple_points < 0 || ext.p5_0 < 0 || ext.p5_1 < 0 ||
      ext.p5_2 < 0)
    throw ValidationError("strata point counts must be nonnegative");
  EulerResult result;
  result.path = EulerPath::Upstairs;
  result.trace = {
      {"base", 8},
      {"component_euler_sum", -ext.component_euler_sum},
      {"double_curve_term", 2 * ext.double_curve_euler_sum},
      {"triple_point_term", -ext.isolated_triple_points},
      {"triple_curve_term", 6 * ext.triple_curve_euler_sum},
      {"p5_2_term", 12 * ext.p5_2},
      {"p5_1_term", 9 * ext.p5_1},
      {"p5_0_term", 6 * ext.p5_0},
  };
  result.value = 0;
  for (const auto& [name, term] : result.trace) result.value += term;
  return result;
}

ExtendedDescriptor derive_strata(const ArrangementDescriptor& desc) {
  ExtendedDescriptor ext;
  ext.component_euler_sum = component_euler_sum(desc.degrees);
  // Triple curves are lines (Euler number 2); the pair sum counts each triple
  // line through its three component pairs, so E2 = pair sum - 3*E3.
  ext.triple_curve_euler_sum = 2 * desc.l3;
  ext.double_curve_euler_sum =
      intersection_pair_sum(desc.degrees) - 3 * ext.triple_curve_euler_sum;
  ext.isolated_triple_points = implied_triple_points(desc);
  ext.p5_0 = desc.p5_0;
  ext.p5_1 = desc.p5_1;
  ext.p5_2 = desc.p5_2;
  return ext;
}

EulerResult classify_elliptic(const ArrangementDescriptor& desc) {
  if (!desc.elliptic_case)
    throw ValidationError("descriptor carries no elliptic case tag");
  ValidationReport report = validate(desc);
  if (!report.ok())
    throw ValidationError("descriptor does not match classified case " +
                          to_string(*desc.elliptic_case) + ": " +
                          report.issues.front().message);
  EulerResult result;
  result.path = EulerPath::ClosedForm;
  result.value = pattern_for(*desc.elliptic_case).euler;
  result.trace = {{"classified_" + to_string(*desc.elliptic_case), result.value}};
  return result;
}

}  // namespace octic
