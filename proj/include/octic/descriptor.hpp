#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace octic {

/// The four classified arrangements containing a triple elliptic curve.
enum class EllipticCase { E1, E2, E3, E4 };

std::string to_string(EllipticCase c);
std::optional<EllipticCase> elliptic_case_from_string(const std::string& s);

/// Combinatorial summary of an octic arrangement: component degrees plus
/// the stratified singular-point counts. Isolated triple points are always
/// derived, never stored.
struct ArrangementDescriptor {
  std::vector<long long> degrees;
  long long p4_0 = 0;  // 4-fold points on no triple curve
  long long p4_1 = 0;  // 4-fold points on one triple curve
  long long p5_0 = 0;  // 5-fold points on no triple curve
  long long p5_1 = 0;  // 5-fold points on one triple curve
  long long p5_2 = 0;  // 5-fold points on two triple curves
  long long l3 = 0;    // triple lines
  std::optional<EllipticCase> elliptic_case;

  bool operator==(const ArrangementDescriptor&) const = default;
};

/// The curve/point strata of an arrangement expressed through Euler numbers,
/// as consumed by euler_from_strata.
struct ExtendedDescriptor {
  long long component_euler_sum = 0;    // sum over branch components
  long long double_curve_euler_sum = 0; // sum over 2-fold curves
  long long triple_curve_euler_sum = 0; // sum over 3-fold curves
  long long isolated_triple_points = 0;
  long long p5_0 = 0;
  long long p5_1 = 0;
  long long p5_2 = 0;
};

enum class EulerPath { ClosedForm, Upstairs, Ledger };

std::string to_string(EulerPath p);

/// An Euler number together with the route that produced it and an optional
/// term-by-term breakdown.
struct EulerResult {
  long long value = 0;
  EulerPath path = EulerPath::ClosedForm;
  std::vector<std::pair<std::string, long long>> trace;
};

struct ValidationIssue {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

}  // namespace octic
