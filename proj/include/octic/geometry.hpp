#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "octic/exact.hpp"

namespace octic {

/// A plane aX + bY + cZ + dW = 0 in projective 3-space with integer
/// coefficients, content-free and sign-normalized so the representation is
/// canonical: two equal planes compare equal componentwise.
struct RationalPlane {
  std::array<BigInt, 4> coeffs;

  RationalPlane() : coeffs{0, 0, 0, 0} {}
  explicit RationalPlane(std::array<BigInt, 4> c);
  static RationalPlane from_integers(long long a, long long b, long long c,
                                     long long d);
  static RationalPlane from_rationals(const std::array<Rational, 4>& entries);

  bool operator==(const RationalPlane& other) const {
    return coeffs == other.coeffs;
  }
  bool operator<(const RationalPlane& other) const {
    return coeffs < other.coeffs;
  }
  std::string str() const { return vector_to_string(coeffs); }
};

/// A point of projective 3-space in canonical homogeneous coordinates.
struct ProjectivePoint {
  std::array<BigInt, 4> coords;

  ProjectivePoint() : coords{0, 0, 0, 0} {}
  explicit ProjectivePoint(std::array<BigInt, 4> x);

  bool operator==(const ProjectivePoint& other) const {
    return coords == other.coords;
  }
  bool operator<(const ProjectivePoint& other) const {
    return coords < other.coords;
  }
  std::string str() const { return vector_to_string(coords); }
};

/// Exact incidence test.
bool plane_contains(const RationalPlane& plane, const ProjectivePoint& point);

/// A line of the arrangement in canonical Pluecker coordinates, together
/// with the indices of every input plane containing it. The multiplicity q
/// is the number of such planes.
struct ArrangementLine {
  std::array<BigInt, 6> plucker;  // (p01, p02, p03, p12, p13, p23)
  std::vector<int> planes_through;

  int multiplicity() const { return static_cast<int>(planes_through.size()); }
};

/// p01*p23 - p02*p13 + p03*p12; vanishes identically on lines.
BigInt plucker_quadric(const std::array<BigInt, 6>& p);

/// Canonical Pluecker line spanned by two distinct planes, or nullopt when
/// the planes coincide. Coincidence is reported, never silently merged.
std::optional<ArrangementLine> meet_planes(const RationalPlane& a,
                                           const RationalPlane& b);

/// Intersection point of three planes when their coefficient matrix has
/// rank 3; nullopt when the three planes share a line.
std::optional<ProjectivePoint> intersect_three(const RationalPlane& a,
                                               const RationalPlane& b,
                                               const RationalPlane& c);

}  // namespace octic
