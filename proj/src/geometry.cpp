#include "octic/geometry.hpp"

namespace octic {

RationalPlane::RationalPlane(std::array<BigInt, 4> c) : coeffs(std::move(c)) {
  if (!normalize_primitive(coeffs))
    throw ParseError("plane with all coefficients zero");
}

RationalPlane RationalPlane::from_integers(long long a, long long b,
                                           long long c, long long d) {
  std::array<BigInt, 4> coeffs = {big_from(a), big_from(b), big_from(c),
                                  big_from(d)};
  return RationalPlane(std::move(coeffs));
}

RationalPlane RationalPlane::from_rationals(
    const std::array<Rational, 4>& entries) {
  BigInt common(1);
  for (const auto& r : entries) common = big_lcm(common, r.den);
  std::array<BigInt, 4> cleared;
  for (std::size_t i = 0; i < 4; ++i)
    cleared[i] = entries[i].num * (common / entries[i].den);
  return RationalPlane(std::move(cleared));
}

ProjectivePoint::ProjectivePoint(std::array<BigInt, 4> x) : coords(std::move(x)) {
  if (!normalize_primitive(coords))
    throw Error("projective point with all coordinates zero");
}

bool plane_contains(const RationalPlane& plane, const ProjectivePoint& point) {
  BigInt dot = 0;
  for (std::size_t i = 0; i < 4; ++i) dot += plane.coeffs[i] * point.coords[i];
  return dot == 0;
}

BigInt plucker_quadric(const std::array<BigInt, 6>& p) {
  return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

std::optional<ArrangementLine> meet_planes(const RationalPlane& a,
                                           const RationalPlane& b) {
  const auto& u = a.coeffs;
  const auto& v = b.coeffs;
  std::array<BigInt, 6> p = {
      u[0] * v[1] - u[1] * v[0],  // p01
      u[0] * v[2] - u[2] * v[0],  // p02
      u[0] * v[3] - u[3] * v[0],  // p03
      u[1] * v[2] - u[2] * v[1],  // p12
      u[1] * v[3] - u[3] * v[1],  // p13
      u[2] * v[3] - u[3] * v[2],  // p23
  };
  if (!normalize_primitive(p)) return std::nullopt;  // coincident planes
  ArrangementLine line;
  line.plucker = std::move(p);
  return line;
}

std::optional<ProjectivePoint> intersect_three(const RationalPlane& a,
                                               const RationalPlane& b,
                                               const RationalPlane& c) {
  const auto& u = a.coeffs;
  const auto& v = b.coeffs;
  const auto& w = c.coeffs;
  // The explicit return type forces evaluation; gmpxx expression templates
  // must not outlive their operands.
  auto det3 = [&](int c0, int c1, int c2) -> BigInt {
    return u[c0] * (v[c1] * w[c2] - v[c2] * w[c1]) -
           u[c1] * (v[c0] * w[c2] - v[c2] * w[c0]) +
           u[c2] * (v[c0] * w[c1] - v[c1] * w[c0]);
  };
  // Cofactor expansion of the would-be 4x4 determinant: the resulting point
  // annihilates every row by the repeated-row identity.
  std::array<BigInt, 4> x = {det3(1, 2, 3), -det3(0, 2, 3), det3(0, 1, 3),
                             -det3(0, 1, 2)};
  bool all_zero = true;
  for (const auto& e : x)
    if (e != 0) {
      all_zero = false;
      break;
    }
  if (all_zero) return std::nullopt;  // rank two: the triple shares a line
  return ProjectivePoint(std::move(x));
}

}  // namespace octic
