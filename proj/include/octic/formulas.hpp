#pragma once

#include <span>

#include "octic/descriptor.hpp"

namespace octic {

/// Sum of Euler numbers of the smooth components: each degree-d surface in
/// projective 3-space contributes d^3 - 4d^2 + 6d.
long long component_euler_sum(std::span<const long long> degrees);

/// Sum over unordered component pairs {i,j} of (4 - d_i - d_j) d_i d_j, the
/// Euler number of the complete-intersection curve cut out by the pair.
long long intersection_pair_sum(std::span<const long long> degrees);

/// Sum over unordered triples of distinct components of d_i d_j d_k; zero
/// when there are fewer than three components.
long long triple_product_sum(std::span<const long long> degrees);

/// Checks the descriptor against the octic constraints: degree sum 8,
/// nonnegative counts, the triple-line relation 5*l3 = p4_1 + 2*p5_1 + 4*p5_2
/// (non-elliptic case), a nonnegative implied triple-point count, and exact
/// agreement with the classified case when an elliptic tag is present.
ValidationReport validate(const ArrangementDescriptor& desc);

/// Number of isolated triple points implied by the degree data and the
/// stratified counts. Throws ValidationError when the descriptor is invalid,
/// elliptic, or the implied count is negative.
long long implied_triple_points(const ArrangementDescriptor& desc);

/// Term coefficients of the closed-form Euler formula, exposed so tests can
/// pin them directly.
struct ClosedFormCoefficients {
  long long p4_0 = 4;
  long long p4_1 = 3;
  long long p5_0 = 16;
  long long p5_1 = 18;
  long long p5_2 = 20;
  long long l3 = 1;
};

/// Raw evaluation of the closed-form expression on arbitrary counts; does
/// not validate. Used by euler_closed_form and by coefficient tests.
long long closed_form_value(std::span<const long long> degrees, long long p4_0,
                            long long p4_1, long long p5_0, long long p5_1,
                            long long p5_2, long long l3);

/// Euler number of the resolved double cover by the closed combinatorial
/// formula. Requires a valid non-elliptic descriptor.
EulerResult euler_closed_form(const ArrangementDescriptor& desc);

/// Euler number from the strata data: 8 - e + 2*E2 - p3 + 6*E3 + 12*p5_2 +
/// 9*p5_1 + 6*p5_0 with e, E2, E3 the component/double/triple Euler sums.
EulerResult euler_from_strata(const ExtendedDescriptor& ext);

/// Strata derived from a valid non-elliptic descriptor whose triple curves
/// are all lines: E3 = 2*l3, E2 = pair sum - 3*E3, p3 implied.
ExtendedDescriptor derive_strata(const ArrangementDescriptor& desc);

/// Tabulated Euler number for the four classified triple-elliptic-curve
/// arrangements. Throws when the descriptor does not match its claimed case.
EulerResult classify_elliptic(const ArrangementDescriptor& desc);

}  // namespace octic
