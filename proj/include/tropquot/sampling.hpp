// Seeded random generators for points and chart polynomials, shared by the
// verification harness and the property tests.
#pragma once

#include "tropquot/points.hpp"
#include "tropquot/rng.hpp"

namespace tropquot {

// A K-point with a uniformly drawn orbit cone and coordinates of the shape
// t^e * (c0 + c1 t + c2 t^2), e in [-3,3], c0 in {+-1,+-2,+-3}, c1,c2 in [-2,2].
KPoint sample_kpoint(const Fan& f, Lcg64& rng);

// A point of the dense torus with affinoid-unit coordinates: products of up
// to depth factors from {-1, 2, 3, 1/2, 1+t, 1-t, (1+t)/(1-t)}.
KPoint sample_unit(const Fan& f, Lcg64& rng, int depth = 3);

// A nonzero polynomial supported on the chart monoid of the given cone:
// 1..4 terms, exponents are small nonnegative combinations of the chart
// generators, coefficients in {+-1, +-2, +-3, +-1/2}.
SemigroupPolynomial sample_polynomial(const Fan& f, int sigma, Lcg64& rng);

// An extended point with uniform stratum and a small rational representative.
TropPoint sample_trop_point(const Fan& f, Lcg64& rng);

}  // namespace tropquot
