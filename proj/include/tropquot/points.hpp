// Computable analytic points of a toric chart over Q(t):
//   - KPoint: a field-valued point, given by its orbit cone and the values of
//     the characters on a lattice basis of the orbit's character group;
//   - MonomialPoint: the seminorm attached to a point of the extended
//     tropicalization, evaluating termwise;
//   - tensor evaluation: the seminorm of the generic torus fiber over a point,
//     used to realize the retraction without leaving computable points.
// Seminorms are handled additively throughout: eval returns a valuation, and
// the multiplicative seminorm is exp(-value) on display only.
#pragma once

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "tropquot/fan.hpp"
#include "tropquot/ratfunc.hpp"
#include "tropquot/trop_space.hpp"

namespace tropquot {

// Laurent-style polynomial on a chart monoid: exponent -> nonzero coefficient
// in Q (the trivially valued base field).
struct SemigroupPolynomial {
    std::map<LatticeVec, Rat> terms;

    bool is_zero() const { return terms.empty(); }
};

SemigroupPolynomial sp_monomial(const LatticeVec& s, const Rat& a = 1);
SemigroupPolynomial operator+(const SemigroupPolynomial& f, const SemigroupPolynomial& g);
SemigroupPolynomial operator-(const SemigroupPolynomial& f, const SemigroupPolynomial& g);
SemigroupPolynomial operator*(const SemigroupPolynomial& f, const SemigroupPolynomial& g);
std::string to_string(const SemigroupPolynomial& f);

// Polynomial on the product of the torus with a chart: (torus exponent in M,
// chart exponent) -> coefficient.
struct TensorPolynomial {
    std::map<std::pair<LatticeVec, LatticeVec>, Rat> terms;
};

// Pullback along the torus action map, character-wise s -> (s, s).
TensorPolynomial action_pullback(const SemigroupPolynomial& f);
// Pullback along the projection, character-wise s -> (0, s).
TensorPolynomial projection_pullback(const SemigroupPolynomial& f);

struct KPoint {
    int orbit_cone = 0;                    // fan cone index
    std::vector<RationalFunction> coords;  // nonzero values on the orbit basis
};

struct MonomialPoint {
    TropPoint u;
};

using AnalyticPoint = std::variant<KPoint, MonomialPoint>;

// Value of the character of s at x: zero when s does not annihilate the orbit
// cone, otherwise the product of basis coordinate powers given by the integral
// decomposition of s over the orbit basis.
RationalFunction monomial_coordinate(const Fan& f, const KPoint& x, const LatticeVec& s);

// Additive seminorm of a chart polynomial at a point. For a KPoint this is
// val of the exact evaluated sum (cancellation included); for a MonomialPoint
// it is the termwise minimum, with no cancellation by construction.
ExtendedRat eval_seminorm(const Fan& f, const AnalyticPoint& x, const SemigroupPolynomial& p);

// Additive seminorm of a torus-times-chart polynomial at the generic torus
// fiber over x: group terms by torus exponent and take the fiberwise minimum.
ExtendedRat eval_tensor(const Fan& f, const AnalyticPoint& x, const TensorPolynomial& p);

// Coordinate-wise torus action. g must be a point of the dense torus (orbit
// cone zero) with all coordinates nonzero.
KPoint act(const Fan& f, const KPoint& g, const KPoint& x);

// Does g lie in the affinoid torus, i.e. do all characters have valuation 0?
bool is_affinoid_unit(const Fan& f, const KPoint& g);

bool kpoint_equal(const KPoint& a, const KPoint& b);

// Builds a KPoint from chart data: values (zeros allowed) on the chart monoid
// generators of sigma. The vanishing pattern must match a face of sigma and
// the nonzero values must satisfy the multiplicative relations of the monoid.
KPoint kpoint_from_chart(const Fan& f, int sigma, const std::vector<RationalFunction>& values);

std::string to_string(const Fan& f, const KPoint& x);

}  // namespace tropquot
