// Tropicalization, the retraction onto monomial points, its section, and the
// skeleton graph of strata.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropquot/points.hpp"

namespace tropquot {

// Coordinatewise valuation: the extended point with the same stratum as the
// orbit cone of x, pairing each monoid element s with val of its character
// value at x. Monomial points tropicalize to their underlying point.
TropPoint trop(const Fan& f, const AnalyticPoint& x);

// The monomial point over trop(x). Evaluates every chart polynomial by the
// termwise minimum of val(a_s) + trop(x)(s).
MonomialPoint retract(const Fan& f, const AnalyticPoint& x);

// The section of trop on monomial points: u -> the monomial point over u.
MonomialPoint section(const TropPoint& u);

// Independent route to the retraction seminorm that never leaves the field:
// the termwise minimum of val(a_s * chi^s(x)) over the support, computed from
// the K-point coordinates directly (no tropicalization involved). Used to
// cross-check retract.
ExtendedRat retract_eval_termwise(const Fan& f, const KPoint& x, const SemigroupPolynomial& p);

int orbit_cone_of(const AnalyticPoint& x);

struct SkeletonGraph {
    struct Vertex {
        int cone = 0;         // fan cone index
        int stratum_dim = 0;  // rank minus cone dimension
    };
    struct Mark {
        int vertex = 0;
        RatVec position;
        std::string label;
    };
    std::vector<Vertex> vertices;            // one per cone, in fan order
    std::vector<std::pair<int, int>> edges;  // covering pairs (face, cone)
    std::vector<Mark> marks;
};

// Strata with the covering relation of the closure order; the Gauss point
// (the origin of the dense stratum) is marked.
SkeletonGraph skeleton_graph(const Fan& f);

}  // namespace tropquot
