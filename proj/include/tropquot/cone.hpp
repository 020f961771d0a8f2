// Rational polyhedral cones in Z^n, given by generators. Duals are computed
// by halfspace-at-a-time double description; extreme rays of pointed results
// are recovered by the active-constraint rank test.
#pragma once

#include <vector>

#include "tropquot/lattice.hpp"

namespace tropquot {

struct Cone {
    int ambient_rank = 0;
    IntMat rays;  // primitive, graded-lex sorted, deduplicated

    bool operator==(const Cone& o) const {
        return ambient_rank == o.ambient_rank && rays == o.rays;
    }
    bool operator<(const Cone& o) const { return rays < o.rays; }
};

// Canonicalizes a generator list into a Cone: primitive rays, sorted, deduped,
// zero vectors dropped. For pointed inputs, non-extreme generators are dropped
// too, so equal cones compare equal.
Cone make_cone(int ambient_rank, const IntMat& generators);

// The dual cone {m : <m, v> >= 0 for every generator v}. Pointed duals are
// presented by their primitive extreme rays; non-pointed duals by a full
// generator list (with both signs of each lineality direction present).
Cone dual_cone(const Cone& c);

// Halfspace description: c = {x : <h, x> >= 0 for h in halfspaces(c)}.
// These are just the generators of the dual.
IntMat halfspaces(const Cone& c);

// Membership against a halfspace list (kept separate so callers can reuse a
// cached dual).
bool contains(const IntMat& halfspaces, const LatticeVec& x);
bool contains(const IntMat& halfspaces, const RatVec& x);

int dim(const Cone& c);          // dimension of the linear span
int lineality_dim(const Cone& c);
bool is_pointed(const Cone& c);

// All faces, the cone itself and (for pointed cones) the zero cone included.
// Each face is returned in canonical form. Requires a pointed cone.
std::vector<Cone> faces(const Cone& c);

bool is_face(const Cone& tau, const Cone& sigma);

// Exact intersection of two cones with the same ambient rank.
Cone intersect(const Cone& a, const Cone& b);

// Generators of the lattice points c ∩ Z^n as a monoid. Equals the Hilbert
// basis when c is pointed; otherwise ±(a basis of the lineality lattice)
// together with lifted Hilbert basis elements of the pointed quotient.
IntMat semigroup_generators(const Cone& c);

// Hilbert basis (unique minimal generating set) of a pointed cone, graded-lex
// sorted. Throws math_error for non-pointed cones and for ambient rank > 4.
IntMat hilbert_basis(const Cone& c);

// Monoid of a chart: the lattice points of the dual cone.
struct AffineSemigroup {
    Cone parent_cone;   // the dual cone the semigroup lives in
    IntMat generators;  // Hilbert basis when parent is pointed
};
AffineSemigroup chart_semigroup(const Cone& sigma);

}  // namespace tropquot
