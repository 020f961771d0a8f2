// Rational polyhedral fans with precomputed per-cone data: dual generators,
// chart semigroups, orbit lattice bases, and the face poset.
#pragma once

#include <string>
#include <vector>

#include "tropquot/cone.hpp"

namespace tropquot {

struct FanCone {
    std::vector<int> ray_indices;  // sorted indices into Fan::rays
    Cone geom;
    int cone_dim = 0;
    IntMat dual_gens;              // generators of the dual cone (= halfspaces)
    IntMat chart_gens;             // semigroup generators of the chart monoid
    IntMat orbit_basis;            // lattice basis of the rays' integer kernel
    IntMat orbit_completion;       // completes orbit_basis to a basis of Z^n
    std::vector<int> face_indices; // fan indices of the faces, this cone included
    bool maximal = false;
};

struct Fan {
    std::string name;
    int rank = 0;
    IntMat rays;                  // primitive, in file order
    std::vector<FanCone> cones;   // sorted by (dim, ray indices); zero cone first

    int index_of_rays(const std::vector<int>& sorted_ray_indices) const;
    int index_of(const Cone& c) const;          // -1 if absent
    int zero_cone() const { return 0; }
    bool closure_order(int tau, int sigma) const;  // tau is a face of sigma
    std::vector<int> cones_containing(int tau) const;

    // Is s a member of the chart monoid of some cone containing tau?
    int admissible_chart(int tau, const LatticeVec& s) const;  // -1 if none
};

// Builds a fan from maximal cones, generating all faces. Throws input_error on
// structural problems (bad indices, non-primitive or duplicate rays, listed
// rays that are not extreme). Geometric fan axioms are checked by validate_fan.
Fan fan_from_max_cones(const std::string& name, int rank, const IntMat& rays,
                       const std::vector<std::vector<int>>& max_cones);

// Builds a fan from an explicit cone list without generating faces, so that
// validate_fan can report missing ones. No geometric checks.
Fan fan_from_cone_list(const std::string& name, int rank, const IntMat& rays,
                       const std::vector<std::vector<int>>& cone_ray_indices);

struct FanValidation {
    bool valid = true;
    std::vector<std::string> issues;
};

// Checks the fan axioms: primitive distinct rays, strongly convex cones,
// faces present, and pairwise intersections that are faces of both.
FanValidation validate_fan(const Fan& f);

}  // namespace tropquot
