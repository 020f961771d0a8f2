// Independent brute-force oracles for the polyhedral layer. Nothing here
// calls dual_cone, halfspaces, faces, or hilbert_basis: membership goes
// through bounded subset solving, and cones/semigroups are compared through
// bounded lattice-point enumeration, so these routes stay meaningful as
// checks on the production algorithms.
#pragma once

#include <optional>
#include <set>
#include <vector>

#include "tropquot/cone.hpp"
#include "tropquot/lattice.hpp"

namespace tropquot::oracles {

// Is v a nonnegative rational combination of gens? Checks every subset of
// size <= ambient rank (enough by the conic decomposition theorem) with an
// exact linear solve and a nonnegativity test. Exponential in the number of
// generators, which is fine at test scale.
inline bool member(const IntMat& gens, const LatticeVec& v, int ambient_rank) {
    if (is_zero(v)) return true;
    const int n = static_cast<int>(gens.size());
    const int max_size = std::min(n, ambient_rank);
    for (int mask = 1; mask < (1 << n); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) > max_size) continue;
        std::vector<int> pick;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) pick.push_back(i);
        // columns = picked generators; solve for coefficients
        RatMat rows(ambient_rank, RatVec(pick.size(), Rat(0)));
        RatVec rhs(ambient_rank, Rat(0));
        for (int r = 0; r < ambient_rank; ++r) {
            for (std::size_t k = 0; k < pick.size(); ++k) rows[r][k] = Rat(gens[pick[k]][r]);
            rhs[r] = Rat(v[r]);
        }
        const auto sol = solve_rational(rows, rhs);
        if (!sol) continue;
        bool ok = true;
        // solve_rational returns one solution; restrict to independent picks
        // so the solution is unique and the sign test is conclusive
        IntMat picked;
        for (int k : pick) picked.push_back(gens[k]);
        if (rank_of(picked) != static_cast<int>(pick.size())) continue;
        for (const auto& c : *sol)
            if (c < 0) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

inline bool member(const Cone& c, const LatticeVec& v) {
    return member(c.rays, v, c.ambient_rank);
}

// All lattice points of the box [-bound, bound]^n that lie in the cone,
// membership tested by the subset oracle above.
inline IntMat box_points(const Cone& c, long bound) {
    IntMat out;
    LatticeVec v(c.ambient_rank, Int(-bound));
    while (true) {
        if (member(c, v)) out.push_back(v);
        int i = 0;
        while (i < c.ambient_rank) {
            v[i] += 1;
            if (v[i] <= bound) break;
            v[i] = -bound;
            ++i;
        }
        if (i == c.ambient_rank) break;
    }
    return out;
}

// All primitive integer functionals in the box that are nonnegative on every
// generator: the bounded model of the dual cone.
inline std::set<LatticeVec> dual_box_points(const Cone& c, long bound) {
    std::set<LatticeVec> out;
    LatticeVec v(c.ambient_rank, Int(-bound));
    while (true) {
        bool nonneg = true;
        for (const auto& r : c.rays)
            if (dot(v, r) < 0) { nonneg = false; break; }
        if (nonneg) out.insert(v);
        int i = 0;
        while (i < c.ambient_rank) {
            v[i] += 1;
            if (v[i] <= bound) break;
            v[i] = -bound;
            ++i;
        }
        if (i == c.ambient_rank) break;
    }
    return out;
}

// Box-equality check of a claimed dual: inside the box, the functional test
// and membership in the claimed cone must pick out the same set. With the
// bound at least the largest generator entry of either side, agreement on
// the box pins equality of the cones.
inline bool dual_matches(const Cone& c, const Cone& claimed_dual, long bound) {
    for (const auto& r : claimed_dual.rays)
        for (const auto& x : r)
            if (abs(x) > bound) return false;
    for (const auto& r : c.rays)
        for (const auto& x : r)
            if (abs(x) > bound) return false;
    const std::set<LatticeVec> enumerated = dual_box_points(c, bound);
    LatticeVec v(c.ambient_rank, Int(-bound));
    while (true) {
        const bool in_claimed = member(claimed_dual, v);
        const bool in_enumerated = enumerated.count(v) > 0;
        if (in_claimed != in_enumerated) return false;
        int i = 0;
        while (i < c.ambient_rank) {
            v[i] += 1;
            if (v[i] <= bound) break;
            v[i] = -bound;
            ++i;
        }
        if (i == c.ambient_rank) break;
    }
    return true;
}

// Irreducible lattice points of a pointed cone inside a box: p is reducible
// when p = q + r for nonzero lattice points q, r of the cone. The result is
// the Hilbert basis as long as the box captures every point that can appear
// in such a decomposition; callers should confirm stability by asking for a
// slightly larger bound and comparing.
inline IntMat box_irreducibles(const Cone& c, long bound) {
    const IntMat pts = box_points(c, bound);
    const std::set<LatticeVec> in_cone(pts.begin(), pts.end());
    auto in_box = [&](const LatticeVec& v) {
        for (const auto& x : v)
            if (abs(x) > bound) return false;
        return true;
    };
    IntMat out;
    for (const auto& p : pts) {
        if (is_zero(p)) continue;
        bool reducible = false;
        for (const auto& q : pts) {
            if (is_zero(q) || q == p) continue;
            const LatticeVec rem = vec_sub(p, q);
            if (is_zero(rem)) continue;
            const bool rem_in_cone = in_box(rem) ? in_cone.count(rem) > 0 : member(c, rem);
            if (rem_in_cone) { reducible = true; break; }
        }
        if (!reducible) out.push_back(p);
    }
    sort_graded_lex(out);
    return out;
}

}  // namespace tropquot::oracles
