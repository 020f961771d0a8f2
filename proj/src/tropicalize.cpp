#include "tropquot/tropicalize.hpp"

#include "tropquot/errors.hpp"

namespace tropquot {

TropPoint trop(const Fan& f, const AnalyticPoint& x) {
    if (std::holds_alternative<MonomialPoint>(x)) return std::get<MonomialPoint>(x).u;

    const KPoint& k = std::get<KPoint>(x);
    const FanCone& tau = f.cones.at(k.orbit_cone);
    if (k.coords.size() != tau.orbit_basis.size())
        throw input_error("trop: coordinate count does not match the orbit basis");

    // The representative w is pinned down by <b_j, w> = val(coord_j) together
    // with w orthogonal to the span of the orbit cone.
    RatMat rows;
    RatVec rhs;
    for (std::size_t j = 0; j < tau.orbit_basis.size(); ++j) {
        const ExtendedRat v = val(k.coords[j]);
        if (v.infinite) throw input_error("trop: a coordinate is zero");
        RatVec row(f.rank);
        for (int i = 0; i < f.rank; ++i) row[i] = Rat(tau.orbit_basis[j][i]);
        rows.push_back(std::move(row));
        rhs.push_back(v.value);
    }
    for (const auto& r : tau.geom.rays) {
        RatVec row(f.rank);
        for (int i = 0; i < f.rank; ++i) row[i] = Rat(r[i]);
        rows.push_back(std::move(row));
        rhs.push_back(Rat(0));
    }
    auto w = solve_rational(rows, rhs);
    if (!w) throw math_error("trop: representative system inconsistent");
    TropPoint p;
    p.stratum = k.orbit_cone;
    p.rep = *w;
    for (auto& c : p.rep) c.canonicalize();
    return p;
}

MonomialPoint retract(const Fan& f, const AnalyticPoint& x) {
    return MonomialPoint{trop(f, x)};
}

MonomialPoint section(const TropPoint& u) { return MonomialPoint{u}; }

ExtendedRat retract_eval_termwise(const Fan& f, const KPoint& x, const SemigroupPolynomial& p) {
    ExtendedRat best = ExtendedRat::inf();
    for (const auto& [s, a] : p.terms) {
        // val(a) = 0 for a in Q \ {0}: the base field is trivially valued
        best = min(best, val(monomial_coordinate(f, x, s)));
    }
    return best;
}

int orbit_cone_of(const AnalyticPoint& x) {
    if (std::holds_alternative<KPoint>(x)) return std::get<KPoint>(x).orbit_cone;
    return std::get<MonomialPoint>(x).u.stratum;
}

SkeletonGraph skeleton_graph(const Fan& f) {
    SkeletonGraph g;
    for (std::size_t i = 0; i < f.cones.size(); ++i)
        g.vertices.push_back({static_cast<int>(i), f.rank - f.cones[i].cone_dim});
    for (std::size_t j = 0; j < f.cones.size(); ++j)
        for (int i : f.cones[j].face_indices)
            if (f.cones[i].cone_dim + 1 == f.cones[j].cone_dim)
                g.edges.emplace_back(i, static_cast<int>(j));
    std::sort(g.edges.begin(), g.edges.end());
    g.marks.push_back({f.zero_cone(), RatVec(f.rank, Rat(0)), "eta"});
    return g;
}

}  // namespace tropquot
