#include "tropquot/trop_space.hpp"

#include <sstream>

#include "tropquot/errors.hpp"

namespace tropquot {

ExtendedRat operator+(const ExtendedRat& a, const ExtendedRat& b) {
    if (a.infinite || b.infinite) return ExtendedRat::inf();
    return ExtendedRat::of(a.value + b.value);
}

ExtendedRat min(const ExtendedRat& a, const ExtendedRat& b) { return a < b ? a : b; }

std::string to_string(const ExtendedRat& v) {
    return v.infinite ? "inf" : rat_to_string(v.value);
}

TropPoint make_point(const Fan& f, int tau, const RatVec& v) {
    if (tau < 0 || tau >= static_cast<int>(f.cones.size()))
        throw input_error("make_point: no such cone in the fan");
    if (static_cast<int>(v.size()) != f.rank)
        throw input_error("make_point: representative has wrong length");
    TropPoint p;
    p.stratum = tau;
    p.rep = project_off_span(f.cones[tau].geom.rays, v);
    for (auto& x : p.rep) x.canonicalize();
    return p;
}

ExtendedRat evaluate(const Fan& f, const TropPoint& u, const LatticeVec& s) {
    if (f.admissible_chart(u.stratum, s) < 0)
        throw input_error("evaluate: " + vec_to_string(s) +
                          " is not in the chart monoid of any cone containing the stratum");
    for (const auto& r : f.cones[u.stratum].geom.rays)
        if (dot(s, r) != 0) return ExtendedRat::inf();
    return ExtendedRat::of(dot(s, u.rep));
}

std::string to_string(const Fan& f, const TropPoint& u) {
    std::ostringstream os;
    os << "stratum{";
    const auto& idx = f.cones[u.stratum].ray_indices;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ",";
        os << idx[i];
    }
    os << "}@(";
    for (std::size_t i = 0; i < u.rep.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(u.rep[i]);
    }
    os << ")";
    return os.str();
}

}  // namespace tropquot
