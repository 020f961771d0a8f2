#include "tropquot/points.hpp"

#include <sstream>

#include "tropquot/errors.hpp"

namespace tropquot {

SemigroupPolynomial sp_monomial(const LatticeVec& s, const Rat& a) {
    SemigroupPolynomial f;
    if (a != 0) f.terms[s] = a;
    return f;
}

SemigroupPolynomial operator+(const SemigroupPolynomial& f, const SemigroupPolynomial& g) {
    SemigroupPolynomial r = f;
    for (const auto& [s, a] : g.terms) {
        auto it = r.terms.find(s);
        if (it == r.terms.end()) r.terms[s] = a;
        else {
            it->second += a;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

SemigroupPolynomial operator-(const SemigroupPolynomial& f, const SemigroupPolynomial& g) {
    SemigroupPolynomial neg;
    for (const auto& [s, a] : g.terms) neg.terms[s] = -a;
    return f + neg;
}

SemigroupPolynomial operator*(const SemigroupPolynomial& f, const SemigroupPolynomial& g) {
    SemigroupPolynomial r;
    for (const auto& [s, a] : f.terms)
        for (const auto& [u, b] : g.terms) {
            const LatticeVec e = vec_add(s, u);
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
                const Rat ab = a * b;
                if (ab != 0) r.terms[e] = ab;
            } else {
                it->second += a * b;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

std::string to_string(const SemigroupPolynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, a] : f.terms) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(a) << "*x^" << vec_to_string(s);
    }
    return os.str();
}

TensorPolynomial action_pullback(const SemigroupPolynomial& f) {
    TensorPolynomial r;
    for (const auto& [s, a] : f.terms) r.terms[{s, s}] = a;
    return r;
}

TensorPolynomial projection_pullback(const SemigroupPolynomial& f) {
    TensorPolynomial r;
    for (const auto& [s, a] : f.terms) {
        LatticeVec zero(s.size(), 0);
        r.terms[{zero, s}] = a;
    }
    return r;
}

RationalFunction monomial_coordinate(const Fan& f, const KPoint& x, const LatticeVec& s) {
    const FanCone& tau = f.cones.at(x.orbit_cone);
    if (f.admissible_chart(x.orbit_cone, s) < 0)
        throw input_error("monomial_coordinate: " + vec_to_string(s) +
                          " is not in the chart monoid of any cone containing the orbit cone");
    for (const auto& r : tau.geom.rays)
        if (dot(s, r) != 0) return rf_zero();  // the character vanishes on this orbit
    // decompose s over the orbit basis: columns of B in B c = s
    IntMat rows(f.rank, LatticeVec(tau.orbit_basis.size(), 0));
    RatVec rhs(f.rank);
    for (int i = 0; i < f.rank; ++i) {
        for (std::size_t j = 0; j < tau.orbit_basis.size(); ++j)
            rows[i][j] = tau.orbit_basis[j][i];
        rhs[i] = Rat(s[i]);
    }
    auto coeffs = solve_rational(rows, rhs);
    if (!coeffs) throw math_error("monomial_coordinate: decomposition failed");
    RationalFunction value = rf_const(1);
    for (std::size_t j = 0; j < tau.orbit_basis.size(); ++j) {
        const Rat& cj = (*coeffs)[j];
        if (cj.get_den() != 1)
            throw math_error("monomial_coordinate: non-integral decomposition");
        if (cj == 0) continue;
        value = value * rf_pow(x.coords[j], cj.get_num());
    }
    return value;
}

namespace {

// The chart a polynomial and a point share: some cone containing the orbit
// cone whose dual contains every exponent.
void require_common_chart(const Fan& f, int tau, const std::vector<LatticeVec>& exps) {
    for (int sigma : f.cones_containing(tau)) {
        bool all = true;
        for (const auto& s : exps) {
            for (const auto& r : f.cones[sigma].geom.rays)
                if (dot(s, r) < 0) { all = false; break; }
            if (!all) break;
        }
        if (all) return;
    }
    throw input_error("polynomial is not supported on a chart containing the point");
}

int stratum_of(const AnalyticPoint& x) {
    if (std::holds_alternative<KPoint>(x)) return std::get<KPoint>(x).orbit_cone;
    return std::get<MonomialPoint>(x).u.stratum;
}

}  // namespace

ExtendedRat eval_seminorm(const Fan& f, const AnalyticPoint& x, const SemigroupPolynomial& p) {
    std::vector<LatticeVec> exps;
    for (const auto& [s, a] : p.terms) exps.push_back(s);
    require_common_chart(f, stratum_of(x), exps);

    if (std::holds_alternative<KPoint>(x)) {
        const KPoint& k = std::get<KPoint>(x);
        RationalFunction total = rf_zero();
        for (const auto& [s, a] : p.terms)
            total = total + rf_const(a) * monomial_coordinate(f, k, s);
        return val(total);
    }
    const MonomialPoint& m = std::get<MonomialPoint>(x);
    ExtendedRat best = ExtendedRat::inf();
    for (const auto& [s, a] : p.terms)
        best = min(best, evaluate(f, m.u, s));  // val of the Q-coefficient is 0
    return best;
}

ExtendedRat eval_tensor(const Fan& f, const AnalyticPoint& x, const TensorPolynomial& p) {
    std::map<LatticeVec, SemigroupPolynomial> fibers;
    for (const auto& [ms, a] : p.terms) fibers[ms.first].terms[ms.second] = a;
    ExtendedRat best = ExtendedRat::inf();
    for (const auto& [m, fm] : fibers)
        best = min(best, eval_seminorm(f, x, fm));
    return best;
}

KPoint act(const Fan& f, const KPoint& g, const KPoint& x) {
    if (g.orbit_cone != f.zero_cone())
        throw input_error("act: the acting point must lie in the dense torus");
    for (const auto& c : g.coords)
        if (c.is_zero()) throw input_error("act: torus point has a zero coordinate");
    const FanCone& tau = f.cones.at(x.orbit_cone);
    KPoint out;
    out.orbit_cone = x.orbit_cone;
    out.coords.reserve(x.coords.size());
    for (std::size_t j = 0; j < tau.orbit_basis.size(); ++j)
        out.coords.push_back(monomial_coordinate(f, g, tau.orbit_basis[j]) * x.coords[j]);
    return out;
}

bool is_affinoid_unit(const Fan& f, const KPoint& g) {
    if (g.orbit_cone != f.zero_cone())
        throw input_error("is_affinoid_unit: the point must lie in the dense torus");
    for (const auto& c : g.coords) {
        const ExtendedRat v = val(c);
        if (v.infinite || v.value != 0) return false;
    }
    return true;
}

bool kpoint_equal(const KPoint& a, const KPoint& b) {
    return a.orbit_cone == b.orbit_cone && a.coords == b.coords;
}

KPoint kpoint_from_chart(const Fan& f, int sigma, const std::vector<RationalFunction>& values) {
    const FanCone& sc = f.cones.at(sigma);
    if (values.size() != sc.chart_gens.size())
        throw input_error("kpoint_from_chart: expected one value per chart generator");

    std::vector<int> alive;  // indices of generators with nonzero value
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!values[i].is_zero()) alive.push_back(static_cast<int>(i));

    // the vanishing pattern must be the complement of a face's orthogonal part
    int tau = -1;
    for (int cand : sc.face_indices) {
        const auto& rays = f.cones[cand].geom.rays;
        std::vector<int> expect;
        for (std::size_t i = 0; i < sc.chart_gens.size(); ++i) {
            bool orth = true;
            for (const auto& r : rays)
                if (dot(sc.chart_gens[i], r) != 0) { orth = false; break; }
            if (orth) expect.push_back(static_cast<int>(i));
        }
        if (expect == alive) { tau = cand; break; }
    }
    if (tau < 0)
        throw input_error("kpoint_from_chart: vanishing pattern does not match a face of the chart cone");

    // multiplicative consistency on the relation lattice of the alive generators
    IntMat rel_rows(f.rank, LatticeVec(alive.size()));
    for (std::size_t j = 0; j < alive.size(); ++j)
        for (int i = 0; i < f.rank; ++i) rel_rows[i][j] = sc.chart_gens[alive[j]][i];
    for (const auto& rel : integer_kernel(rel_rows, static_cast<int>(alive.size())).kernel) {
        RationalFunction prod = rf_const(1);
        for (std::size_t j = 0; j < alive.size(); ++j)
            if (rel[j] != 0) prod = prod * rf_pow(values[alive[j]], rel[j]);
        if (!(prod == rf_const(1)))
            throw input_error("kpoint_from_chart: values violate a multiplicative relation "
                              "of the chart monoid");
    }

    // coordinates on the orbit basis via integral decomposition over the
    // alive generators (they generate the full character group of the orbit)
    const FanCone& tc = f.cones[tau];
    IntMat alive_cols;
    for (int i : alive) alive_cols.push_back(sc.chart_gens[i]);
    KPoint out;
    out.orbit_cone = tau;
    for (const auto& b : tc.orbit_basis) {
        auto dec = solve_integer(alive_cols, b);
        if (!dec)
            throw math_error("kpoint_from_chart: orbit basis vector not generated by the chart");
        RationalFunction v = rf_const(1);
        for (std::size_t j = 0; j < alive.size(); ++j)
            if ((*dec)[j] != 0) v = v * rf_pow(values[alive[j]], (*dec)[j]);
        out.coords.push_back(v);
    }
    return out;
}

std::string to_string(const Fan& f, const KPoint& x) {
    std::ostringstream os;
    os << "orbit{";
    const auto& idx = f.cones.at(x.orbit_cone).ray_indices;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) os << ",";
        os << idx[i];
    }
    os << "}:(";
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (i) os << ",";
        os << to_string(x.coords[i]);
    }
    os << ")";
    return os.str();
}

}  // namespace tropquot
