#include "tropquot/sampling.hpp"

namespace tropquot {

KPoint sample_kpoint(const Fan& f, Lcg64& rng) {
    KPoint x;
    x.orbit_cone = static_cast<int>(rng.next_below(f.cones.size()));
    const std::size_t k = f.cones[x.orbit_cone].orbit_basis.size();
    for (std::size_t j = 0; j < k; ++j) {
        Rat c0(rng.next_int(1, 3) * (rng.next_below(2) ? 1 : -1));
        Rat c1(rng.next_int(-2, 2));
        Rat c2(rng.next_int(-2, 2));
        RationalFunction u{poly_from_coeffs({c0, c1, c2}), poly_const(1)};
        const long e = rng.next_int(-3, 3);
        x.coords.push_back(u * rf_pow(rf_t(), Int(e)));
    }
    return x;
}

KPoint sample_unit(const Fan& f, Lcg64& rng, int depth) {
    static const auto make_factors = [] {
        std::vector<RationalFunction> v;
        v.push_back(rf_const(-1));
        v.push_back(rf_const(2));
        v.push_back(rf_const(3));
        v.push_back(rf_const(Rat(1, 2)));
        const RationalFunction one_plus = rf_const(1) + rf_t();
        const RationalFunction one_minus = rf_const(1) - rf_t();
        v.push_back(one_plus);
        v.push_back(one_minus);
        v.push_back(one_plus / one_minus);
        return v;
    };
    static const std::vector<RationalFunction> factors = make_factors();

    KPoint g;
    g.orbit_cone = f.zero_cone();
    for (int j = 0; j < f.rank; ++j) {
        RationalFunction c = rf_const(1);
        const long n = rng.next_int(1, depth);
        for (long i = 0; i < n; ++i)
            c = c * factors[rng.next_below(factors.size())];
        g.coords.push_back(c);
    }
    return g;
}

SemigroupPolynomial sample_polynomial(const Fan& f, int sigma, Lcg64& rng) {
    const IntMat& gens = f.cones.at(sigma).chart_gens;
    static const Rat coeff_pool[] = {Rat(1), Rat(-1), Rat(2), Rat(-2),
                                     Rat(3), Rat(-3), Rat(1, 2), Rat(-1, 2)};
    for (;;) {
        SemigroupPolynomial p;
        const long terms = rng.next_int(1, 4);
        for (long tconst = 0; tconst < terms; ++tconst) {
            LatticeVec e(f.rank, 0);
            if (!gens.empty()) {
                const long picks = rng.next_int(0, 3);
                for (long i = 0; i < picks; ++i) {
                    const auto& g = gens[rng.next_below(gens.size())];
                    const long mult = rng.next_int(1, 2);
                    for (int c = 0; c < f.rank; ++c) e[c] += mult * g[c];
                }
            }
            const Rat a = coeff_pool[rng.next_below(8)];
            p = p + sp_monomial(e, a);
        }
        if (!p.is_zero()) return p;
    }
}

TropPoint sample_trop_point(const Fan& f, Lcg64& rng) {
    const int tau = static_cast<int>(rng.next_below(f.cones.size()));
    RatVec v(f.rank);
    for (int i = 0; i < f.rank; ++i) {
        v[i] = Rat(rng.next_int(-6, 6), rng.next_int(1, 3));
        v[i].canonicalize();
    }
    return make_point(f, tau, v);
}

}  // namespace tropquot
