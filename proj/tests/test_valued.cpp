#include "doctest.h"
#include "tropquot/errors.hpp"
#include "tropquot/points.hpp"
#include "tropquot/ratfunc.hpp"
#include "tropquot/rng.hpp"
#include "tropquot/sampling.hpp"
#include "tropquot/tropicalize.hpp"

using namespace tropquot;

namespace {

LatticeVec lv(std::vector<long> v) {
    LatticeVec out;
    for (long x : v) out.emplace_back(x);
    return out;
}

IntMat im(std::vector<std::vector<long>> rows) {
    IntMat out;
    for (auto& r : rows) out.push_back(lv(r));
    return out;
}

RationalFunction rf(const std::string& s) { return parse_rational_function(s); }

Fan make_a1() { return fan_from_max_cones("a1", 1, im({{1}}), {{0}}); }
Fan make_a2() { return fan_from_max_cones("a2", 2, im({{1, 0}, {0, 1}}), {{0, 1}}); }

Fan make_sing() {
    return fan_from_max_cones("sing", 2, im({{2, -1}, {0, 1}}), {{0, 1}});
}

}  // namespace

TEST_CASE("polynomial arithmetic and gcd") {
    const Poly t = poly_t();
    const Poly p = t * t + poly_const(3) * t;          // 3t + t^2
    CHECK(p.degree() == 2);
    CHECK(p.order() == 1);
    CHECK(to_string(p) == "3*t + t^2");
    CHECK((p - p).is_zero());
    const Poly g = poly_gcd(p, t);
    CHECK(to_string(g) == "t");
    // gcd is monic
    const Poly g2 = poly_gcd(poly_const(2) * t, poly_const(4) * t * t);
    CHECK(to_string(g2) == "t");
    CHECK(poly_gcd(Poly{}, Poly{}).is_zero());
}

TEST_CASE("rational function normalization") {
    // (t^2+t) / (t) reduces to t+1 over denominator 1
    const RationalFunction a = rf("(t^2 + t)/t");
    CHECK(a == rf("1 + t"));
    // denominators are monic: 1/(2-t) has leading coefficient -1 -> scale
    const RationalFunction b = rf("1/(2 - t)");
    CHECK(b.den.c.back() == Rat(1));
    CHECK(b * rf("2 - t") == rf("1"));
    // division and equality
    CHECK(rf("t^2") / rf("t") == rf("t"));
    CHECK_THROWS_AS(rf("1") / rf("0"), input_error);
}

TEST_CASE("valuation frozen examples") {
    CHECK(val(rf("t^2 + t^5")) == ExtendedRat::of(2));
    CHECK(val(rf("(3*t + t^2)/(2 - t)")) == ExtendedRat::of(1));
    CHECK(val(rf("5")) == ExtendedRat::of(0));
    CHECK(val(rf("0")) == ExtendedRat::inf());
    CHECK(val(rf("1/t")) == ExtendedRat::of(-1));
    CHECK(val(rf("t^-2")) == ExtendedRat::of(-2));
    // valuation is multiplicative and ultrametric
    const RationalFunction x = rf("(1+t)/(1-t)");
    CHECK(val(x) == ExtendedRat::of(0));
    CHECK(val(x * rf("t^3")) == ExtendedRat::of(3));
}

TEST_CASE("parser round trips and errors") {
    const std::vector<std::string> good = {
        "0", "1", "-7", "1/2", "t", "3t", "3*t + t^2", "(1+t)/(1-t)",
        "t^-2", "2(1+t)", "-(1 - t)^2", "(2 - t)^3/(t^2)"};
    for (const auto& s : good) {
        const RationalFunction v = rf(s);
        // printing and re-parsing is the identity
        CHECK(rf(to_string(v)) == v);
    }
    CHECK(rf("3t") == rf("3*t"));
    CHECK(rf("2(1+t)") == rf("2 + 2*t"));
    CHECK_THROWS_AS(rf("t^2^"), input_error);  // trailing garbage
    CHECK_THROWS_AS(rf(""), input_error);
    CHECK_THROWS_AS(rf("t +"), input_error);
    CHECK_THROWS_AS(rf("(1+t"), input_error);
    CHECK_THROWS_AS(rf("1.5"), input_error);
    CHECK_THROWS_AS(rf("x + 1"), input_error);
}

TEST_CASE("powers") {
    CHECK(rf_pow(rf("1+t"), 3) == rf("1 + 3t + 3t^2 + t^3"));
    CHECK(rf_pow(rf("t"), -2) == rf("1/t^2"));
    CHECK(rf_pow(rf("2"), 0) == rf("1"));
    CHECK_THROWS_AS(rf_pow(rf("0"), -1), input_error);
}

TEST_CASE("semigroup polynomials") {
    const SemigroupPolynomial f = sp_monomial(lv({1}), 1) + sp_monomial(lv({0}), 5);
    CHECK(f.terms.size() == 2);
    const SemigroupPolynomial z = f - f;
    CHECK(z.is_zero());
    const SemigroupPolynomial sq = f * f;  // 25 + 10 chi + chi^2
    CHECK(sq.terms.size() == 3);
    CHECK(sq.terms.at(lv({0})) == Rat(25));
    CHECK(sq.terms.at(lv({1})) == Rat(10));
    CHECK(sq.terms.at(lv({2})) == Rat(1));
}

TEST_CASE("pullbacks along projection and action") {
    // a monomial pulls back to (0,s) resp. (s,s)
    const SemigroupPolynomial chi = sp_monomial(lv({1}), 1);
    const TensorPolynomial pi = projection_pullback(chi);
    REQUIRE(pi.terms.size() == 1);
    CHECK(pi.terms.begin()->first.first == lv({0}));
    CHECK(pi.terms.begin()->first.second == lv({1}));
    const TensorPolynomial mu = action_pullback(chi);
    REQUIRE(mu.terms.size() == 1);
    CHECK(mu.terms.begin()->first.first == lv({1}));
    CHECK(mu.terms.begin()->first.second == lv({1}));

    // 2 + chi: the constant goes to exponent pair (0,0) both ways
    const SemigroupPolynomial f = sp_monomial(lv({0}), 2) + chi;
    CHECK(projection_pullback(f).terms.size() == 2);
    CHECK(action_pullback(f).terms.size() == 2);
    CHECK(action_pullback(f).terms.at({lv({0}), lv({0})}) == Rat(2));

    // zero maps to zero
    CHECK(projection_pullback(SemigroupPolynomial{}).terms.empty());
    CHECK(action_pullback(SemigroupPolynomial{}).terms.empty());
}

TEST_CASE("monomial coordinates of K-points") {
    const Fan a2 = make_a2();
    KPoint x;
    x.orbit_cone = a2.zero_cone();
    x.coords = {rf("t^2"), rf("3 + t")};
    // chi^(1,0) = first coordinate, chi^(2,1) = product of powers
    CHECK(monomial_coordinate(a2, x, lv({1, 0})) == rf("t^2"));
    CHECK(monomial_coordinate(a2, x, lv({0, 1})) == rf("3 + t"));
    CHECK(monomial_coordinate(a2, x, lv({2, 1})) == rf("t^4 (3 + t)"));
    CHECK(monomial_coordinate(a2, x, lv({0, 0})) == rf("1"));

    // on the axis orbit, characters touching the vanishing coordinate are 0
    const KPoint axis = kpoint_from_chart(
        a2, a2.index_of_rays({0, 1}), {rf("3 + t"), rf("0")});  // chart gens: y, x
    CHECK(axis.orbit_cone == a2.index_of_rays({0}));
    CHECK(monomial_coordinate(a2, axis, lv({1, 0})).is_zero());
    CHECK(monomial_coordinate(a2, axis, lv({0, 1})) == rf("3 + t"));
}

TEST_CASE("seminorm evaluation at K-points includes cancellation") {
    const Fan a1 = make_a1();
    KPoint x;
    x.orbit_cone = a1.zero_cone();
    x.coords = {rf("1 + t")};
    // chi - 1 evaluates to the field element t: valuation 1, not min(0,0)=0
    const SemigroupPolynomial f = sp_monomial(lv({1}), 1) - sp_monomial(lv({0}), 1);
    CHECK(eval_seminorm(a1, x, f) == ExtendedRat::of(1));
    // the retraction of x evaluates the same polynomial termwise: 0
    const MonomialPoint p = retract(a1, x);
    CHECK(eval_seminorm(a1, p, f) == ExtendedRat::of(0));
}

TEST_CASE("seminorm evaluation at monomial points is termwise") {
    const Fan a1 = make_a1();
    // u = 2 on the dense stratum
    const MonomialPoint j{make_point(a1, 0, RatVec{Rat(2)})};
    // 5 + chi + chi^3 -> min(0, 2, 6) = 0
    const SemigroupPolynomial f =
        sp_monomial(lv({0}), 5) + sp_monomial(lv({1}), 1) + sp_monomial(lv({3}), 1);
    CHECK(eval_seminorm(a1, j, f) == ExtendedRat::of(0));
    // chi alone -> 2
    CHECK(eval_seminorm(a1, j, sp_monomial(lv({1}), 1)) == ExtendedRat::of(2));
    // the Gauss point: every nonzero polynomial evaluates to 0
    const MonomialPoint eta{make_point(a1, 0, RatVec{Rat(0)})};
    CHECK(eval_seminorm(a1, eta, f) == ExtendedRat::of(0));
    // zero polynomial evaluates to infinity everywhere
    CHECK(eval_seminorm(a1, eta, SemigroupPolynomial{}) == ExtendedRat::inf());
    KPoint x;
    x.orbit_cone = 0;
    x.coords = {rf("t")};
    CHECK(eval_seminorm(a1, x, SemigroupPolynomial{}) == ExtendedRat::inf());
}

TEST_CASE("tensor evaluation examples") {
    const Fan a1 = make_a1();
    KPoint x;
    x.orbit_cone = a1.zero_cone();

    // x: a = t + t^3; chi ox chi -> the fiber polynomial is chi, value val(a)=1
    x.coords = {rf("t + t^3")};
    TensorPolynomial F;
    F.terms[{lv({1}), lv({1})}] = Rat(1);
    CHECK(eval_tensor(a1, x, F) == ExtendedRat::of(1));

    // pullback identities on chi - 1 at a = 1 + t
    x.coords = {rf("1 + t")};
    const SemigroupPolynomial f = sp_monomial(lv({1}), 1) - sp_monomial(lv({0}), 1);
    CHECK(eval_tensor(a1, x, projection_pullback(f)) == ExtendedRat::of(1));
    CHECK(eval_tensor(a1, x, action_pullback(f)) == ExtendedRat::of(0));
}

TEST_CASE("torus action and affinoid units") {
    const Fan a1 = make_a1();
    KPoint x;
    x.orbit_cone = a1.zero_cone();
    x.coords = {rf("t")};

    KPoint g;
    g.orbit_cone = a1.zero_cone();
    g.coords = {rf("1 + t")};
    CHECK(is_affinoid_unit(a1, g));
    const KPoint gx = act(a1, g, x);
    CHECK(gx.coords[0] == rf("t(1 + t)"));
    CHECK(trop(a1, gx) == trop(a1, x));

    KPoint h;
    h.orbit_cone = a1.zero_cone();
    h.coords = {rf("t")};
    CHECK_FALSE(is_affinoid_unit(a1, h));
    const KPoint hx = act(a1, h, x);
    CHECK(hx.coords[0] == rf("t^2"));
    CHECK(evaluate(a1, trop(a1, hx), lv({1})) == ExtendedRat::of(2));

    // identity acts trivially
    KPoint e;
    e.orbit_cone = a1.zero_cone();
    e.coords = {rf("1")};
    CHECK(kpoint_equal(act(a1, e, x), x));

    // acting on a boundary point keeps its orbit
    const Fan a2 = make_a2();
    const KPoint axis = kpoint_from_chart(a2, a2.index_of_rays({0, 1}),
                                          {rf("3 + t"), rf("0")});
    KPoint g2;
    g2.orbit_cone = a2.zero_cone();
    g2.coords = {rf("t"), rf("2")};
    const KPoint moved = act(a2, g2, axis);
    CHECK(moved.orbit_cone == axis.orbit_cone);
    // the surviving character (0,1) is scaled by chi^(0,1)(g) = 2
    CHECK(monomial_coordinate(a2, moved, lv({0, 1})) == rf("2(3 + t)"));
}

TEST_CASE("chart point construction checks consistency") {
    const Fan sing = make_sing();
    const int top = sing.index_of_rays({0, 1});
    // chart generators are (1,0), (1,1), (1,2) with relation g0 * g2 = g1^2
    REQUIRE(sing.cones[top].chart_gens == im({{1, 0}, {1, 1}, {1, 2}}));

    // consistent values: (t^2, t^3, t^4) since t^2 * t^4 = (t^3)^2
    const KPoint ok = kpoint_from_chart(sing, top, {rf("t^2"), rf("t^3"), rf("t^4")});
    CHECK(ok.orbit_cone == sing.zero_cone());
    CHECK(monomial_coordinate(sing, ok, lv({1, 1})) == rf("t^3"));

    // inconsistent values violate the relation
    CHECK_THROWS_AS(kpoint_from_chart(sing, top, {rf("t^2"), rf("t^3"), rf("t^5")}),
                    input_error);

    // vanishing pattern must match a face: killing only the middle generator
    // is impossible
    CHECK_THROWS_AS(kpoint_from_chart(sing, top, {rf("t"), rf("0"), rf("t")}),
                    input_error);
    // killing g2 alone matches the face ray(2,-1) whose orthogonal set is {(1,2)}?
    // no: (1,2) pairs to 0 with (2,-1), the others do not, so alive = {(1,2)}
    // means g0 = g1 = 0, g2 != 0
    const KPoint face_pt = kpoint_from_chart(sing, top, {rf("0"), rf("0"), rf("2 - t")});
    CHECK(face_pt.orbit_cone == sing.index_of_rays({0}));

    // the torus-fixed point: all generators vanish
    const KPoint fixed = kpoint_from_chart(sing, top, {rf("0"), rf("0"), rf("0")});
    CHECK(fixed.orbit_cone == top);
    CHECK(fixed.coords.empty());

    // wrong arity
    CHECK_THROWS_AS(kpoint_from_chart(sing, top, {rf("1")}), input_error);
}

TEST_CASE("seminorm axioms on sampled points") {
    const Fan fan = make_sing();
    Lcg64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const KPoint x = sample_kpoint(fan, rng);
        const int sigma = fan.cones_containing(x.orbit_cone).back();
        const SemigroupPolynomial f = sample_polynomial(fan, sigma, rng);
        const SemigroupPolynomial g = sample_polynomial(fan, sigma, rng);

        const ExtendedRat vf = eval_seminorm(fan, x, f);
        const ExtendedRat vg = eval_seminorm(fan, x, g);
        const ExtendedRat vsum = eval_seminorm(fan, x, f + g);
        const ExtendedRat vprod = eval_seminorm(fan, x, f * g);
        // ultrametric inequality
        CHECK_FALSE(vsum < min(vf, vg));
        // multiplicativity
        CHECK(vprod == vf + vg);

        // same axioms at the retraction (a monomial point)
        const MonomialPoint p = retract(fan, x);
        const ExtendedRat wf = eval_seminorm(fan, p, f);
        const ExtendedRat wg = eval_seminorm(fan, p, g);
        CHECK_FALSE(eval_seminorm(fan, p, f + g) < min(wf, wg));
        CHECK(eval_seminorm(fan, p, f * g) == wf + wg);
    }
}
