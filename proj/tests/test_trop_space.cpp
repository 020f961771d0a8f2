#include "doctest.h"
#include "tropquot/errors.hpp"
#include "tropquot/trop_space.hpp"

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

RatVec rv(std::vector<std::string> v) {
    RatVec out;
    for (const auto& s : v) out.push_back(rat_from_string(s));
    return out;
}

Fan make_p2() {
    return fan_from_max_cones("p2", 2, im({{1, 0}, {0, 1}, {-1, -1}}),
                              {{0, 1}, {0, 2}, {1, 2}});
}

}  // namespace

TEST_CASE("extended rationals") {
    const ExtendedRat two = ExtendedRat::of(2);
    const ExtendedRat inf = ExtendedRat::inf();
    CHECK(two + two == ExtendedRat::of(4));
    CHECK((two + inf) == inf);
    CHECK((inf + inf) == inf);
    CHECK(min(two, inf) == two);
    CHECK(min(inf, two) == two);
    CHECK(min(two, ExtendedRat::of(-1)) == ExtendedRat::of(-1));
    CHECK(two < inf);
    CHECK_FALSE(inf < two);
    CHECK_FALSE(inf < inf);
    CHECK(to_string(inf) == "inf");
    CHECK(to_string(ExtendedRat::of(Rat(-3, 2))) == "-3/2");
}

TEST_CASE("representatives are canonicalized orthogonally to the stratum") {
    const Fan p2 = make_p2();
    const int ray0 = p2.index_of_rays({0});  // ray (1,0)
    const TropPoint u = make_point(p2, ray0, rv({"5", "7"}));
    CHECK(u.stratum == ray0);
    CHECK(u.rep == rv({"0", "7"}));

    // translates along the stratum span name the same point
    const TropPoint w = make_point(p2, ray0, rv({"-100", "7"}));
    CHECK(u == w);

    // the dense stratum keeps the representative unchanged
    const TropPoint d = make_point(p2, p2.zero_cone(), rv({"1/2", "-3"}));
    CHECK(d.rep == rv({"1/2", "-3"}));

    // a maximal stratum collapses everything to one point
    const int top = p2.index_of_rays({0, 1});
    CHECK(make_point(p2, top, rv({"9", "4"})) == make_point(p2, top, rv({"0", "0"})));
}

TEST_CASE("evaluation rule") {
    const Fan p2 = make_p2();
    const int ray0 = p2.index_of_rays({0});
    const TropPoint u = make_point(p2, ray0, rv({"0", "7"}));

    // s orthogonal to the stratum rays: finite pairing with the representative
    CHECK(evaluate(p2, u, lv({0, 1})) == ExtendedRat::of(7));
    CHECK(evaluate(p2, u, lv({0, 2})) == ExtendedRat::of(14));
    // s not orthogonal to ray (1,0): +infinity
    CHECK(evaluate(p2, u, lv({1, 0})) == ExtendedRat::inf());
    CHECK(evaluate(p2, u, lv({1, 1})) == ExtendedRat::inf());
    // s must belong to a chart of a cone containing the stratum
    CHECK_THROWS_AS(evaluate(p2, u, lv({-1, 0})), input_error);

    // on the dense stratum every exponent is admissible and finite
    const TropPoint d = make_point(p2, p2.zero_cone(), rv({"1/2", "-3"}));
    CHECK(evaluate(p2, d, lv({2, 1})) == ExtendedRat::of(-2));
    CHECK(evaluate(p2, d, lv({-1, 0})) == ExtendedRat::of(Rat(-1, 2)));
}

TEST_CASE("evaluation is a monoid homomorphism into (Q-bar, +)") {
    const Fan p2 = make_p2();
    const int ray1 = p2.index_of_rays({1});
    const TropPoint u = make_point(p2, ray1, rv({"2/3", "0"}));
    // pick s, s' in the chart of a cone containing the stratum
    const int sigma = p2.cones_containing(ray1).back();
    const IntMat& gens = p2.cones[sigma].chart_gens;
    for (const auto& a : gens) {
        for (const auto& b : gens) {
            const ExtendedRat lhs = evaluate(p2, u, vec_add(a, b));
            const ExtendedRat rhs = evaluate(p2, u, a) + evaluate(p2, u, b);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("chart compatibility across face inclusions") {
    // evaluating with exponents valid in two different charts agrees
    const Fan p2 = make_p2();
    const TropPoint d = make_point(p2, p2.zero_cone(), rv({"4", "-5/2"}));
    // (1,0) lies in the charts of both cone{0,1} and cone{0,2}
    CHECK(evaluate(p2, d, lv({1, 0})) == ExtendedRat::of(4));
    // its value does not depend on which chart we think in, because
    // evaluation only uses the pairing with the representative
    const ExtendedRat via_rep = ExtendedRat::of(dot(lv({1, 0}), d.rep));
    CHECK(evaluate(p2, d, lv({1, 0})) == via_rep);
}

TEST_CASE("rendering") {
    const Fan p2 = make_p2();
    const TropPoint d = make_point(p2, p2.zero_cone(), rv({"2", "0"}));
    CHECK(to_string(p2, d) == "stratum{}@(2,0)");
    const int ray0 = p2.index_of_rays({0});
    const TropPoint u = make_point(p2, ray0, rv({"3", "7"}));
    CHECK(to_string(p2, u) == "stratum{0}@(0,7)");
}
