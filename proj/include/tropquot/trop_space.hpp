// The extended tropicalization space of a fan, modeled as a stratified set:
// a point is a stratum cone plus a canonical linear representative, and it
// evaluates monoid elements into Q extended by +infinity.
#pragma once

#include <string>

#include "tropquot/fan.hpp"

namespace tropquot {

// Q together with +infinity, the absorbing element for addition and the top
// element for comparisons.
struct ExtendedRat {
    bool infinite = false;
    Rat value = 0;  // meaningful only when finite

    static ExtendedRat inf() { return {true, 0}; }
    static ExtendedRat of(const Rat& r) { return {false, r}; }

    bool operator==(const ExtendedRat& o) const {
        if (infinite != o.infinite) return false;
        return infinite || value == o.value;
    }
    bool operator<(const ExtendedRat& o) const {
        if (infinite) return false;
        if (o.infinite) return true;
        return value < o.value;
    }
};

ExtendedRat operator+(const ExtendedRat& a, const ExtendedRat& b);
ExtendedRat min(const ExtendedRat& a, const ExtendedRat& b);
std::string to_string(const ExtendedRat& v);

struct TropPoint {
    int stratum = 0;  // fan cone index
    RatVec rep;       // orthogonal to the span of the stratum cone

    bool operator==(const TropPoint& o) const {
        return stratum == o.stratum && rep == o.rep;
    }
};

// Canonicalizes (tau, v): the representative is v with its component along
// span(tau) projected away, so translates along the stratum cone's span name
// the same point.
TropPoint make_point(const Fan& f, int tau, const RatVec& v);

// Pairing with a monoid element: <s, rep> when s annihilates the stratum
// cone's rays, +infinity otherwise. s must lie in the chart monoid of some
// cone containing the stratum.
ExtendedRat evaluate(const Fan& f, const TropPoint& u, const LatticeVec& s);

std::string to_string(const Fan& f, const TropPoint& u);

}  // namespace tropquot
