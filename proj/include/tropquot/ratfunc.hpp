// The coefficient field for analytic points: rational functions in t over Q,
// carrying the t-adic valuation (order of vanishing at t = 0). All arithmetic
// is exact; the valuation is the additive stand-in for a norm exp(-val).
#pragma once

#include <string>
#include <vector>

#include "tropquot/lattice.hpp"
#include "tropquot/trop_space.hpp"

namespace tropquot {

// Dense polynomial over Q, coefficient of t^i at index i, trailing zeros
// trimmed. The zero polynomial has an empty coefficient vector.
struct Poly {
    std::vector<Rat> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    int order() const;  // lowest nonzero power; -1 for the zero polynomial

    bool operator==(const Poly& o) const { return c == o.c; }
};

Poly poly_from_coeffs(std::vector<Rat> c);
Poly poly_const(const Rat& r);
Poly poly_t();

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic gcd; gcd(0,0) = 0
std::string to_string(const Poly& p);

// num/den in lowest terms with monic denominator; equality is structural.
struct RationalFunction {
    Poly num;
    Poly den = poly_const(1);

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RationalFunction& o) const {
        return num == o.num && den == o.den;
    }
};

RationalFunction rf_normalize(Poly num, Poly den);
RationalFunction rf_const(const Rat& r);
RationalFunction rf_zero();
RationalFunction rf_t();

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
RationalFunction rf_pow(const RationalFunction& a, const Int& e);  // e may be negative

// t-adic valuation: ord(num) - ord(den), +infinity for zero.
ExtendedRat val(const RationalFunction& f);

std::string to_string(const RationalFunction& f);

// Parses expressions in t with + - * / ^ and parentheses, e.g.
// "(3*t + t^2)/(2 - t)", "t^-2", "1/2", "3t". Throws input_error.
RationalFunction parse_rational_function(const std::string& text);

}  // namespace tropquot
