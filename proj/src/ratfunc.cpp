#include "tropquot/ratfunc.hpp"

#include <cctype>
#include <cstddef>
#include <sstream>

#include "tropquot/errors.hpp"

namespace tropquot {

int Poly::order() const {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) return static_cast<int>(i);
    return -1;
}

Poly poly_from_coeffs(std::vector<Rat> c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    for (auto& x : c) x.canonicalize();
    return Poly{std::move(c)};
}

Poly poly_const(const Rat& r) {
    if (r == 0) return Poly{};
    return poly_from_coeffs({r});
}

Poly poly_t() { return poly_from_coeffs({Rat(0), Rat(1)}); }

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    return poly_from_coeffs(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    return poly_from_coeffs(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return poly_from_coeffs(std::move(c));
}

namespace {

Poly poly_rem(Poly a, const Poly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const Rat f = a.c.back() / b.c.back();
        const int shift = a.degree() - b.degree();
        for (std::size_t i = 0; i < b.c.size(); ++i)
            a.c[i + shift] -= f * b.c[i];
        a = poly_from_coeffs(std::move(a.c));
    }
    return a;
}

Poly make_monic(Poly p) {
    if (p.is_zero()) return p;
    const Rat lead = p.c.back();
    for (auto& x : p.c) x /= lead;
    return p;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        Rat a = p.c[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) os << rat_to_string(a);
        else {
            if (a != 1) os << rat_to_string(a) << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RationalFunction rf_normalize(Poly num, Poly den) {
    if (den.is_zero()) throw input_error("rational function with zero denominator");
    if (num.is_zero()) return RationalFunction{Poly{}, poly_const(1)};
    const Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        // exact division by the gcd via repeated leading-term elimination
        auto divide = [](Poly a, const Poly& d) {
            std::vector<Rat> q(a.degree() - d.degree() + 1, Rat(0));
            while (!a.is_zero() && a.degree() >= d.degree()) {
                const Rat f = a.c.back() / d.c.back();
                const int shift = a.degree() - d.degree();
                q[shift] = f;
                for (std::size_t i = 0; i < d.c.size(); ++i)
                    a.c[i + shift] -= f * d.c[i];
                a = poly_from_coeffs(std::move(a.c));
            }
            return poly_from_coeffs(std::move(q));
        };
        num = divide(std::move(num), g);
        den = divide(std::move(den), g);
    }
    const Rat lead = den.c.back();
    for (auto& x : num.c) x /= lead;
    for (auto& x : den.c) x /= lead;
    return RationalFunction{std::move(num), std::move(den)};
}

RationalFunction rf_const(const Rat& r) { return RationalFunction{poly_const(r), poly_const(1)}; }
RationalFunction rf_zero() { return RationalFunction{Poly{}, poly_const(1)}; }
RationalFunction rf_t() { return RationalFunction{poly_t(), poly_const(1)}; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return rf_normalize(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return rf_normalize(a.num * b.den - b.num * a.den, a.den * b.den);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return rf_normalize(a.num * b.num, a.den * b.den);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw input_error("division by the zero rational function");
    return rf_normalize(a.num * b.den, a.den * b.num);
}

RationalFunction rf_pow(const RationalFunction& a, const Int& e) {
    if (e < 0) {
        if (a.is_zero()) throw input_error("negative power of zero");
        return rf_pow(rf_normalize(a.den, a.num), -e);
    }
    RationalFunction r = rf_const(1);
    RationalFunction base = a;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

ExtendedRat val(const RationalFunction& f) {
    if (f.is_zero()) return ExtendedRat::inf();
    return ExtendedRat::of(Rat(f.num.order() - f.den.order()));
}

std::string to_string(const RationalFunction& f) {
    if (f.den == poly_const(1)) return to_string(f.num);
    return "(" + to_string(f.num) + ")/(" + to_string(f.den) + ")";
}

// ---- parser ----

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw input_error("parse error at position " + std::to_string(pos) + ": " + msg);
    }

    Int integer() {
        skip_ws();
        std::string digits;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) digits.push_back(s[pos++]);
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits.push_back(s[pos++]);
        if (digits.empty() || digits == "-" || digits == "+") fail("expected an integer");
        return Int(digits);
    }

    bool starts_atom() {
        skip_ws();
        if (pos >= s.size()) return false;
        const char c = s[pos];
        return c == 't' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    RationalFunction atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            RationalFunction e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (s[pos] == 't') {
            ++pos;
            return rf_t();
        }
        if (std::isdigit(static_cast<unsigned char>(s[pos])))
            return rf_const(Rat(integer()));
        fail("expected a number, 't', or '('");
    }

    RationalFunction factor() {
        skip_ws();
        bool neg = false;
        while (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            if (s[pos] == '-') neg = !neg;
            ++pos;
            skip_ws();
        }
        RationalFunction a = atom();
        if (eat('^')) {
            skip_ws();
            Int e;
            if (eat('(')) {
                e = integer();
                if (!eat(')')) fail("expected ')'");
            } else {
                e = integer();
            }
            a = rf_pow(a, e);
        }
        // implicit multiplication: "3t", "2(1+t)", "t(1-t)"
        while (starts_atom()) {
            RationalFunction b = atom();
            if (eat('^')) {
                skip_ws();
                Int e;
                if (eat('(')) {
                    e = integer();
                    if (!eat(')')) fail("expected ')'");
                } else {
                    e = integer();
                }
                b = rf_pow(b, e);
            }
            a = a * b;
        }
        if (neg) a = rf_const(-1) * a;
        return a;
    }

    RationalFunction term() {
        RationalFunction a = factor();
        for (;;) {
            if (eat('*')) a = a * factor();
            else if (eat('/')) a = a / factor();
            else return a;
        }
    }

    RationalFunction expr() {
        RationalFunction a = term();
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '+') { ++pos; a = a + term(); }
            else if (pos < s.size() && s[pos] == '-') { ++pos; a = a - term(); }
            else return a;
        }
    }
};

}  // namespace

RationalFunction parse_rational_function(const std::string& text) {
    Parser p(text);
    RationalFunction r = p.expr();
    p.skip_ws();
    if (p.pos != text.size())
        throw input_error("parse error: trailing input at position " + std::to_string(p.pos));
    return r;
}

}  // namespace tropquot
