#pragma once
// Elements of the real quadratic field Q(sqrt5), the coefficient field for
// every polynomial in this library.  An element is a + b*sqrt5 with exact
// rational a, b.  The field automorphism sqrt5 -> -sqrt5 ("conj") exchanges
// the golden ratio (1+sqrt5)/2 with its algebraic conjugate (1-sqrt5)/2.

#include "coxinv/rational.hpp"

#include <string>

namespace coxinv {

struct Golden {
    Rat a;  // rational part
    Rat b;  // coefficient of sqrt5

    Golden() : a(0), b(0) {}
    Golden(long v) : a(v), b(0) {}           // NOLINT(google-explicit-constructor)
    Golden(const Rat& v) : a(v), b(0) {}     // NOLINT(google-explicit-constructor)
    Golden(Rat av, Rat bv) : a(std::move(av)), b(std::move(bv)) {}

    static Golden sqrt5() { return Golden(Rat(0), Rat(1)); }
    // (1+sqrt5)/2, a root of t^2 = t + 1.
    static Golden ratio() { return Golden(rat_frac(1, 2), rat_frac(1, 2)); }
    // (1-sqrt5)/2, the conjugate root.
    static Golden ratio_conj() { return Golden(rat_frac(1, 2), rat_frac(-1, 2)); }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }

    Golden conj() const { return Golden(a, -b); }
    // Field norm a^2 - 5 b^2 (product with the conjugate).
    Rat norm() const { return a * a - 5 * b * b; }

    Golden operator-() const { return Golden(-a, -b); }
    Golden operator+(const Golden& o) const { return Golden(a + o.a, b + o.b); }
    Golden operator-(const Golden& o) const { return Golden(a - o.a, b - o.b); }
    Golden operator*(const Golden& o) const {
        return Golden(a * o.a + 5 * b * o.b, a * o.b + b * o.a);
    }
    Golden& operator+=(const Golden& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    Golden& operator-=(const Golden& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    Golden& operator*=(const Golden& o) {
        *this = *this * o;
        return *this;
    }

    Golden inv() const;  // throws std::domain_error on zero
    Golden operator/(const Golden& o) const { return *this * o.inv(); }

    bool operator==(const Golden& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Golden& o) const { return !(*this == o); }

    Golden pow(unsigned long e) const {
        Golden r(1), x = *this;
        while (e) {
            if (e & 1) r *= x;
            x *= x;
            e >>= 1;
        }
        return r;
    }

    // Canonical text form; see format.hpp for the full grammar.  Examples:
    // "0", "3/2", "r5", "-2*r5", "1/2+1/2*r5", "1/2-1/2*r5".
    std::string str() const;
};

inline Golden operator*(const Rat& s, const Golden& x) { return Golden(s) * x; }

// Parse the canonical text form produced by Golden::str().
Golden golden_parse(const std::string& s);

}  // namespace coxinv
