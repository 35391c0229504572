#pragma once
// Exact rational arithmetic: thin helpers over GMP's mpq_class.

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace coxinv {

using Rat = mpq_class;

// Canonical text form: "n" when the denominator is 1, else "n/d" (always in
// lowest terms, sign on the numerator).
inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

// Parse "n" or "n/d"; throws std::invalid_argument on malformed input.
inline Rat rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline Rat rat_frac(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Exact power with integer exponent >= 0.
inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace coxinv
