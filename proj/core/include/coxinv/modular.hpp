#pragma once
// Modular identity testing.  Three fixed 62-bit primes p with p = +-1 mod 5,
// so 5 is a quadratic residue and the reduction map Q(sqrt5) -> F_p (sending
// sqrt5 to the smaller square root of 5 mod p) is a ring homomorphism
// wherever coefficient denominators are invertible mod p.  A multivariate
// identity of total degree d that is false can evaluate true at a uniform
// point of F_p^n with probability at most d/p per prime; across three primes
// and many points the false-pass probability is negligible.

#include "coxinv/golden.hpp"
#include "coxinv/poly.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace coxinv {

struct ModCtx {
    // The three largest 62-bit primes congruent to +-1 mod 5.
    static constexpr std::array<std::uint64_t, 3> kPrimes = {
        4611686018427387761ULL, 4611686018427387751ULL, 4611686018427387709ULL};
    // Smaller square root of 5 modulo each prime (checked at startup).
    static constexpr std::array<std::uint64_t, 3> kSqrt5 = {
        276037557651519577ULL, 1111591874474287041ULL, 505889068530541980ULL};
    static constexpr int kNumPrimes = 3;
};

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;  // p < 2^62 so no overflow
    return s >= p ? s - p : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("not invertible mod p");
    return powmod(a, p - 2, p);  // p prime
}

// Reduce a rational mod p; throws std::domain_error if the denominator is
// divisible by p (callers treat that as a bad prime/point and skip).
std::uint64_t rat_mod(const Rat& q, std::uint64_t p);

// Reduce a + b*sqrt5 using the fixed root for prime index pi.
std::uint64_t golden_mod(const Golden& g, int pi);

// A polynomial with coefficients pre-reduced mod one prime, for fast repeated
// evaluation.
class PolyMod {
  public:
    PolyMod() = default;
    PolyMod(const Poly& p, int prime_index);

    int prime_index() const { return pi_; }
    std::uint64_t prime() const { return ModCtx::kPrimes[pi_]; }
    std::size_t nvars() const { return nvars_; }

    std::uint64_t eval(const std::vector<std::uint64_t>& point) const;

  private:
    int pi_ = 0;
    std::size_t nvars_ = 0;
    std::vector<std::pair<ExpKey, std::uint64_t>> terms_;
    std::vector<int> maxdeg_;
};

}  // namespace coxinv
