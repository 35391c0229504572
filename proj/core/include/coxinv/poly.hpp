#pragma once
// Sparse multivariate polynomials over Q(sqrt5) with nonnegative exponents.
//
// Exponent vectors are packed into a 64-bit key: 12 bits per variable, at
// most 5 variables, variable 0 in the highest field.  With that layout the
// plain integer order on keys is the lexicographic order on exponent vectors,
// and monomial multiplication is integer addition with a carry check.
// Laurent behaviour (negative exponents) lives in LocPoly, not here.

#include "coxinv/golden.hpp"
#include "coxinv/ring.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace coxinv {

using ExpKey = std::uint64_t;

inline constexpr int kMaxVars = 5;
inline constexpr int kExpBits = 12;
inline constexpr int kMaxExp = (1 << kExpBits) - 1;
// Bits where a carry out of one exponent field would land.
inline constexpr ExpKey kCarryMask =
    (ExpKey(1) << 60) | (ExpKey(1) << 48) | (ExpKey(1) << 36) |
    (ExpKey(1) << 24) | (ExpKey(1) << 12);

inline int key_shift(int var) { return kExpBits * (kMaxVars - 1 - var); }

inline int key_get(ExpKey k, int var) {
    return static_cast<int>((k >> key_shift(var)) & kMaxExp);
}

inline ExpKey key_set(ExpKey k, int var, int e) {
    ExpKey sh = ExpKey(kMaxExp) << key_shift(var);
    return (k & ~sh) | (ExpKey(e) << key_shift(var));
}

inline ExpKey key_pack(const std::vector<int>& exps) {
    ExpKey k = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 || exps[i] > kMaxExp)
            throw std::out_of_range("exponent outside [0, 4095]");
        k |= ExpKey(exps[i]) << key_shift(static_cast<int>(i));
    }
    return k;
}

inline std::vector<int> key_unpack(ExpKey k, std::size_t nvars) {
    std::vector<int> e(nvars);
    for (std::size_t i = 0; i < nvars; ++i) e[i] = key_get(k, static_cast<int>(i));
    return e;
}

inline int key_total(ExpKey k, std::size_t nvars) {
    int t = 0;
    for (std::size_t i = 0; i < nvars; ++i) t += key_get(k, static_cast<int>(i));
    return t;
}

// Monomial product; throws on per-variable overflow past 4095.
inline ExpKey key_mul(ExpKey a, ExpKey b) {
    ExpKey s = a + b;
    if ((s ^ a ^ b) & kCarryMask)
        throw std::overflow_error("monomial exponent overflow");
    return s;
}

// Graded lexicographic "greater": higher total degree first, then the
// lexicographically larger exponent vector (= larger packed key).
struct GradedLexGreater {
    std::size_t nvars = kMaxVars;
    bool operator()(ExpKey x, ExpKey y) const {
        int tx = key_total(x, nvars), ty = key_total(y, nvars);
        if (tx != ty) return tx > ty;
        return x > y;
    }
};

// Result of a weighted-degree query.
struct WeightedDegree {
    enum Kind { Value, AnyDegree, NotHomogeneous } kind;
    Rat value;  // meaningful only for kind == Value
};

class Poly {
  public:
    using TermMap = std::unordered_map<ExpKey, Golden>;

    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, Golden c);
    static Poly variable(RingPtr ring, int var, Golden coeff = Golden(1));
    static Poly from_terms(RingPtr ring,
                           const std::vector<std::pair<std::vector<int>, Golden>>& terms);

    const RingPtr& ring() const { return ring_; }
    std::size_t nvars() const { return ring_ ? ring_->size() : 0; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Golden coeff(const std::vector<int>& exps) const;
    Golden constant_term() const;
    int total_degree() const;  // -1 for the zero polynomial
    int degree_in(int var) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    Poly scaled(const Golden& c) const;
    Poly pow(unsigned e) const;
    Poly diff(int var) const;
    Poly conj() const;  // sqrt5 -> -sqrt5 on every coefficient

    // Simultaneous substitution variable i -> images[i]; all images must share
    // one ring, which becomes the result ring.  Implemented as a recursive
    // multivariate Horner scheme over the sorted term list.
    Poly substitute(const std::vector<Poly>& images) const;

    Golden eval(const std::vector<Golden>& point) const;

    // Exact division: returns f/g when g divides exactly, otherwise
    // std::nullopt with the first obstructing remainder term (canonical
    // monomial text) in *obstruction if given.
    std::optional<Poly> divexact(const Poly& g, std::string* obstruction = nullptr) const;

    WeightedDegree weighted_degree() const;  // requires ring weights

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Terms sorted graded-lex descending (the canonical emission order).
    std::vector<std::pair<ExpKey, Golden>> sorted_terms() const;

    void add_term(ExpKey k, const Golden& c);  // accumulate, dropping zeros

  private:
    void check_ring(const Poly& o) const;

    RingPtr ring_;
    TermMap terms_;
};

}  // namespace coxinv
