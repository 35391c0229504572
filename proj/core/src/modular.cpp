#include "coxinv/modular.hpp"

namespace coxinv {

namespace {

struct RootCheck {
    RootCheck() {
        for (int i = 0; i < ModCtx::kNumPrimes; ++i) {
            std::uint64_t p = ModCtx::kPrimes[i], r = ModCtx::kSqrt5[i];
            if (mulmod(r, r, p) != 5 || r > p - r)
                throw std::logic_error("bad square root of 5 in modular tables");
        }
    }
};
const RootCheck root_check;

}  // namespace

std::uint64_t rat_mod(const Rat& q, std::uint64_t p) {
    std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (den == 0) throw std::domain_error("denominator divisible by modulus");
    return mulmod(num, invmod(den, p), p);
}

std::uint64_t golden_mod(const Golden& g, int pi) {
    std::uint64_t p = ModCtx::kPrimes[pi];
    std::uint64_t a = rat_mod(g.a, p);
    if (g.b == 0) return a;
    std::uint64_t b = rat_mod(g.b, p);
    return addmod(a, mulmod(b, ModCtx::kSqrt5[pi], p), p);
}

PolyMod::PolyMod(const Poly& p, int prime_index) : pi_(prime_index), nvars_(p.nvars()) {
    terms_.reserve(p.term_count());
    maxdeg_.assign(nvars_, 0);
    for (const auto& [k, c] : p.terms()) {
        std::uint64_t cv = golden_mod(c, pi_);
        if (cv == 0) continue;  // coefficient reduces to zero mod p
        terms_.emplace_back(k, cv);
        for (std::size_t i = 0; i < nvars_; ++i)
            maxdeg_[i] = std::max(maxdeg_[i], key_get(k, static_cast<int>(i)));
    }
}

std::uint64_t PolyMod::eval(const std::vector<std::uint64_t>& point) const {
    if (point.size() != nvars_)
        throw std::invalid_argument("evaluation needs one value per variable");
    const std::uint64_t p = prime();
    std::vector<std::vector<std::uint64_t>> pows(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        pows[i].reserve(maxdeg_[i] + 1);
        pows[i].push_back(1);
        for (int e = 1; e <= maxdeg_[i]; ++e)
            pows[i].push_back(mulmod(pows[i].back(), point[i] % p, p));
    }
    std::uint64_t acc = 0;
    for (const auto& [k, c] : terms_) {
        std::uint64_t t = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            int e = key_get(k, static_cast<int>(i));
            if (e) t = mulmod(t, pows[i][e], p);
        }
        acc = addmod(acc, t, p);
    }
    return acc;
}

}  // namespace coxinv
