#include "coxinv/locpoly.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>

namespace coxinv {

LocCtxPtr make_loc_ctx(RingPtr ring, std::vector<Poly> basis) {
    for (const auto& b : basis) {
        if (!same_ring(ring, b.ring()))
            throw std::invalid_argument("denominator over a different ring");
        if (b.is_zero() || (b.term_count() == 1 && b.terms().count(0)))
            throw std::invalid_argument("denominator must be a nonzero non-unit");
    }
    auto c = std::make_shared<LocCtx>();
    c->ring = std::move(ring);
    c->basis = std::move(basis);
    return c;
}

LocPoly::LocPoly(LocCtxPtr ctx, Poly num, std::vector<int> k)
    : ctx_(std::move(ctx)), num_(std::move(num)), k_(std::move(k)) {
    if (k_.size() != ctx_->basis.size())
        throw std::invalid_argument("denominator exponent arity mismatch");
    for (int e : k_)
        if (e < 0) throw std::invalid_argument("negative denominator exponent");
    if (!same_ring(num_.ring(), ctx_->ring))
        throw std::invalid_argument("numerator over a different ring");
    if (num_.is_zero()) std::fill(k_.begin(), k_.end(), 0);
}

LocPoly LocPoly::from_poly(LocCtxPtr ctx, Poly p) {
    std::vector<int> k(ctx->basis.size(), 0);
    return LocPoly(std::move(ctx), std::move(p), std::move(k));
}

LocPoly LocPoly::zero(LocCtxPtr ctx) {
    Poly z = Poly::zero(ctx ? ctx->ring : nullptr);
    return from_poly(std::move(ctx), std::move(z));
}

LocPoly LocPoly::operator-() const { return LocPoly(ctx_, -num_, k_); }

LocPoly LocPoly::operator+(const LocPoly& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("localization contexts differ");
    std::vector<int> k(k_.size());
    Poly a = num_, b = o.num_;
    for (std::size_t i = 0; i < k.size(); ++i) {
        k[i] = std::max(k_[i], o.k_[i]);
        if (k[i] > k_[i]) a = a * ctx_->basis[i].pow(static_cast<unsigned>(k[i] - k_[i]));
        if (k[i] > o.k_[i])
            b = b * ctx_->basis[i].pow(static_cast<unsigned>(k[i] - o.k_[i]));
    }
    return LocPoly(ctx_, a + b, std::move(k));
}

LocPoly LocPoly::operator-(const LocPoly& o) const { return *this + (-o); }

LocPoly LocPoly::operator*(const LocPoly& o) const {
    if (ctx_ != o.ctx_) throw std::invalid_argument("localization contexts differ");
    std::vector<int> k(k_.size());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = k_[i] + o.k_[i];
    return LocPoly(ctx_, num_ * o.num_, std::move(k));
}

LocPoly LocPoly::scaled(const Golden& c) const { return LocPoly(ctx_, num_.scaled(c), k_); }

LocPoly LocPoly::mul_poly(const Poly& p) const { return LocPoly(ctx_, num_ * p, k_); }

LocPoly LocPoly::div_basis_exact(std::size_t i, int e) const {
    Poly n = num_;
    for (int j = 0; j < e; ++j) {
        auto q = n.divexact(ctx_->basis[i]);
        if (!q) throw std::domain_error("inexact division by declared denominator");
        n = std::move(*q);
    }
    return LocPoly(ctx_, std::move(n), k_);
}

LocPoly LocPoly::normalized() const {
    Poly n = num_;
    std::vector<int> k = k_;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < k.size(); ++i) {
            while (k[i] > 0) {
                auto q = n.divexact(ctx_->basis[i]);
                if (!q) break;
                n = std::move(*q);
                --k[i];
                progress = true;
            }
        }
    }
    return LocPoly(ctx_, std::move(n), std::move(k));
}

LocPoly LocPoly::diff(int var) const {
    // d(num * prod b_i^-k_i) = [num' * prod b_i - num * sum_i k_i b_i' *
    // prod_{j != i} b_j] / prod b_i^{k_i + 1}
    const auto& basis = ctx_->basis;
    Poly all = Poly::constant(ctx_->ring, Golden(1));
    for (const auto& b : basis) all = all * b;
    Poly acc = num_.diff(var) * all;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (k_[i] == 0) continue;
        Poly rest = Poly::constant(ctx_->ring, Golden(1));
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i) rest = rest * basis[j];
        acc -= num_.scaled(Golden(Rat(k_[i]))) * basis[i].diff(var) * rest;
    }
    std::vector<int> k(k_.size());
    for (std::size_t i = 0; i < k.size(); ++i) k[i] = k_[i] + 1;
    return LocPoly(ctx_, std::move(acc), std::move(k));
}

Golden LocPoly::eval(const std::vector<Golden>& point) const {
    Golden v = num_.eval(point);
    for (std::size_t i = 0; i < k_.size(); ++i) {
        if (k_[i] == 0) continue;
        Golden bv = ctx_->basis[i].eval(point);
        if (bv.is_zero()) throw std::domain_error("denominator vanishes at point");
        v = v * bv.inv().pow(static_cast<unsigned long>(k_[i]));
    }
    return v;
}

LocPoly LocPoly::pow(unsigned e) const {
    LocPoly out = from_poly(ctx_, Poly::constant(ctx_->ring, Golden(1)));
    LocPoly base = *this;
    while (e) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

namespace {

LocPoly loc_subst_rec(std::span<const std::pair<ExpKey, Golden>> terms, int vi,
                      std::size_t nvars, const std::vector<LocPoly>& images,
                      const LocCtxPtr& ctx) {
    if (terms.empty()) return LocPoly::zero(ctx);
    if (static_cast<std::size_t>(vi) == nvars) {
        Golden acc(0);
        for (const auto& [k, c] : terms) acc += c;
        return LocPoly::from_poly(ctx, Poly::constant(ctx->ring, acc));
    }
    LocPoly acc = LocPoly::zero(ctx);
    int prev_e = -1;
    std::size_t i = 0;
    while (i < terms.size()) {
        int e = key_get(terms[i].first, vi);
        std::size_t j = i;
        while (j < terms.size() && key_get(terms[j].first, vi) == e) ++j;
        LocPoly part = loc_subst_rec(terms.subspan(i, j - i), vi + 1, nvars, images, ctx);
        if (prev_e < 0)
            acc = std::move(part);
        else
            acc = acc * images[vi].pow(static_cast<unsigned>(prev_e - e)) + part;
        prev_e = e;
        i = j;
    }
    if (prev_e > 0) acc = acc * images[vi].pow(static_cast<unsigned>(prev_e));
    return acc;
}

}  // namespace

LocPoly loc_substitute(const Poly& p, const std::vector<LocPoly>& images) {
    if (images.size() != p.nvars())
        throw std::invalid_argument("substitution needs one image per variable");
    LocCtxPtr ctx;
    for (const auto& im : images) {
        if (!ctx)
            ctx = im.ctx();
        else if (ctx != im.ctx())
            throw std::invalid_argument("substitution images over different contexts");
    }
    if (!ctx) throw std::invalid_argument("substitution with no context");
    if (p.is_zero()) return LocPoly::zero(ctx);
    std::vector<std::pair<ExpKey, Golden>> v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    return loc_subst_rec(std::span(v), 0, p.nvars(), images, ctx).normalized();
}

bool LocPoly::operator==(const LocPoly& o) const {
    if (ctx_ != o.ctx_) return false;
    Poly a = num_, b = o.num_;
    for (std::size_t i = 0; i < k_.size(); ++i) {
        int d = o.k_[i] - k_[i];
        if (d > 0) a = a * ctx_->basis[i].pow(static_cast<unsigned>(d));
        if (d < 0) b = b * ctx_->basis[i].pow(static_cast<unsigned>(-d));
    }
    return a == b;
}

}  // namespace coxinv
