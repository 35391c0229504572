#include "coxinv/poly.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>

namespace coxinv {

Poly Poly::constant(RingPtr ring, Golden c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.terms_.emplace(0, std::move(c));
    return p;
}

Poly Poly::variable(RingPtr ring, int var, Golden coeff) {
    if (var < 0 || static_cast<std::size_t>(var) >= ring->size())
        throw std::out_of_range("variable index outside ring");
    Poly p(std::move(ring));
    if (!coeff.is_zero()) p.terms_.emplace(key_set(0, var, 1), std::move(coeff));
    return p;
}

Poly Poly::from_terms(RingPtr ring,
                      const std::vector<std::pair<std::vector<int>, Golden>>& terms) {
    Poly p(std::move(ring));
    for (const auto& [e, c] : terms) {
        if (e.size() != p.nvars()) throw std::invalid_argument("exponent arity mismatch");
        p.add_term(key_pack(e), c);
    }
    return p;
}

Golden Poly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(key_pack(exps));
    return it == terms_.end() ? Golden(0) : it->second;
}

Golden Poly::constant_term() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Golden(0) : it->second;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, key_total(k, nvars()));
    return d;
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, key_get(k, var));
    return d;
}

void Poly::check_ring(const Poly& o) const {
    if (!same_ring(ring_, o.ring_))
        throw std::invalid_argument("polynomial rings differ");
}

void Poly::add_term(ExpKey k, const Golden& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_ring(o);
    Poly r = *this;
    if (!r.ring_) r.ring_ = o.ring_;
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_ring(o);
    Poly r = *this;
    if (!r.ring_) r.ring_ = o.ring_;
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_ring(o);
    if (!ring_) ring_ = o.ring_;
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_ring(o);
    if (!ring_) ring_ = o.ring_;
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    check_ring(o);
    Poly r(ring_ ? ring_ : o.ring_);
    if (is_zero() || o.is_zero()) return r;
    const Poly& small = term_count() <= o.term_count() ? *this : o;
    const Poly& large = term_count() <= o.term_count() ? o : *this;
    r.terms_.reserve(large.term_count());
    for (const auto& [ka, ca] : small.terms_)
        for (const auto& [kb, cb] : large.terms_) r.add_term(key_mul(ka, kb), ca * cb);
    return r;
}

Poly Poly::scaled(const Golden& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(ring_, Golden(1));
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

Poly Poly::diff(int var) const {
    Poly r(ring_);
    for (const auto& [k, c] : terms_) {
        int e = key_get(k, var);
        if (e == 0) continue;
        r.add_term(key_set(k, var, e - 1), Golden(Rat(e)) * c);
    }
    return r;
}

Poly Poly::conj() const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.conj());
    return r;
}

std::vector<std::pair<ExpKey, Golden>> Poly::sorted_terms() const {
    std::vector<std::pair<ExpKey, Golden>> v(terms_.begin(), terms_.end());
    GradedLexGreater gt{nvars()};
    std::sort(v.begin(), v.end(),
              [&](const auto& x, const auto& y) { return gt(x.first, y.first); });
    return v;
}

namespace {

// Substitution worker: terms sorted lexicographically descending (plain key
// order), all terms in [lo, hi) share exponents of variables < vi.
Poly subst_rec(std::span<const std::pair<ExpKey, Golden>> terms, int vi,
               std::size_t nvars, const std::vector<Poly>& images,
               const RingPtr& target) {
    if (terms.empty()) return Poly::zero(target);
    if (static_cast<std::size_t>(vi) == nvars) {
        // A single constant term remains.
        Golden acc(0);
        for (const auto& [k, c] : terms) acc += c;
        return Poly::constant(target, acc);
    }
    // Split into contiguous groups with equal exponent of variable vi
    // (descending), recurse, then Horner-combine with powers of images[vi].
    Poly acc = Poly::zero(target);
    int prev_e = -1;
    std::size_t i = 0;
    while (i < terms.size()) {
        int e = key_get(terms[i].first, vi);
        std::size_t j = i;
        while (j < terms.size() && key_get(terms[j].first, vi) == e) ++j;
        Poly part = subst_rec(terms.subspan(i, j - i), vi + 1, nvars, images, target);
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

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != nvars())
        throw std::invalid_argument("substitution needs one image per variable");
    RingPtr target;
    for (const auto& im : images) {
        if (!target)
            target = im.ring();
        else if (!same_ring(target, im.ring()))
            throw std::invalid_argument("substitution images over different rings");
    }
    if (!target) throw std::invalid_argument("substitution with empty ring");
    if (is_zero()) return Poly::zero(target);
    std::vector<std::pair<ExpKey, Golden>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    return subst_rec(std::span(v), 0, nvars(), images, target);
}

Golden Poly::eval(const std::vector<Golden>& point) const {
    if (point.size() != nvars())
        throw std::invalid_argument("evaluation needs one value per variable");
    // Per-variable power cache.
    std::vector<std::vector<Golden>> pows(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
        int mx = degree_in(static_cast<int>(i));
        pows[i].reserve(mx + 1);
        pows[i].push_back(Golden(1));
        for (int e = 1; e <= mx; ++e) pows[i].push_back(pows[i].back() * point[i]);
    }
    Golden acc(0);
    for (const auto& [k, c] : terms_) {
        Golden t = c;
        for (std::size_t i = 0; i < nvars(); ++i) {
            int e = key_get(k, static_cast<int>(i));
            if (e) t *= pows[i][e];
        }
        acc += t;
    }
    return acc;
}

std::optional<Poly> Poly::divexact(const Poly& g, std::string* obstruction) const {
    check_ring(g);
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (is_zero()) return Poly::zero(ring_);
    GradedLexGreater gt{nvars()};
    ExpKey kg = 0;
    bool first = true;
    for (const auto& [k, c] : g.terms_) {
        if (first || gt(k, kg)) kg = k;
        first = false;
    }
    const Golden cg_inv = g.terms_.at(kg).inv();

    std::map<ExpKey, Golden, GradedLexGreater> rem(gt);
    for (const auto& [k, c] : terms_) rem.emplace(k, c);
    Poly q(ring_);
    auto divisible = [&](ExpKey kr) {
        for (std::size_t i = 0; i < nvars(); ++i)
            if (key_get(kr, static_cast<int>(i)) < key_get(kg, static_cast<int>(i)))
                return false;
        return true;
    };
    while (!rem.empty()) {
        auto it = rem.begin();
        ExpKey kr = it->first;
        if (!divisible(kr)) {
            if (obstruction) {
                std::string s;
                for (std::size_t i = 0; i < nvars(); ++i) {
                    int e = key_get(kr, static_cast<int>(i));
                    if (!e) continue;
                    if (!s.empty()) s += "*";
                    s += ring_->names[i];
                    if (e != 1) s += "^" + std::to_string(e);
                }
                *obstruction = s.empty() ? "1" : s;
            }
            return std::nullopt;
        }
        ExpKey kq = kr - kg;  // fieldwise subtraction, no borrow by the check above
        Golden cq = it->second * cg_inv;
        q.add_term(kq, cq);
        for (const auto& [kt, ct] : g.terms_) {
            ExpKey kn = key_mul(kt, kq);
            Golden delta = ct * cq;
            auto [rit, inserted] = rem.try_emplace(kn, -delta);
            if (!inserted) {
                rit->second -= delta;
                if (rit->second.is_zero()) rem.erase(rit);
            } else if (rit->second.is_zero()) {
                rem.erase(rit);
            }
        }
    }
    return q;
}

WeightedDegree Poly::weighted_degree() const {
    if (!ring_ || !ring_->weights)
        throw std::logic_error("weighted_degree needs ring weights");
    if (is_zero()) return {WeightedDegree::AnyDegree, Rat(0)};
    const auto& w = *ring_->weights;
    bool have = false;
    Rat deg(0);
    for (const auto& [k, c] : terms_) {
        Rat d(0);
        for (std::size_t i = 0; i < nvars(); ++i)
            d += Rat(key_get(k, static_cast<int>(i))) * w[i];
        if (!have) {
            deg = d;
            have = true;
        } else if (d != deg) {
            return {WeightedDegree::NotHomogeneous, Rat(0)};
        }
    }
    return {WeightedDegree::Value, deg};
}

bool Poly::operator==(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [k, c] : terms_) {
        auto it = o.terms_.find(k);
        if (it == o.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

}  // namespace coxinv
