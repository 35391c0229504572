// Exact expression of an invariant polynomial in a basic-invariant basis:
// enumerate candidate monomials by weighted degree, determine their
// coefficients from evaluations at random integer points by exact Gaussian
// elimination, and validate the result on held-out points.

#include "coxinv/invariants.hpp"

#include <cstdlib>

namespace coxinv {

namespace {

void enum_monomials(const std::vector<int>& degs, int remaining, std::size_t i,
                    std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (i + 1 == degs.size()) {
        if (remaining % degs[i] == 0) {
            cur[i] = remaining / degs[i];
            out.push_back(cur);
        }
        return;
    }
    for (int e = 0; e * degs[i] <= remaining; ++e) {
        cur[i] = e;
        enum_monomials(degs, remaining - e * degs[i], i + 1, cur, out);
    }
}

std::vector<Golden> random_point(Rng& rng, std::size_t n) {
    std::vector<Golden> pt;
    pt.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pt.push_back(Golden(rng.uniform(-9, 9)));
    return pt;
}

}  // namespace

Poly express_in_invariants(const Poly& target, const std::vector<Poly>& basis,
                           const RingPtr& basis_ring, Rng& rng) {
    if (target.is_zero()) return Poly::zero(basis_ring);
    const int deg = target.total_degree();
    for (const auto& [key, c] : target.terms()) {
        (void)c;
        if (key_total(key, target.nvars()) != deg)
            throw std::invalid_argument("target must be homogeneous");
    }
    return express_in_invariants([&](const std::vector<Golden>& pt) { return target.eval(pt); },
                                 deg, basis, basis_ring, rng);
}

Poly express_in_invariants(
    const std::function<Golden(const std::vector<Golden>&)>& target_eval,
    int target_degree, const std::vector<Poly>& basis, const RingPtr& basis_ring,
    Rng& rng) {
    if (basis.empty() || basis.size() != basis_ring->size())
        throw std::invalid_argument("basis and basis ring size mismatch");

    const int deg = target_degree;
    std::vector<int> degs;
    for (const Poly& p : basis) {
        const int d = p.total_degree();
        if (d <= 0) throw std::invalid_argument("basis polynomials must be nonconstant");
        degs.push_back(d);
    }

    std::vector<std::vector<int>> monos;
    std::vector<int> cur(degs.size(), 0);
    enum_monomials(degs, deg, 0, cur, monos);
    if (monos.empty())
        throw RankDeficient("no basis monomial has the target's degree");
    const std::size_t m = monos.size();
    const std::size_t nvars = basis[0].nvars();

    auto row_at = [&](const std::vector<Golden>& pt) {
        std::vector<Golden> vals;
        vals.reserve(basis.size());
        for (const Poly& p : basis) vals.push_back(p.eval(pt));
        std::vector<Golden> row;
        row.reserve(m);
        for (const auto& e : monos) {
            Golden v(1);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) v *= vals[i].pow(static_cast<unsigned long>(e[i]));
            row.push_back(v);
        }
        return row;
    };

    // Incremental Gauss-Jordan over sampled rows: keep one normalized pivot
    // row per leading column until the monomial space has full rank.  A row
    // that reduces to zero with a nonzero right-hand side proves the target
    // is outside the span.
    struct PivotRow {
        std::vector<Golden> row;
        Golden rhs;
    };
    std::vector<std::optional<PivotRow>> pivot(m);
    std::size_t rank = 0, drawn = 0;
    const std::size_t cap = 6 * m + 20;
    while (rank < m && drawn < cap) {
        const auto pt = random_point(rng, nvars);
        ++drawn;
        std::vector<Golden> row = row_at(pt);
        Golden rhs = target_eval(pt);
        // Phase 1: clear every existing pivot column (pivot rows carry 1 at
        // their own column and 0 at all other pivot columns, so order does
        // not matter).
        for (std::size_t c = 0; c < m; ++c) {
            if (!pivot[c] || row[c].is_zero()) continue;
            const Golden f = row[c];
            for (std::size_t k = 0; k < m; ++k) row[k] -= f * pivot[c]->row[k];
            rhs -= f * pivot[c]->rhs;
        }
        // Phase 2: install the first remaining nonzero column as a new pivot.
        std::size_t lead = m;
        for (std::size_t c = 0; c < m; ++c)
            if (!row[c].is_zero()) {
                lead = c;
                break;
            }
        if (lead == m) {
            if (!rhs.is_zero())
                throw Inconsistent("sampled row reduced to zero with nonzero value;"
                                   " target is not in the span");
            continue;
        }
        const Golden inv = row[lead].inv();
        for (auto& v : row) v *= inv;
        rhs *= inv;
        for (std::size_t c2 = 0; c2 < m; ++c2) {
            if (!pivot[c2] || pivot[c2]->row[lead].is_zero()) continue;
            const Golden f2 = pivot[c2]->row[lead];
            for (std::size_t k = 0; k < m; ++k) pivot[c2]->row[k] -= f2 * row[k];
            pivot[c2]->rhs -= f2 * rhs;
        }
        pivot[lead] = PivotRow{std::move(row), rhs};
        ++rank;
    }
    if (rank < m)
        throw RankDeficient("monomial sample matrix never reached full rank");

    std::vector<Golden> x(m);
    for (std::size_t c = 0; c < m; ++c) x[c] = pivot[c]->rhs;

    for (int v = 0; v < 5; ++v) {
        const auto pt = random_point(rng, nvars);
        const auto row = row_at(pt);
        Golden s(0);
        for (std::size_t c = 0; c < m; ++c) s += row[c] * x[c];
        if (!(s == target_eval(pt)))
            throw Inconsistent("held-out point mismatch; target is not in the span");
    }

    Poly out = Poly::zero(basis_ring);
    for (std::size_t c = 0; c < m; ++c)
        if (!x[c].is_zero()) out.add_term(key_pack(monos[c]), x[c]);
    return out;
}

}  // namespace coxinv
