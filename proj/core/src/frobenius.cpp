#include "coxinv/frobenius.hpp"

#include "coxinv/invariants.hpp"

#include <stdexcept>

namespace coxinv {

std::vector<std::vector<Poly>> pairing_matrix(const Poly& potential) {
    const int n = static_cast<int>(potential.nvars());
    std::vector<Poly> first(potential.nvars());
    for (int i = 0; i < n; ++i) first[i] = potential.diff(i);
    std::vector<std::vector<Poly>> c(potential.nvars(),
                                     std::vector<Poly>(potential.nvars()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[i][j] = first[i].diff(n - 1 - j);
    return c;
}

Poly euler_apply(const Poly& p, const std::vector<long>& degs, long h) {
    Poly r(p.ring());
    for (std::size_t k = 0; k < degs.size(); ++k) {
        Poly xk = Poly::variable(p.ring(), static_cast<int>(k));
        r = r + (xk * p.diff(static_cast<int>(k))).scaled(rat_frac(degs[k], h));
    }
    return r;
}

namespace {

DiscCase build_poly_case(const char* golden_name, RingPtr ring,
                         const std::vector<long>& degs, long h) {
    DiscCase d;
    d.potential = golden_poly(golden_name, ring);
    d.C = pairing_matrix(d.potential);
    d.T = d.C;
    for (auto& row : d.T)
        for (auto& e : row) e = euler_apply(e, degs, h);
    d.det_T = poly_det(d.T);
    d.det_C = poly_det(d.C);
    return d;
}

}  // namespace

DiscCase h3_disc_case() {
    auto ring = make_ring({"x1", "x2", "x3"},
                          std::vector<Rat>{rat_frac(1, 5), rat_frac(3, 5), Rat(1)});
    return build_poly_case("f_h3", ring, {2, 6, 10}, 10);
}

DiscCase h4_disc_case() {
    auto ring = make_ring({"x1", "x2", "x3", "x4"},
                          std::vector<Rat>{rat_frac(1, 15), rat_frac(2, 5),
                                           rat_frac(2, 3), Rat(1)});
    return build_poly_case("f_h4", ring, {2, 12, 20, 30}, 30);
}

LocPoly h3prime_dtot(const H3PrimeData& d, const LocPoly& a, int i) {
    LocPoly base = a.diff(i).normalized();
    if (i == 2) return base;
    LocPoly dz = a.diff(3).normalized();
    // dz/dt1 = -z/W, dz/dt2 = -1/W.
    Poly num = i == 0 ? Poly::variable(d.tring, 3, Golden(-1))
                      : Poly::constant(d.tring, Golden(-1));
    return (base + dz * LocPoly(d.ctx, num, {1})).normalized();
}

namespace {

Poly project_drop_var(const Poly& p, int var, const RingPtr& target) {
    if (p.degree_in(var) > 0)
        throw std::domain_error("projection requires a variable-free polynomial");
    Poly out(target);
    for (const auto& [k, c] : p.terms()) {
        std::vector<int> e = key_unpack(k, p.nvars());
        e.erase(e.begin() + var);
        out.add_term(key_pack(e), c);
    }
    return out;
}

const H3PrimeData* build_h3prime() {
    auto* d = new H3PrimeData;
    d->tring = make_ring({"t1", "t2", "t3", "z"},
                         std::vector<Rat>{rat_frac(3, 5), rat_frac(4, 5), Rat(1),
                                          rat_frac(1, 5)});
    d->pring = make_ring({"t1", "t3", "z"},
                         std::vector<Rat>{rat_frac(3, 5), Rat(1), rat_frac(1, 5)});
    Poly t1 = Poly::variable(d->tring, 0);
    Poly t3 = Poly::variable(d->tring, 2);
    Poly z = Poly::variable(d->tring, 3);
    d->w = t1 + z.pow(3).scaled(Golden(4));
    d->ctx = make_loc_ctx(d->tring, {d->w});
    d->potential = golden_poly("f_h3prime", d->tring);

    LocPoly floc = LocPoly::from_poly(d->ctx, d->potential);
    std::vector<LocPoly> df(3);
    for (int i = 0; i < 3; ++i) df[i] = h3prime_dtot(*d, floc, i);
    d->C.assign(3, std::vector<LocPoly>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d->C[i][j] = h3prime_dtot(*d, df[i], 2 - j);

    auto euler = [&](const LocPoly& a) {
        LocPoly r = LocPoly::zero(d->ctx);
        const long degs[3] = {6, 8, 10};
        for (int i = 0; i < 3; ++i) {
            LocPoly term = h3prime_dtot(*d, a, i)
                               .mul_poly(Poly::variable(d->tring, i))
                               .scaled(Golden(rat_frac(degs[i], 10)));
            r = r + term;
        }
        return r.normalized();
    };
    d->T.assign(3, std::vector<LocPoly>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d->T[i][j] = euler(d->C[i][j]);

    d->det_T = loc_det(d->T);
    d->det_C = loc_det(d->C);

    // Eliminate t2 = -(t1 z + z^4); W has no t2, so denominators carry over.
    Poly t2img = -(t1 * z + z.pow(4));
    auto eliminate = [&](const LocPoly& a) {
        Poly num = a.num().substitute({t1, t2img, t3, z});
        return LocPoly(d->ctx, num, a.denom_exps()).normalized();
    };
    LocPoly det_t_elim = eliminate(d->det_T);
    LocPoly det_c_elim = eliminate(d->det_C);
    if (det_t_elim.denom_exps()[0] != 0 || det_c_elim.denom_exps()[0] != 0)
        throw std::domain_error("residual denominator after eliminating t2");
    d->disc = project_drop_var(det_t_elim.num().scaled(Golden(3000)), 1, d->pring);
    d->det_c_elim = project_drop_var(det_c_elim.num(), 1, d->pring);
    return d;
}

}  // namespace

const H3PrimeData& h3prime_data() {
    static const H3PrimeData* d = build_h3prime();
    return *d;
}

LocPoly loc_det(const std::vector<std::vector<LocPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    LocPoly acc;
    bool first = true;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<LocPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<LocPoly> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        LocPoly t = (m[0][j] * loc_det(minor)).normalized();
        if (j % 2 == 1) t = -t;
        if (first) {
            acc = std::move(t);
            first = false;
        } else {
            acc = acc + t;
        }
    }
    return acc.normalized();
}

bool is_weighted_homogeneous(const Poly& p, const Rat& want) {
    WeightedDegree wd = p.weighted_degree();
    if (wd.kind == WeightedDegree::AnyDegree) return true;
    return wd.kind == WeightedDegree::Value && wd.value == want;
}

}  // namespace coxinv
