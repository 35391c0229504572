#include "coxinv/frobenius.hpp"

#include <stdexcept>

namespace coxinv {

LocPoly h4_9_dtot(const H4NineData& d, const LocPoly& a, int i) {
    // Flat coordinates (t1,t2,t3,t4); ring variables (t1,t2,t4,w0).
    if (i == 3) return a.diff(2).normalized();  // d/dt4, no chain
    LocPoly dw = a.diff(3).normalized();
    if (i == 2) return (dw * d.chain[2]).normalized();
    return (a.diff(i) + dw * d.chain[i]).normalized();
}

namespace {

const H4NineData* build_h4_9() {
    auto* d = new H4NineData;
    d->tring = make_ring({"t1", "t2", "t4", "w0"},
                         std::vector<Rat>{Rat(14), Rat(20), Rat(30), Rat(2)});
    d->xring = make_ring({"x1", "x2", "x3", "x4"},
                         std::vector<Rat>{Rat(2), Rat(12), Rat(20), Rat(30)});
    d->zring = make_ring({"Z2", "Z12", "Z20", "Z30"},
                         std::vector<Rat>{Rat(2), Rat(12), Rat(20), Rat(30)});

    Poly t1 = Poly::variable(d->tring, 0);
    Poly t2 = Poly::variable(d->tring, 1);
    Poly t4 = Poly::variable(d->tring, 2);
    Poly w0 = Poly::variable(d->tring, 3);

    // Ewt = w0 * dE/dw0 with t3 eliminated from the constraint
    //   (3/20) t1^2 - t3 w0^2 + (1/5) t2 w0^4 + (8/5) t1 w0^7 + w0^14 = 0.
    d->ewt = (t1 * t1).scaled(rat_frac(-3, 10)) +
             (t2 * w0.pow(4)).scaled(rat_frac(2, 5)) +
             (t1 * w0.pow(7)).scaled(Golden(8)) + w0.pow(14).scaled(Golden(12));
    d->ctx = make_loc_ctx(d->tring, {w0, d->ewt});

    // t3 = ((3/20) t1^2 + (1/5) t2 w0^4 + (8/5) t1 w0^7 + w0^14) / w0^2.
    Poly t3num = (t1 * t1).scaled(rat_frac(3, 20)) +
                 (t2 * w0.pow(4)).scaled(rat_frac(1, 5)) +
                 (t1 * w0.pow(7)).scaled(rat_frac(8, 5)) + w0.pow(14);
    d->t3 = LocPoly(d->ctx, t3num, {2, 0});

    // dw0/dt_i = -(dE/dt_i)/(dE/dw0) with dE/dw0 = Ewt/w0.
    Poly e1 = t1.scaled(rat_frac(3, 10)) + w0.pow(7).scaled(rat_frac(8, 5));
    Poly e2 = w0.pow(4).scaled(rat_frac(1, 5));
    d->chain[0] = LocPoly(d->ctx, -(e1 * w0), {0, 1});
    d->chain[1] = LocPoly(d->ctx, -(e2 * w0), {0, 1});
    d->chain[2] = LocPoly(d->ctx, w0.pow(3), {0, 1});
    d->chain[3] = LocPoly::zero(d->ctx);

    // Potential: the 5-coordinate reference entry with t3 replaced by its
    // eliminated expression; w0 appears with negative exponents there.
    GoldenFile f = golden_file("f_h4_9");
    if (f.names != std::vector<std::string>{"t1", "t2", "t3", "t4", "w0"})
        throw std::domain_error("unexpected coordinate list in f_h4_9");
    int t3max = 0;
    for (const auto& t : f.entries.at(0).poly.terms)
        t3max = std::max(t3max, t.exps[2]);
    std::vector<LocPoly> t3pow(t3max + 1);
    t3pow[0] = LocPoly::from_poly(d->ctx, Poly::constant(d->tring, Golden(1)));
    for (int k = 1; k <= t3max; ++k) t3pow[k] = (t3pow[k - 1] * d->t3).normalized();
    LocPoly pot = LocPoly::zero(d->ctx);
    for (const auto& t : f.entries.at(0).poly.terms) {
        std::vector<int> e = {t.exps[0], t.exps[1], t.exps[3],
                              t.exps[4] > 0 ? t.exps[4] : 0};
        Poly mono(d->tring);
        mono.add_term(key_pack(e), t.c);
        LocPoly lt(d->ctx, mono, {t.exps[4] < 0 ? -t.exps[4] : 0, 0});
        pot = pot + lt * t3pow[t.exps[2]];
    }
    d->potential = pot.normalized();

    std::vector<LocPoly> df(4);
    for (int i = 0; i < 4; ++i) df[i] = h4_9_dtot(*d, d->potential, i);
    d->C.assign(4, std::vector<LocPoly>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) d->C[i][j] = h4_9_dtot(*d, df[3 - j], i);

    // Entries are weighted homogeneous, so the Euler operator acts as the
    // scalar wdeg/30; the literal operator form is cross-checked in the
    // verification suite.
    static const long kFlatDegs[4] = {14, 20, 24, 30};
    d->T.assign(4, std::vector<LocPoly>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long want = 74 - kFlatDegs[i] - kFlatDegs[3 - j];
            d->T[i][j] = d->C[i][j].scaled(Golden(rat_frac(want, 30)));
        }

    d->det_T = loc_det(d->T);
    d->det_C = loc_det(d->C);

    LocPoly psi =
        d->det_T.mul_poly(w0.pow(10)).scaled(Golden(72000000)).normalized();
    d->psi_is_polynomial =
        psi.denom_exps()[0] == 0 && psi.denom_exps()[1] == 0;
    if (d->psi_is_polynomial) d->psi_tilde = psi.num();

    // Coordinate maps.
    Poly x1 = Poly::variable(d->xring, 0);
    Poly x2 = Poly::variable(d->xring, 1);
    Poly x3 = Poly::variable(d->xring, 2);
    Poly x4 = Poly::variable(d->xring, 3);
    d->map_t_x = {
        (x1 * (x1.pow(6).scaled(Golden(4)) + x2.scaled(Golden(315))))
            .scaled(rat_frac(1, 6)),
        (x1.pow(4) * x2 + x3.scaled(Golden(18))).scaled(rat_frac(3675, 8)),
        ((x1.pow(3) * x2 * x2).scaled(Golden(5)) +
         (x1.pow(5) * x3).scaled(Golden(8)) + x4.scaled(Golden(90)))
            .scaled(rat_frac(46305, 32)),
        x1.scaled(Golden(-1)),
    };
    Poly z2 = Poly::variable(d->zring, 0);
    Poly z12 = Poly::variable(d->zring, 1);
    Poly z20 = Poly::variable(d->zring, 2);
    Poly z30 = Poly::variable(d->zring, 3);
    d->map_t_z = {
        (z2 * (z12.scaled(Golden(21)) + z2.pow(6).scaled(Golden(2))))
            .scaled(Golden(5)),
        ((z12 * z2.pow(4)).scaled(Golden(60)) + z2.pow(10).scaled(Golden(4)) +
         z20.scaled(Golden(135)))
            .scaled(rat_frac(245, 4)),
        ((z12 * z12 * z2.pow(3)).scaled(Golden(5400)) +
         (z12 * z2.pow(9)).scaled(Golden(1260)) + z2.pow(15).scaled(Golden(56)) +
         (z2.pow(5) * z20).scaled(Golden(2160)) + z30.scaled(Golden(-6075)))
            .scaled(rat_frac(343, 16)),
        z2.scaled(Golden(-1)),
    };
    d->map_x_z = {
        z2,
        (z12.scaled(Golden(45)) + z2.pow(6).scaled(Golden(4)))
            .scaled(rat_frac(2, 45)),
        ((z12 * z2.pow(4)).scaled(Golden(135)) + z2.pow(10).scaled(Golden(8)) +
         z20.scaled(Golden(405)))
            .scaled(rat_frac(1, 405)),
        ((z12 * z12 * z2.pow(3)).scaled(Golden(12150)) +
         (z12 * z2.pow(9)).scaled(Golden(2520)) +
         z2.pow(15).scaled(Golden(104)) +
         (z2.pow(5) * z20).scaled(Golden(4860)) + z30.scaled(Golden(-18225)))
            .scaled(rat_frac(1, 18225)),
    };
    d->map_z_t = {
        LocPoly::from_poly(d->ctx, w0.scaled(Golden(-1))),
        LocPoly(d->ctx,
                (t1 + w0.pow(7).scaled(Golden(10))).scaled(rat_frac(-1, 105)),
                {1, 0}),
        LocPoly::from_poly(
            d->ctx, (t2 + (t1 * w0.pow(3)).scaled(Golden(35)) +
                     w0.pow(10).scaled(Golden(105)))
                        .scaled(rat_frac(4, 33075))),
        LocPoly::from_poly(
            d->ctx, (t4.scaled(Golden(20)) + (t1 * t1 * w0).scaled(Golden(210)) +
                     (t2 * w0.pow(5)).scaled(Golden(112)) +
                     (t1 * w0.pow(8)).scaled(Golden(2975)) +
                     w0.pow(15).scaled(Golden(5320)))
                        .scaled(rat_frac(-4, 10418625))),
    };
    return d;
}

}  // namespace

const H4NineData& h4_9_data() {
    static const H4NineData* d = build_h4_9();
    return *d;
}

}  // namespace coxinv
