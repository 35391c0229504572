// Degree-3 case: basic invariants of degrees 2, 6, 10, their Galois
// conjugates, the equivariant cubic map P, and the product of the 15
// reflection forms.

#include "coxinv/invariants.hpp"

#include "coxinv/data.hpp"

namespace coxinv {

namespace {

Poly sqp(const Poly& p) { return p * p; }

}  // namespace

const H3Data& h3_data() {
    static const H3Data data = [] {
        H3Data d;
        d.uring = make_ring({"u1", "u2", "u3"});
        d.iring = make_ring({"I1", "I2", "I3"},
                            std::vector<Rat>{Rat(2), Rat(6), Rat(10)});
        d.gens = group_generators(GroupType::H3, false);
        d.gens_star = group_generators(GroupType::H3, true);

        const Poly u1 = Poly::variable(d.uring, 0);
        const Poly u2 = Poly::variable(d.uring, 1);
        const Poly u3 = Poly::variable(d.uring, 2);

        // Elementary symmetric functions of the squared coordinates, and the
        // Vandermonde-type product of their pairwise differences.
        const Poly e1 = sqp(u1) + sqp(u2) + sqp(u3);
        const Poly e2 = sqp(u1) * sqp(u2) + sqp(u1) * sqp(u3) + sqp(u2) * sqp(u3);
        const Poly e3 = sqp(u1) * sqp(u2) * sqp(u3);
        const Poly dl = (sqp(u1) - sqp(u2)) * (sqp(u1) - sqp(u3)) * (sqp(u2) - sqp(u3));

        d.I1 = e1.scaled(Golden(2));
        d.I2 = (e1 * e2 - e3.scaled(Golden(11)) + dl.scaled(Golden::sqrt5()))
                   .scaled(Golden(20));
        d.I3 = ((e2 * e3).scaled(Golden(95)) - (sqp(e1) * e3).scaled(Golden(32)) +
                (e1.pow(3) * e2).scaled(Golden(2)) - (e1 * sqp(e2)).scaled(Golden(5)) +
                e1.pow(5).scaled(Golden(rat_frac(-1, 25))) +
                (e2 * dl).scaled(Golden::sqrt5() * Golden(3)))
                   .scaled(Golden(80));
        d.J1 = d.I1.conj();
        d.J2 = d.I2.conj();
        d.J3 = d.I3.conj();

        const Golden a = Golden::ratio();
        const Golden ab = Golden::ratio_conj();
        const Golden m3a = a * Golden(-3);
        const Golden m3ab = ab * Golden(-3);
        d.P.push_back(u1 * (sqp(u1) + sqp(u2).scaled(m3ab) + sqp(u3).scaled(m3a)));
        d.P.push_back(u2 * (sqp(u1).scaled(m3a) + sqp(u2) + sqp(u3).scaled(m3ab)));
        d.P.push_back(u3 * (sqp(u1).scaled(m3ab) + sqp(u2).scaled(m3a) + sqp(u3)));

        const GoldenFile gf = golden_file("h3_forms");
        Poly prod = Poly::constant(d.uring, Golden(1));
        for (const auto& entry : gf.entries) {
            Poly f = raw_to_poly(d.uring, entry.poly);
            d.forms.push_back(f);
            prod = prod * f;
        }
        d.D = prod;
        return d;
    }();
    return data;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Poly total = Poly::zero(m[0][0].ring());
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Poly t = m[0][j] * poly_det(minor);
        if (j % 2 == 0)
            total += t;
        else
            total -= t;
    }
    return total;
}

std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& maps) {
    std::vector<std::vector<Poly>> jac;
    for (const Poly& p : maps) {
        std::vector<Poly> row;
        for (std::size_t j = 0; j < p.ring()->size(); ++j)
            row.push_back(p.diff(static_cast<int>(j)));
        jac.push_back(std::move(row));
    }
    return jac;
}

Golden form_permutation_scalar(const std::vector<Poly>& forms, const Mat& m) {
    Golden product(1);
    std::vector<bool> used(forms.size(), false);
    for (const Poly& phi : forms) {
        const Poly image = act(phi, m);
        bool found = false;
        for (std::size_t j = 0; j < forms.size() && !found; ++j) {
            if (used[j]) continue;
            // image == c * forms[j]?  Compare after scaling by the ratio of
            // leading coefficients.
            const auto im_terms = image.sorted_terms();
            const auto fj_terms = forms[j].sorted_terms();
            if (im_terms.size() != fj_terms.size() || im_terms.empty()) continue;
            if (im_terms[0].first != fj_terms[0].first) continue;
            const Golden c = im_terms[0].second * fj_terms[0].second.inv();
            if (image == forms[j].scaled(c)) {
                product *= c;
                used[j] = true;
                found = true;
            }
        }
        if (!found)
            throw std::runtime_error(
                "form image is not proportional to any listed form");
    }
    return product;
}

Poly star_form_at(const Poly& form, const std::vector<Poly>& maps) {
    Poly out = Poly::zero(maps.at(0).ring());
    for (const auto& [key, c] : form.terms()) {
        // A form is linear: each term is a single variable to the first power.
        int var = -1;
        const auto exps = key_unpack(key, static_cast<int>(form.ring()->size()));
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 1 && var < 0)
                var = static_cast<int>(i);
            else if (exps[i] != 0)
                throw std::invalid_argument("star_form_at requires a linear form");
        }
        if (var < 0) throw std::invalid_argument("star_form_at requires a linear form");
        out += maps.at(static_cast<std::size_t>(var)).scaled(c.conj());
    }
    return out;
}

}  // namespace coxinv
