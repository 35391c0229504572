// Invariant-theory checks: basic invariants, equivariant maps, reflection
// form products, jacobian factorizations, and the express-in-invariants
// solver for both reflection groups.

#include <doctest.h>

#include "coxinv/data.hpp"
#include "coxinv/format.hpp"
#include "coxinv/invariants.hpp"

using namespace coxinv;

namespace {

Poly intertwined_rhs(const std::vector<Poly>& maps, const Mat& ms, int k) {
    Poly rhs = Poly::zero(maps[0].ring());
    for (std::size_t i = 0; i < maps.size(); ++i)
        rhs += maps[i].scaled(ms.at(static_cast<int>(i), k));
    return rhs;
}

void check_intertwining(const std::vector<Poly>& maps, const Mat& m, const Mat& ms) {
    for (std::size_t k = 0; k < maps.size(); ++k)
        CHECK(act(maps[k], m) == intertwined_rhs(maps, ms, static_cast<int>(k)));
}

std::vector<int> random_word(Rng& rng, int ngens) {
    std::vector<int> w(static_cast<std::size_t>(rng.uniform(1, 6)));
    for (auto& g : w) g = static_cast<int>(rng.uniform(0, ngens - 1));
    return w;
}

Rat rat_pow_long(long base, int e) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

TEST_CASE("degree-3 basic invariants are group-invariant") {
    const auto& d = h3_data();
    CHECK(d.I1.total_degree() == 2);
    CHECK(d.I2.total_degree() == 6);
    CHECK(d.I3.total_degree() == 10);
    for (const Mat& g : d.gens) {
        CHECK(act(d.I1, g) == d.I1);
        CHECK(act(d.I2, g) == d.I2);
        CHECK(act(d.I3, g) == d.I3);
    }
    for (const Mat& g : d.gens_star) {
        CHECK(act(d.J1, g) == d.J1);
        CHECK(act(d.J2, g) == d.J2);
        CHECK(act(d.J3, g) == d.J3);
    }
    // The conjugate system is genuinely different: I2 is not star-invariant.
    CHECK(act(d.I2, d.gens_star[1]) != d.I2);
}

TEST_CASE("degree-3 equivariant map intertwines the two actions") {
    const auto& d = h3_data();
    for (std::size_t j = 0; j < d.gens.size(); ++j)
        check_intertwining(d.P, d.gens[j], d.gens_star[j]);
    Rng rng(0);
    for (int t = 0; t < 20; ++t) {
        const auto w = random_word(rng, 3);
        check_intertwining(d.P, word_matrix(d.gens, w), word_matrix(d.gens_star, w));
    }
}

TEST_CASE("degree-3 jacobian determinant factors through the invariants") {
    const auto& d = h3_data();
    const Poly det = poly_det(jacobian(d.P));
    const Poly target = d.I2 - d.I1.pow(3);
    const auto q = det.divexact(target);
    REQUIRE(q.has_value());
    CHECK(*q == Poly::constant(d.uring, Golden(rat_frac(27, 8))));
}

TEST_CASE("degree-3 conjugate invariants composed with the map") {
    const auto& d = h3_data();
    const std::vector<Poly> P = d.P;
    const Poly JP1 = d.J1.substitute(P);
    const Poly JP2 = d.J2.substitute(P);
    const Poly JP3 = d.J3.substitute(P);

    const Golden c0(rat_frac(1, 4));
    CHECK(JP1 == (d.I1.pow(3) + d.I2.scaled(Golden(3))).scaled(c0));

    const Poly b2 = d.I2 * (d.I1.pow(6).scaled(Golden(3)) -
                            (d.I1.pow(3) * d.I2).scaled(Golden(30)) -
                            (d.I1 * d.I3).scaled(Golden(60)) + d.I2.pow(2).scaled(Golden(5)));
    CHECK(JP2 == b2.scaled(-(c0 * c0 * c0)));

    struct TermSpec {
        long c;
        unsigned i, j, k;
    };
    const std::vector<TermSpec> bracket = {
        {15, 12, 1, 0},  {30, 10, 0, 1},  {-105, 9, 2, 0}, {300, 7, 1, 1},
        {-1140, 6, 3, 0}, {150, 4, 2, 1}, {-4545, 3, 4, 0}, {-6000, 2, 1, 2},
        {4200, 1, 3, 1}, {-357, 0, 5, 0}, {-4000, 0, 0, 3}};
    Poly b3 = Poly::zero(d.uring);
    for (const auto& t : bracket)
        b3 += (d.I1.pow(t.i) * d.I2.pow(t.j) * d.I3.pow(t.k)).scaled(Golden(t.c));
    CHECK(JP3 == b3.scaled(c0.pow(5) * Golden(rat_frac(-1, 10))));
}

TEST_CASE("product of the fifteen reflection forms is anti-invariant") {
    const auto& d = h3_data();
    CHECK(d.forms.size() == 15);
    CHECK(d.D.total_degree() == 15);
    for (const Mat& g : d.gens) {
        CHECK(act(d.D, g) == -d.D);
        CHECK(form_permutation_scalar(d.forms, g) == Golden(-1));
    }
}

TEST_CASE("conjugated form product at the map factors through invariants") {
    const auto& d = h3_data();
    Poly dstar_at_p = Poly::constant(d.uring, Golden(1));
    for (const Poly& f : d.forms) dstar_at_p = dstar_at_p * star_form_at(f, d.P);

    const Poly q0 = golden_poly("h3_disc_ibasis", d.iring);
    const Poly q0u = q0.substitute({d.I1, d.I2, d.I3});
    const auto q = dstar_at_p.divexact(q0u * d.D);
    REQUIRE(q.has_value());
    CHECK(*q == Poly::constant(d.uring, Golden(rat_frac(1, 32768))));
}

TEST_CASE("solver expresses invariants in the basic basis exactly") {
    const auto& d = h3_data();
    const std::vector<Poly> basis = {d.I1, d.I2, d.I3};
    Rng rng(0);

    const Poly jp1 = d.J1.substitute(d.P);
    const Poly expr = express_in_invariants(jp1, basis, d.iring, rng);
    CHECK(poly_str(expr) == "1/4*I1^3+3/4*I2");
    CHECK(expr.substitute({d.I1, d.I2, d.I3}) == jp1);

    // Degree with no candidate monomials.
    const Poly odd = Poly::variable(d.uring, 0).pow(3);
    CHECK_THROWS_AS(express_in_invariants(odd, basis, d.iring, rng), RankDeficient);

    // Right degree, but not an invariant: held-out validation must fail.
    const Poly fake = Poly::variable(d.uring, 0).pow(6);
    CHECK_THROWS_AS(express_in_invariants(fake, basis, d.iring, rng), Inconsistent);
}

TEST_CASE("degree-4 basic invariants are group-invariant") {
    const auto& d = h4_data();
    CHECK(d.Z2.total_degree() == 2);
    CHECK(d.Z12.total_degree() == 12);
    CHECK(d.Z20.total_degree() == 20);
    CHECK(d.Z30.total_degree() == 30);
    for (const Mat& g : d.gens)
        for (int j : {2, 12, 20, 30}) CHECK(act(d.Z(j), g) == d.Z(j));
    for (const Mat& g : d.gens_star) CHECK(act(d.Z12s, g) == d.Z12s);
}

TEST_CASE("degree-10 invariant convention is decided by invariance") {
    const auto& d = h4_data();
    const RingPtr tring = make_ring({"h2", "h6", "h10", "u4"});
    const Poly u4 = Poly::variable(d.uring, 3);
    const Poly z12_alt = golden_poly("z12_def", tring)
                             .substitute({d.h2, d.h6, h10_alternative(d), u4});
    const Mat& s4 = d.gens[3];
    CHECK(act(d.Z12, s4) == d.Z12);
    CHECK(act(z12_alt, s4) != z12_alt);
}

TEST_CASE("degree-4 equivariant map intertwines the two actions") {
    const auto& d = h4_data();
    const std::vector<Golden> e4 = {Golden(0), Golden(0), Golden(0), Golden(1)};
    CHECK(d.P[3].eval(e4) == Golden(rat_frac(1, 84)));
    for (std::size_t j = 0; j < d.gens.size(); ++j)
        check_intertwining(d.P, d.gens[j], d.gens_star[j]);
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        const auto w = random_word(rng, 4);
        check_intertwining(d.P, word_matrix(d.gens, w), word_matrix(d.gens_star, w));
    }
}

TEST_CASE("degree-4 jacobian determinant factors through the invariants") {
    const auto& d = h4_data();
    const Poly det = poly_det(jacobian(d.P));
    const Poly target = d.Z2.pow(2) * d.Z20 - d.Z12.pow(2);
    const auto q = det.divexact(target);
    REQUIRE(q.has_value());
    CHECK(*q == Poly::constant(d.uring, Golden(rat_frac(-1, 9216))));
}

TEST_CASE("sixty reflection forms: anti-invariance and polynomial quotients") {
    const auto& d = h4_data();
    CHECK(d.forms.size() == 60);
    for (const Mat& g : d.gens)
        CHECK(form_permutation_scalar(d.forms, g) == Golden(-1));
    for (const Poly& f : d.forms) {
        const auto q = star_form_at(f, d.P).divexact(f);
        REQUIRE(q.has_value());
        CHECK(q->total_degree() == 6);
    }
}

TEST_CASE("composed conjugate invariants match their printed expansions") {
    const auto& d = h4_data();
    const std::vector<Poly> basis = {d.Z2, d.Z12, d.Z20, d.Z30};
    Rng rng(2);

    const Poly y2u = d.Z2s.substitute(d.P);
    const Poly y2 = express_in_invariants(y2u, basis, d.zring, rng);
    CHECK(poly_str(y2) == poly_str(golden_poly("y2", d.zring)));
    CHECK(y2.substitute(basis) == y2u);

    const Poly golden_y12 = golden_poly("y12", d.zring);
    // Structured spot check on one mixed coefficient.
    const Rat expect = rat_pow_long(2, 3) * rat_pow_long(3, 12) * rat_pow_long(5, 4) *
                       rat_pow_long(7, 1) /
                       (rat_pow_long(2, 32) * rat_pow_long(3, 14) * rat_pow_long(5, 2) *
                        rat_pow_long(7, 12));
    CHECK(golden_y12.coeff({0, 2, 0, 2}) == Golden(expect));

    // Express the degree-84 composition from evaluations alone; the exact
    // expansion and round-trip are covered by the verification suites.
    auto y12_eval = [&](const std::vector<Golden>& pt) {
        std::vector<Golden> v;
        for (const Poly& p : d.P) v.push_back(p.eval(pt));
        return d.Z12s.eval(v);
    };
    const Poly y12 = express_in_invariants(y12_eval, 84, basis, d.zring, rng);
    CHECK(poly_str(y12) == poly_str(golden_y12));
}
