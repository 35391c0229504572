// Algebra kernel: field arithmetic, polynomial ring laws, canonical
// formatting (round-trips of every embedded data file), localization,
// modular reduction, and the PRNG contract.

#include <doctest.h>

#include "coxinv/data.hpp"
#include "coxinv/format.hpp"
#include "coxinv/golden.hpp"
#include "coxinv/locpoly.hpp"
#include "coxinv/matrix.hpp"
#include "coxinv/modular.hpp"
#include "coxinv/poly.hpp"
#include "coxinv/rng.hpp"

#include <set>
#include <sstream>

using namespace coxinv;

namespace {

Golden rnd_golden(Rng& rng) {
    return Golden(rat_frac(rng.uniform(-9, 9), rng.uniform(1, 5)),
                  rat_frac(rng.uniform(-9, 9), rng.uniform(1, 5)));
}

Poly rnd_poly(Rng& rng, const RingPtr& ring, int maxdeg, int nterms) {
    Poly p(ring);
    for (int t = 0; t < nterms; ++t) {
        std::vector<int> e(ring->size());
        for (auto& x : e) x = static_cast<int>(rng.uniform(0, maxdeg));
        p.add_term(key_pack(e), rnd_golden(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("field arithmetic in Q(sqrt5)") {
    Golden r5 = Golden::sqrt5();
    CHECK(r5 * r5 == Golden(5));
    Golden phi = Golden::ratio(), psi = Golden::ratio_conj();
    CHECK(phi * psi == Golden(-1));
    CHECK(phi + psi == Golden(1));
    CHECK(phi * phi == phi + Golden(1));
    CHECK(phi.conj() == psi);
    CHECK((phi * phi * psi).conj() == psi * psi * phi);

    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        Golden x = rnd_golden(rng), y = rnd_golden(rng);
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK(x.conj().conj() == x);
        if (!x.is_zero()) {
            CHECK(x * x.inv() == Golden(1));
            CHECK(Golden(x.norm()) == x * x.conj());
        }
    }
}

TEST_CASE("field element text round-trip") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Golden x = rnd_golden(rng);
        CHECK(golden_parse(x.str()) == x);
    }
    CHECK(golden_parse("1/2+1/2*r5") == Golden::ratio());
    CHECK(golden_parse("-1/2+1/2*r5") == Golden(rat_frac(-1, 2), rat_frac(1, 2)));
    CHECK(golden_parse("r5") == Golden::sqrt5());
    CHECK(golden_parse("-r5") == -Golden::sqrt5());
    CHECK(golden_parse("7") == Golden(7));
    CHECK(Golden(0).str() == "0");
}

TEST_CASE("polynomial ring laws") {
    auto ring = make_ring({"x", "y", "z"});
    Rng rng(1);
    for (int i = 0; i < 20; ++i) {
        Poly f = rnd_poly(rng, ring, 4, 5), g = rnd_poly(rng, ring, 4, 5),
             h = rnd_poly(rng, ring, 4, 5);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == Poly::zero(ring));
        CHECK((f * g).conj() == f.conj() * g.conj());
        CHECK((f + g).conj() == f.conj() + g.conj());
        // Leibniz rule
        for (int v = 0; v < 3; ++v)
            CHECK((f * g).diff(v) == f.diff(v) * g + f * g.diff(v));
        // divexact(f*g, g) == f
        if (!g.is_zero()) {
            auto q = (f * g).divexact(g);
            REQUIRE(q.has_value());
            CHECK(*q == f);
        }
    }
}

TEST_CASE("exact division failure reports the obstructing term") {
    auto ring = make_ring({"x", "y"});
    Poly x = Poly::variable(ring, 0), y = Poly::variable(ring, 1);
    Poly f = x * x + y;  // not divisible by x
    std::string obs;
    auto q = f.divexact(x, &obs);
    CHECK(!q.has_value());
    CHECK(obs == "y");
}

TEST_CASE("substitution is a ring homomorphism; chain rule holds") {
    auto src = make_ring({"x", "y"});
    auto dst = make_ring({"s", "t"});
    Rng rng(2);
    for (int i = 0; i < 10; ++i) {
        Poly f = rnd_poly(rng, src, 3, 4), g = rnd_poly(rng, src, 3, 4);
        std::vector<Poly> im = {rnd_poly(rng, dst, 2, 3), rnd_poly(rng, dst, 2, 3)};
        CHECK((f + g).substitute(im) == f.substitute(im) + g.substitute(im));
        CHECK((f * g).substitute(im) == f.substitute(im) * g.substitute(im));
        // chain rule: d/ds f(im) = sum_v (df/dv)(im) * d im_v/ds
        for (int s = 0; s < 2; ++s) {
            Poly lhs = f.substitute(im).diff(s);
            Poly rhs = Poly::zero(dst);
            for (int v = 0; v < 2; ++v)
                rhs += f.diff(v).substitute(im) * im[static_cast<std::size_t>(v)].diff(s);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("evaluation agrees with substitution by constants") {
    auto ring = make_ring({"x", "y", "z"});
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
        Poly f = rnd_poly(rng, ring, 5, 6);
        std::vector<Golden> pt = {rnd_golden(rng), rnd_golden(rng), rnd_golden(rng)};
        std::vector<Poly> consts;
        for (const auto& v : pt) consts.push_back(Poly::constant(ring, v));
        CHECK(f.substitute(consts) == Poly::constant(ring, f.eval(pt)));
    }
}

TEST_CASE("weighted degree") {
    auto ring = make_ring({"x1", "x2", "x3"},
                          std::vector<Rat>{rat_frac(1, 5), rat_frac(3, 5), Rat(1)});
    Poly f = Poly::from_terms(ring, {{{11, 0, 0}, Golden(1)},
                                     {{5, 2, 0}, Golden(2)},
                                     {{1, 0, 2}, Golden(3)}});
    auto wd = f.weighted_degree();
    REQUIRE(wd.kind == WeightedDegree::Value);
    CHECK(wd.value == rat_frac(11, 5));
    Poly g = f + Poly::constant(ring, Golden(1));
    CHECK(g.weighted_degree().kind == WeightedDegree::NotHomogeneous);
    CHECK(Poly::zero(ring).weighted_degree().kind == WeightedDegree::AnyDegree);
}

TEST_CASE("canonical format round-trips every embedded data file") {
    auto names = golden_names();
    CHECK(names.size() == 20);
    for (const auto& nm : names) {
        const std::string& text = golden_text(nm);
        GoldenFile f = parse_golden_file(text);
        CHECK(golden_file_str(f) == text);
    }
}

TEST_CASE("canonical format examples") {
    auto ring = make_ring({"u1", "u2", "u3"});
    Poly p = Poly::from_terms(
        ring, {{{1, 0, 0}, Golden(1)},
               {{0, 1, 0}, Golden(rat_frac(1, 2), rat_frac(1, 2))},
               {{0, 0, 1}, Golden(rat_frac(1, 2), rat_frac(-1, 2))}});
    CHECK(poly_str(p) == "u1+(1/2+1/2*r5)*u2+(1/2-1/2*r5)*u3");
    Poly q = Poly::from_terms(ring, {{{2, 0, 0}, Golden(-1)},
                                     {{0, 1, 1}, Golden(Rat(0), rat_frac(-3, 4))}});
    CHECK(poly_str(q) == "-u1^2-3/4*r5*u2*u3");
    CHECK(poly_str(Poly::zero(ring)) == "0");
    // graded lex descending: total degree first, then exponent vector
    Poly r = Poly::from_terms(ring, {{{1, 1, 0}, Golden(1)},
                                     {{0, 0, 3}, Golden(1)},
                                     {{2, 0, 0}, Golden(1)},
                                     {{0, 0, 1}, Golden(5)}});
    CHECK(poly_str(r) == "u3^3+u1^2+u1*u2+5*u3");
}

TEST_CASE("JSON mirror shape") {
    auto ring = make_ring({"x", "y"});
    Poly p = Poly::from_terms(ring, {{{1, 2}, Golden(rat_frac(3, 4), Rat(1))}});
    CHECK(poly_json(p) ==
          R"({"ring":["x","y"],"terms":[{"a":"3/4","b":"1","exp":[1,2]}]})");
}

TEST_CASE("Laurent data needs a localized carrier") {
    GoldenFile f = golden_file("f_h4_9");
    bool has_negative = false;
    for (const auto& t : f.entries[0].poly.terms)
        for (int e : t.exps) has_negative |= e < 0;
    CHECK(has_negative);
    auto ring = make_ring(f.names);
    CHECK_THROWS(raw_to_poly(ring, f.entries[0].poly));
}

TEST_CASE("localized arithmetic and normalization") {
    auto ring = make_ring({"x", "w"});
    Poly x = Poly::variable(ring, 0), w = Poly::variable(ring, 1);
    auto ctx = make_loc_ctx(ring, {w});
    LocPoly a(ctx, x * w + w * w, {1});       // (x w + w^2)/w = x + w
    LocPoly b = LocPoly::from_poly(ctx, x + w);
    CHECK(a == b);
    LocPoly n = a.normalized();
    CHECK(n.denom_exps()[0] == 0);
    CHECK(n.num() == x + w);
    // quotient rule: d/dw (x/w) = -x/w^2
    LocPoly q(ctx, x, {1});
    LocPoly dq = q.diff(1).normalized();
    CHECK(dq == LocPoly(ctx, -x, {2}));
    // eval
    std::vector<Golden> pt = {Golden(3), Golden(2)};
    CHECK(q.eval(pt) == Golden(rat_frac(3, 2)));
    CHECK_THROWS(q.eval({Golden(3), Golden(0)}));
}

TEST_CASE("modular reduction is a ring homomorphism") {
    Rng rng(5);
    for (int pi = 0; pi < ModCtx::kNumPrimes; ++pi) {
        std::uint64_t p = ModCtx::kPrimes[pi];
        std::uint64_t r = ModCtx::kSqrt5[pi];
        CHECK(mulmod(r, r, p) == 5);
        for (int i = 0; i < 30; ++i) {
            Golden x = rnd_golden(rng), y = rnd_golden(rng);
            CHECK(golden_mod(x + y, pi) ==
                  addmod(golden_mod(x, pi), golden_mod(y, pi), p));
            CHECK(golden_mod(x * y, pi) ==
                  mulmod(golden_mod(x, pi), golden_mod(y, pi), p));
        }
    }
}

TEST_CASE("polynomial evaluation commutes with modular reduction") {
    auto ring = make_ring({"x", "y", "z"});
    Rng rng(6);
    for (int i = 0; i < 5; ++i) {
        Poly f = rnd_poly(rng, ring, 4, 8);
        for (int pi = 0; pi < ModCtx::kNumPrimes; ++pi) {
            PolyMod fm(f, pi);
            std::vector<Golden> pt;
            std::vector<std::uint64_t> ptm;
            for (int v = 0; v < 3; ++v) {
                long c = rng.uniform(-9, 9);
                pt.push_back(Golden(Rat(c)));
                ptm.push_back(rat_mod(Rat(c), ModCtx::kPrimes[pi]));
            }
            CHECK(fm.eval(ptm) == golden_mod(f.eval(pt), pi));
        }
    }
}

TEST_CASE("PRNG determinism and range") {
    Rng a(0), b(0);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(0);
    std::set<long> seen;
    for (int i = 0; i < 1000; ++i) {
        long v = c.uniform(-9, 9);
        CHECK(v >= -9);
        CHECK(v <= 9);
        seen.insert(v);
    }
    CHECK(seen.size() == 19);  // all values hit
    // fixed spot value so the documented constants cannot drift silently
    Rng d(0);
    CHECK(d.next_u64() == 8916199331640804048ULL);
}

TEST_CASE("matrix determinant, rank, orthogonality") {
    Mat m(2);
    m.at(0, 0) = Golden(1);
    m.at(0, 1) = Golden(2);
    m.at(1, 0) = Golden(3);
    m.at(1, 1) = Golden(4);
    CHECK(m.det() == Golden(-2));
    CHECK(m.rank() == 2);
    Mat s(2);
    s.at(0, 0) = Golden(1);
    s.at(0, 1) = Golden(2);
    s.at(1, 0) = Golden(2);
    s.at(1, 1) = Golden(4);
    CHECK(s.det() == Golden(0));
    CHECK(s.rank() == 1);
    CHECK(Mat::identity(3).is_orthogonal());
}
