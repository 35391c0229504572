// Reflection groups: generator relations, closure sizes, reflection counts,
// root forms against the reference lists, star representation, and the
// character separation between the plain and star representations.

#include <doctest.h>

#include "coxinv/coxeter.hpp"
#include "coxinv/data.hpp"
#include "coxinv/rng.hpp"

#include <algorithm>
#include <set>

using namespace coxinv;

namespace {

std::multiset<std::string> form_keys(const std::vector<Poly>& forms) {
    std::multiset<std::string> keys;
    for (const auto& f : forms) keys.insert(poly_str(normalize_form(f)));
    return keys;
}

std::vector<Poly> reference_forms(const std::string& name, const RingPtr& ring) {
    GoldenFile gf = golden_file(name);
    std::vector<Poly> out;
    for (const auto& e : gf.entries) {
        REQUIRE(e.kind == "form");
        out.push_back(raw_to_poly(ring, e.poly));
    }
    return out;
}

}  // namespace

TEST_CASE("generator matrices: shape and involutivity") {
    auto g3 = group_generators(GroupType::H3);
    REQUIRE(g3.size() == 3);
    for (const auto& g : g3) {
        CHECK((g * g).is_identity());
        CHECK(g.is_orthogonal());
        CHECK(g.det() == Golden(-1));
    }
    auto g4 = group_generators(GroupType::H4);
    REQUIRE(g4.size() == 4);
    for (const auto& g : g4) {
        CHECK((g * g).is_identity());
        CHECK(g.is_orthogonal());
        CHECK(g.det() == Golden(-1));
    }
    // top-left entry of the degree-4 extra generator is 1
    CHECK(g4[3].at(0, 0) == Golden(1));
    // star of s2 has top-left entry (1+sqrt5)/4... namely conj of a'/2 = a/2
    auto g3s = group_generators(GroupType::H3, true);
    CHECK(g3s[1].at(0, 0) == Golden(rat_frac(1, 2)) * Golden::ratio());
}

TEST_CASE("Coxeter relations hold; corrupted generators fail") {
    for (auto type : {GroupType::H3, GroupType::H4}) {
        for (bool star : {false, true}) {
            auto gens = group_generators(type, star);
            std::string why;
            CHECK_MESSAGE(check_relations(gens, type, &why), why);
        }
    }
    // Corruption: replace the last generator by the identity.  Involutivity
    // still holds but the braid relation with its neighbour fails.
    auto gens = group_generators(GroupType::H4);
    gens[3] = Mat::identity(4);
    CHECK((gens[3] * gens[3]).is_identity());
    std::string why;
    CHECK(!check_relations(gens, GroupType::H4, &why));
    CHECK(why == "(s3*s4)^3 != 1");
    // Corruption: flip the sign of one entry (an involution no more).
    auto gens2 = group_generators(GroupType::H4);
    gens2[3].at(2, 2) = -gens2[3].at(2, 2);
    CHECK(!(gens2[3] * gens2[3]).is_identity());
}

TEST_CASE("degree-3 group: order 120, 15 reflections, root forms") {
    auto gens = group_generators(GroupType::H3);
    auto elements = enumerate_group(gens);
    CHECK(elements.size() == 120);
    for (const auto& m : elements) {
        CHECK(m.is_orthogonal());
        Golden d = m.det();
        CHECK((d == Golden(1) || d == Golden(-1)));
    }
    auto refl = reflections_in(elements);
    CHECK(refl.size() == 15);

    auto ring = make_ring({"u1", "u2", "u3"});
    std::vector<Poly> forms;
    for (const auto& m : refl) forms.push_back(root_form(reflection_root(m), ring));
    CHECK(form_keys(forms) == form_keys(reference_forms("h3_forms", ring)));
}

TEST_CASE("degree-4 group: order 14400, 60 reflections, root forms") {
    auto gens = group_generators(GroupType::H4);
    auto elements = enumerate_group(gens);
    CHECK(elements.size() == 14400);
    auto refl = reflections_in(elements);
    CHECK(refl.size() == 60);

    auto ring = make_ring({"u1", "u2", "u3", "u4"});
    std::vector<Poly> forms;
    for (const auto& m : refl) forms.push_back(root_form(reflection_root(m), ring));
    CHECK(form_keys(forms) == form_keys(reference_forms("h4_forms", ring)));
}

TEST_CASE("star closure is the entrywise conjugate of the closure") {
    auto gens = group_generators(GroupType::H3);
    auto gens_star = group_generators(GroupType::H3, true);
    auto g = enumerate_group(gens);
    auto gs = enumerate_group(gens_star);
    REQUIRE(g.size() == gs.size());
    std::multiset<std::string> a, b;
    for (const auto& m : g) a.insert(m.conj().key());
    for (const auto& m : gs) b.insert(m.key());
    CHECK(a == b);
}

TEST_CASE("plain and star representations have different characters") {
    for (auto type : {GroupType::H3, GroupType::H4}) {
        auto gens = group_generators(type);
        auto gens_star = group_generators(type, true);
        // On a single generator the traces agree (they are rational), so a
        // one-letter word cannot separate the representations.
        CHECK(gens[0].trace() == gens_star[0].trace());
        // The word s1 s2 separates them: its trace involves sqrt5.
        Mat w = gens[0] * gens[1];
        Mat ws = gens_star[0] * gens_star[1];
        CHECK(w.trace() != ws.trace());
        CHECK(w.trace() == ws.trace().conj());
    }
}

TEST_CASE("group action on polynomials is a right action") {
    auto ring = make_ring({"u1", "u2", "u3"});
    auto gens = group_generators(GroupType::H3);
    Rng rng(11);
    Poly p(ring);
    for (int t = 0; t < 6; ++t) {
        std::vector<int> e = {static_cast<int>(rng.uniform(0, 3)),
                              static_cast<int>(rng.uniform(0, 3)),
                              static_cast<int>(rng.uniform(0, 3))};
        p.add_term(key_pack(e), Golden(Rat(rng.uniform(-5, 5))));
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // (A*B) acts as "first B on the function, then A":
            // act(p, A*B)(u) = p(u*A*B) = act(act(p, B), A)(u)
            Poly lhs = act(p, gens[i] * gens[j]);
            Poly rhs = act(act(p, gens[j]), gens[i]);
            CHECK(lhs == rhs);
        }
}
