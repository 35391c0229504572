#pragma once
// Invariant theory of the degree-3 and degree-4 reflection groups: basic
// invariants and their Galois conjugates, equivariant polynomial maps, the
// anti-invariant product of reflection forms, and an exact solver expressing
// an invariant polynomial in a basic-invariant basis.

#include "coxinv/coxeter.hpp"
#include "coxinv/poly.hpp"
#include "coxinv/rng.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coxinv {

// ---------- degree 3 ----------

struct H3Data {
    RingPtr uring;             // u1,u2,u3
    RingPtr iring;             // I1,I2,I3 with weights 2,6,10
    std::vector<Mat> gens;     // sigma(s_1..s_3)
    std::vector<Mat> gens_star;
    Poly I1, I2, I3;           // basic invariants, degrees 2, 6, 10
    Poly J1, J2, J3;           // Galois conjugates (coefficientwise)
    std::vector<Poly> P;       // equivariant cubics P1..P3
    std::vector<Poly> forms;   // the 15 reflection forms (reference order)
    Poly D;                    // product of the 15 forms, degree 15
};

const H3Data& h3_data();

// ---------- degree 4 ----------

struct H4Data {
    RingPtr uring;             // u1..u4
    RingPtr zring;             // Z2,Z12,Z20,Z30 with weights 2,12,20,30
    std::vector<Mat> gens;
    std::vector<Mat> gens_star;
    Poly h2, h6, h10;          // degree-3 invariants in the first three slots
    Poly Z2, Z12, Z20, Z30;    // basic invariants, degrees 2,12,20,30
    Poly Z2s, Z12s, Z20s, Z30s;  // Galois conjugates
    std::vector<Poly> P;       // equivariant degree-7 maps P1..P4
    std::vector<Poly> forms;   // 60 reflection forms (reference order)
    const Poly& Z(int j) const;   // j in {2,12,20,30}
    const Poly& Zs(int j) const;
};

const H4Data& h4_data();

// The degree-10 invariant convention: the variant entering the Z templates
// has no eps1^5 term; the alternative differs by -(1/25) eps1^5.  Exactly one
// of them makes Z12 invariant under the fourth generator (checked in tests).
Poly h10_alternative(const H4Data& d);

// ---------- shared helpers ----------

// Determinant of a small matrix of polynomials (cofactor expansion).
Poly poly_det(const std::vector<std::vector<Poly>>& m);

// Jacobian matrix d maps[i] / d var j.
std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& maps);

// phi composed with the group element: for each form phi_j the image
// phi_j(u*M) is c * phi_{pi(j)}; returns the product of the scalars c over
// all forms (= determinant character when the forms are the mirrors of M's
// group).  Throws if some image is not proportional to a listed form.
Golden form_permutation_scalar(const std::vector<Poly>& forms, const Mat& m);

// Apply the linear form's conjugated coefficients to the map components:
// sum_i conj(coeff_i) * maps[i].
Poly star_form_at(const Poly& form, const std::vector<Poly>& maps);

// ---------- express-in-invariants solver ----------

struct RankDeficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Write `target` (homogeneous in the source ring) as a polynomial in the
// given basis: enumerate all basis-ring monomials whose weighted degree
// (ring weights = basis degrees) matches deg(target), solve for their
// coefficients by exact linear algebra on evaluations at seeded random
// integer points in [-9, 9], and validate on 5 held-out points.  The basis
// generates a polynomial ring, so the representation is unique;
// RankDeficient / Inconsistent are errors, not fallbacks.
Poly express_in_invariants(const Poly& target, const std::vector<Poly>& basis,
                           const RingPtr& basis_ring, Rng& rng);

// Same, with the target given as an evaluation procedure plus its degree.
// Lets callers express a composition without expanding it first.
Poly express_in_invariants(const std::function<Golden(const std::vector<Golden>&)>& target_eval,
                           int target_degree, const std::vector<Poly>& basis,
                           const RingPtr& basis_ring, Rng& rng);

}  // namespace coxinv
