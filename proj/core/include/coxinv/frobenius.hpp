#pragma once
// Flat-coordinate potentials and their caustic discriminants.
//
// For a potential F over n weighted flat coordinates, the pairing matrix is
// C[i][j] = D_i D_{n-1-j} F (anti-diagonal index pairing, 0-based), where
// D_i is the total derivative along the i-th coordinate: a plain partial for
// the two polynomial potentials, and a derivative through the defining
// constraint for the two algebraic ones.  Scaling entrywise by the weighted
// Euler operator (1/h) sum_k d_k xi_k D_k (degree list d, top degree h)
// gives the matrix T whose determinant is the discriminant recorded in the
// reference data, up to the per-case display scale noted below.

#include "coxinv/data.hpp"
#include "coxinv/locpoly.hpp"
#include "coxinv/poly.hpp"

#include <vector>

namespace coxinv {

// ---------------------------------------------------------------------
// Polynomial cases.
// ---------------------------------------------------------------------

// C[i][j] = d^2 F / (dx_i dx_{n-1-j}); plain partials.
std::vector<std::vector<Poly>> pairing_matrix(const Poly& potential);

// Weighted Euler operator (1/h) sum_k d_k x_k d/dx_k applied to p.
Poly euler_apply(const Poly& p, const std::vector<long>& degs, long h);

struct DiscCase {
    Poly potential;                    // reference-file transcription
    std::vector<std::vector<Poly>> C;  // pairing matrix
    std::vector<std::vector<Poly>> T;  // Euler-scaled pairing matrix
    Poly det_T;
    Poly det_C;  // unscaled determinant, kept for the negative check
};

// Degree-2/6/10 case over ring (x1,x2,x3) with weights (1/5,3/5,1);
// det T reproduces the reference discriminant exactly.
DiscCase h3_disc_case();

// Degree-2/12/20/30 case over ring (x1..x4) with weights (1/15,2/5,2/3,1);
// 2^4 * 3^28 * 5^14 * det T reproduces the reference discriminant.
DiscCase h4_disc_case();

// ---------------------------------------------------------------------
// Algebraic case over (t1,t2,t3,z): the constraint t2 + t1 z + z^4 = 0
// makes z a function of (t1,t2); derivatives go through the chain
// dz/dt1 = -z/W, dz/dt2 = -1/W with W = t1 + 4 z^3.
// ---------------------------------------------------------------------

struct H3PrimeData {
    RingPtr tring;  // (t1,t2,t3,z), weights (3/5,4/5,1,1/5)
    RingPtr pring;  // (t1,t3,z) after eliminating t2, weights (3/5,1,1/5)
    LocCtxPtr ctx;  // denominators: powers of W
    Poly potential;
    Poly w;  // t1 + 4 z^3
    std::vector<std::vector<LocPoly>> C;
    std::vector<std::vector<LocPoly>> T;
    LocPoly det_T;
    LocPoly det_C;
    Poly disc;        // 3000 * det T, t2 eliminated, in pring
    Poly det_c_elim;  // det C after the same elimination (negative check)
};

// Total derivative along flat coordinate i (0-based) of a localized value.
LocPoly h3prime_dtot(const H3PrimeData& d, const LocPoly& a, int i);

const H3PrimeData& h3prime_data();

// ---------------------------------------------------------------------
// Algebraic case over (t1,t2,t4,w0): the constraint
//   (3/20) t1^2 - t3 w0^2 + (1/5) t2 w0^4 + (8/5) t1 w0^7 + w0^14 = 0
// eliminates t3, and w0 depends on (t1,t2,t3) through it.  Localized
// values sit over the denominators {w0, Ewt} with Ewt = w0 * dE/dw0.
// ---------------------------------------------------------------------

struct H4NineData {
    RingPtr tring;  // (t1,t2,t4,w0), weights (14,20,30,2)
    RingPtr xring;  // (x1,x2,x3,x4), weights (2,12,20,30)
    RingPtr zring;  // (Z2,Z12,Z20,Z30), weights (2,12,20,30)
    LocCtxPtr ctx;  // denominators: powers of w0 and Ewt

    Poly ewt;            // w0 * dE/dw0 after eliminating t3
    LocPoly t3;          // the eliminated coordinate as a function of the rest
    LocPoly chain[4];    // dw0/dt_i as localized values (index 3 is zero)
    LocPoly potential;   // reference transcription with t3 eliminated
    std::vector<std::vector<LocPoly>> C;
    std::vector<std::vector<LocPoly>> T;
    LocPoly det_T;
    LocPoly det_C;
    // 72*10^6 * w0^10 * det T; psi_is_polynomial records whether the
    // denominators cleared (they must — a residue is a suite failure).
    Poly psi_tilde;
    bool psi_is_polynomial = false;

    std::vector<Poly> map_t_x;     // t(x), images in xring
    std::vector<Poly> map_t_z;     // t(Z), images in zring
    std::vector<Poly> map_x_z;     // x(Z), images in zring
    std::vector<LocPoly> map_z_t;  // Z(t), images localized at w0
};

// Total derivative along flat coordinate i (0-based; i==3 is d/dt4).
LocPoly h4_9_dtot(const H4NineData& d, const LocPoly& a, int i);

const H4NineData& h4_9_data();

// ---------------------------------------------------------------------
// Shared helpers.
// ---------------------------------------------------------------------

// Determinant of a square LocPoly matrix by cofactor expansion.
LocPoly loc_det(const std::vector<std::vector<LocPoly>>& m);

// True when every term of p has the same weighted degree `want` (ring
// weights; the zero polynomial passes).
bool is_weighted_homogeneous(const Poly& p, const Rat& want);

}  // namespace coxinv
