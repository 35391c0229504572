#pragma once
// Localized polynomials: elements num / prod(basis[i]^k[i]) of a polynomial
// ring localized at a declared finite set of denominators.  Used for
// implicit-function pipelines where derivatives introduce inverse powers of a
// constraint (e.g. 1/w0 and one implicit-equation factor) and for symbolic
// scale parameters with declared inverses (1/m).

#include "coxinv/poly.hpp"

#include <memory>
#include <vector>

namespace coxinv {

struct LocCtx {
    RingPtr ring;
    std::vector<Poly> basis;  // nonzero non-unit denominators
};

using LocCtxPtr = std::shared_ptr<const LocCtx>;

LocCtxPtr make_loc_ctx(RingPtr ring, std::vector<Poly> basis);

class LocPoly {
  public:
    LocPoly() = default;
    LocPoly(LocCtxPtr ctx, Poly num, std::vector<int> k);
    static LocPoly from_poly(LocCtxPtr ctx, Poly p);
    static LocPoly zero(LocCtxPtr ctx);

    const LocCtxPtr& ctx() const { return ctx_; }
    const Poly& num() const { return num_; }
    const std::vector<int>& denom_exps() const { return k_; }
    bool is_zero() const { return num_.is_zero(); }

    LocPoly operator-() const;
    LocPoly operator+(const LocPoly& o) const;
    LocPoly operator-(const LocPoly& o) const;
    LocPoly operator*(const LocPoly& o) const;
    LocPoly scaled(const Golden& c) const;
    LocPoly mul_poly(const Poly& p) const;
    LocPoly pow(unsigned e) const;

    // Divide the numerator exactly by basis[i]^e (raising no denominator);
    // throws std::domain_error if the division is not exact.
    LocPoly div_basis_exact(std::size_t i, int e) const;

    // Remove basis factors from the numerator until no k[i] can shrink.
    // Normalized values have componentwise-minimal denominator exponents,
    // which makes representation unique for coprime basis elements.
    LocPoly normalized() const;

    // Derivative with respect to one ring variable (quotient rule over the
    // full basis; every denominator exponent grows by one — normalize to
    // shrink them back).
    LocPoly diff(int var) const;

    Golden eval(const std::vector<Golden>& point) const;  // throws on zero denom

    // Equality of represented values (cross-multiplied; representation
    // independent).
    bool operator==(const LocPoly& o) const;
    bool operator!=(const LocPoly& o) const { return !(*this == o); }

  private:
    LocCtxPtr ctx_;
    Poly num_;
    std::vector<int> k_;
};

// Substitute variable i of p by images[i] (multivariate Horner over localized
// values); all images must share one localization context.  The result is
// normalized.
LocPoly loc_substitute(const Poly& p, const std::vector<LocPoly>& images);

}  // namespace coxinv
