#pragma once
// Canonical text format for polynomials, the contract for all reference data
// files and emitted objects.
//
//   file   := "ring " name ("," name)* NL  (("poly "|"form ") expr NL)+
//   expr   := "0" | term (("+"|"-") term)*          (leading "-" allowed)
//   term   := coefficient and/or monomial:
//     rational c:   sign pulled out; magnitude "n[/d]"; "*" before a nonempty
//                   monomial; magnitude 1 elided when the monomial is nonempty
//     pure sqrt5 multiple c = b*r5: sign of b pulled out; "r5" or "n[/d]*r5"
//     mixed c = a + b*r5 (both nonzero): "(a{+|-}|b|*r5)" with no elision
//                   inside the parentheses; the term is always joined with "+"
//   mono   := var["^" exp] ("*" var["^" exp])* in ring order; exponent 1
//             elided; negative exponents as "w0^-3"
//   order  := graded lex descending (total degree, then exponent vector)
//
// The interchange type RawPoly allows negative exponents so Laurent data can
// be parsed/emitted; Poly conversions require nonnegative exponents.
//
// JSON mirror of one polynomial:
//   {"ring":[names],"terms":[{"exp":[..],"a":"n[/d]","b":"n[/d]"}]}
// with terms in canonical order.

#include "coxinv/poly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace coxinv {

struct RawTerm {
    std::vector<int> exps;  // may be negative
    Golden c;
};

struct RawPoly {
    std::vector<std::string> names;
    std::vector<RawTerm> terms;
};

struct GoldenFileEntry {
    std::string kind;  // "poly" or "form"
    RawPoly poly;
};

struct GoldenFile {
    std::vector<std::string> names;
    std::vector<GoldenFileEntry> entries;
};

// Canonical expression text (sorts a copy of the terms; zero -> "0").
std::string canonical_expr(RawPoly raw);
std::string poly_str(const Poly& p);

// Full canonical file text.
std::string golden_file_str(const GoldenFile& f);

// Parsers; throw std::invalid_argument on malformed input.
RawPoly parse_expr(const std::vector<std::string>& names, const std::string& expr);
GoldenFile parse_golden_file(const std::string& text);

// RawPoly <-> Poly (ring names must match; conversion to Poly rejects
// negative exponents).
Poly raw_to_poly(const RingPtr& ring, const RawPoly& raw);
RawPoly poly_to_raw(const Poly& p);

// JSON mirror (serialized, canonical term order, no whitespace).
std::string poly_json(const RawPoly& raw);
std::string poly_json(const Poly& p);

}  // namespace coxinv
