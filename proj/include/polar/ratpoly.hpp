#pragma once

// Dense univariate polynomials over the rationals, coefficient vector c[0] + c[1] x + ...
// The zero polynomial is the empty vector; otherwise no trailing zero coefficients.
// This low layer backs number-field arithmetic and rational factorization; the
// general field-coefficient polynomial type lives in poly.hpp.

#include <utility>
#include <vector>

#include "polar/rat.hpp"

namespace polar {

using RatPoly = std::vector<Rat>;

void rp_trim(RatPoly& p);
int rp_deg(const RatPoly& p); // -1 for zero
bool rp_is_zero(const RatPoly& p);

RatPoly rp_add(const RatPoly& a, const RatPoly& b);
RatPoly rp_sub(const RatPoly& a, const RatPoly& b);
RatPoly rp_neg(const RatPoly& a);
RatPoly rp_mul(const RatPoly& a, const RatPoly& b);
RatPoly rp_scale(const RatPoly& a, const Rat& s);
RatPoly rp_derivative(const RatPoly& a);
Rat rp_eval(const RatPoly& a, const Rat& x);

// Quotient/remainder; requires b nonzero.
std::pair<RatPoly, RatPoly> rp_divrem(const RatPoly& a, const RatPoly& b);
RatPoly rp_mod(const RatPoly& a, const RatPoly& b);

// Monic gcd.
RatPoly rp_gcd(RatPoly a, RatPoly b);
// g = gcd(a,b) monic plus s,t with s*a + t*b = g.
RatPoly rp_ext_gcd(const RatPoly& a, const RatPoly& b, RatPoly& s, RatPoly& t);

RatPoly rp_monic(const RatPoly& a);
bool rp_eq(const RatPoly& a, const RatPoly& b);

std::string rp_to_string(const RatPoly& p, const std::string& var = "x");

} // namespace polar
