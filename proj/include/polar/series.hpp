#pragma once

// Truncated power series over AlgNum: s[0] + s[1] t + ... + s[n-1] t^{n-1}.
// Callers track Laurent valuation shifts themselves.

#include <vector>

#include "polar/poly.hpp"

namespace polar {

using Series = std::vector<AlgNum>;

Series series_from_poly(const Poly& p, size_t n);
Series series_add(const Series& a, const Series& b, size_t n);
Series series_mul(const Series& a, const Series& b, size_t n);
Series series_scale(const Series& a, const AlgNum& c);
// requires a[0] != 0
Series series_inv(const Series& a, size_t n);
// solves s^2 = a with s[0] = sqrt0 (caller supplies an exact square root of a[0])
Series series_sqrt(const Series& a, const AlgNum& sqrt0, size_t n);
// index of first nonzero coefficient, or -1 if all zero up to the truncation
int series_valuation(const Series& a);
Series series_derivative(const Series& a);
// composition a(p(t)) where p has p[0] == 0; truncated at n
Series series_compose_poly(const Poly& a, const Series& p, size_t n);

} // namespace polar
