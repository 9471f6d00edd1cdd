#pragma once

// Deterministic factorization of univariate polynomials over Q at desk scale
// (squarefree split by Yun, then Berlekamp mod a small prime, Hensel lifting,
// and subset recombination).

#include <vector>

#include "polar/ratpoly.hpp"

namespace polar {

struct QFactor {
    RatPoly factor; // monic irreducible
    int multiplicity = 1;
};

// Monic squarefree decomposition (Yun); factors pairwise coprime.
std::vector<QFactor> squarefree_decompose_q(const RatPoly& p);

// Full irreducible factorization; factors monic, sorted deterministically.
// The constant in front (p / prod factor^mult) is dropped.
std::vector<QFactor> factor_q(const RatPoly& p);

bool is_irreducible_q(const RatPoly& p);

} // namespace polar
