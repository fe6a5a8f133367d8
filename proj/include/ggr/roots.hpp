#pragma once

#include <complex>
#include <vector>

#include "ggr/ratpoly.hpp"

namespace ggr {

struct RootMult {
    std::complex<double> value;
    int multiplicity = 1;
};

// All complex roots of P with multiplicities (summing to deg P). Roots are
// located per square-free factor via companion-matrix eigenvalues and
// polished by Newton iteration; clusters closer than tol*max(1,|root|) are
// merged. Multiplicities come from the exact gcd(P, P') square-free
// decomposition. Roots are sorted by (re, im).
std::vector<RootMult> poly_roots(const RatPoly& p, double tol = 1e-8);

// Exact divisibility over Q: true iff d | p with zero remainder.
bool divides(const RatPoly& d, const RatPoly& p);

}  // namespace ggr
