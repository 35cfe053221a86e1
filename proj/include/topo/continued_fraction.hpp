#pragma once

#include "topo/ints.hpp"

#include <stdexcept>
#include <vector>

namespace topo {

// Negative continued fraction [a1, a2, ...] with value a1 - 1/(a2 - 1/(...)).
struct ContinuedFraction {
    std::vector<Int> coefficients;
};

struct MalformedContinuedFraction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact value of the continued fraction; throws MalformedContinuedFraction if
// a division by zero arises during evaluation.
Rat cf_value(const ContinuedFraction &cf);

// Expansion of -p/q with all coefficients <= -2, for 0 < q < p, gcd(p,q) = 1.
// Sign convention: "the expansion of p/q" evaluates to -p/q, matching the
// -p/q surgery convention for the lens space L(p,q).
ContinuedFraction neg_cf_expand(const Int &p, const Int &q);

}  // namespace topo
