#pragma once

#include "convexdiff/convex_set.hpp"
#include "convexdiff/rational.hpp"

#include <vector>

namespace convexdiff {

// The extremal set of size 2m whose difference d is represented m times,
// together with the parameters that produced it.
struct ConstructionResult {
    ConvexSet set;
    Rational rich_difference; // d = a_{m+1}
    Rational delta;
    unsigned long m = 0;
};

// Largest admissible perturbation is 1/(m-2) (exclusive) for m >= 3; this
// default sits strictly inside with margin and keeps denominators small:
// 1/(2(m-1)) for m >= 3, and 1 for m <= 2 where no upper constraint exists.
Rational default_delta(unsigned long m);

// Builds a_k = (k-1) + delta*(k-2)(k-1)/2 for 1 <= k <= m+1, sets
// d := a_{m+1}, then extends by a_{m+1+i} := a_{1+2i} + d for 1 <= i <= m-1.
// Each extension step reuses an odd-indexed element, so d = a_{m+1} - a_1 =
// a_{m+2} - a_3 = ... = a_{2m} - a_{2m-1}: m representations of d.
//
// Requires m >= 1 and 0 < delta, with delta < 1/(m-2) when m >= 3; at the
// boundary value the gap condition at index m+1 degenerates to equality.
ConstructionResult construct(unsigned long m, const Rational& delta);
ConstructionResult construct(unsigned long m); // delta = default_delta(m)

// Several copies of construct(t), each scaled and translated so the
// concatenation is again convex, giving `copies` distinct differences that
// are each represented at least t times.
struct GluedResult {
    ConvexSet set;
    unsigned long t = 0;
    unsigned long copies = 0;
    std::vector<Rational> rich_differences; // one per copy, pairwise distinct
};

// Copies are laid left to right. Copy j+1 gets the smallest integer scale
// whose minimum internal gap strictly exceeds the last gap of copy j plus
// one unit; the boundary gap is the midpoint of those two gaps, keeping the
// combined gap sequence strictly increasing. Distinct scales make the
// per-copy rich differences lambda_j * d pairwise distinct.
GluedResult glue(unsigned long t, unsigned long copies);

} // namespace convexdiff
