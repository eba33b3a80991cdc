#pragma once

#include "convexdiff/convex_set.hpp"
#include "convexdiff/rational.hpp"

#include <map>

namespace convexdiff {

// Full difference histogram of a set, keyed over positive differences only;
// r(-d) = r(d) and r(0) = n recover the signed picture.
struct DiffStats {
    long long n = 0;
    std::map<Rational, long long> rep_counts; // positive d -> ordered-pair count
    long long diff_set_size = 0;              // |A-A| = 2*|rep_counts| + 1
    Integer energy;                           // E(A) = n^2 + 2*sum r(d)^2
};

// Ordered-pair count |{(a,b) : a-b = x}|. Walks the sorted elements with a
// binary search per start point — deliberately a different algorithm from
// diff_stats so the two can cross-check each other.
long long rep_diff(const ConvexSet& A, const Rational& x);

// Ordered-pair count |{(a,b) : a+b = C}|.
long long rep_sum(const ConvexSet& A, const Rational& C);

// Histogram of all positive differences via sort + run-length encoding.
DiffStats diff_stats(const ConvexSet& A);

// Number of positive differences with count >= t. Requires t >= 1.
long long rich_count(const DiffStats& stats, long long t);
long long rich_count(const ConvexSet& A, long long t);

struct MaxRep {
    Rational value;      // the difference d (or sum C) attaining the maximum
    long long count = 0; // its ordered-pair count
};

// Maximizing positive difference; ties broken by smallest d. Requires
// |A| >= 2. The count can never exceed floor(n/2) on a convex set; seeing
// more is reported as an internal defect, not a result.
MaxRep max_rep_diff(const ConvexSet& A);
MaxRep max_rep_diff(const DiffStats& stats);

// Maximizing sum value C over A+A; ties broken by smallest C. Requires
// |A| >= 1.
MaxRep max_rep_sum(const ConvexSet& A);

} // namespace convexdiff
