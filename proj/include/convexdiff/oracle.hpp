#pragma once

#include "convexdiff/convex_set.hpp"
#include "convexdiff/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace convexdiff {

// One representation d = a_{j+k} - a_j, 1-based, k >= 1.
struct RepWitness {
    std::size_t j = 0;
    std::size_t k = 0;
    friend bool operator==(const RepWitness&, const RepWitness&) = default;
};

// All witnesses of d in A, sorted by strictly decreasing k. Witnesses
// exhibit positive differences only (k >= 1 forces a_{j+k} > a_j), so a
// negative d yields the empty list; query |d| for the symmetric count.
// Requires d != 0.
std::vector<RepWitness> witnesses(const ConvexSet& A, const Rational& d);

// Asserts the structure every witness list of a convex set must have:
// strictly decreasing (hence distinct) k, j_{i+1} >= j_i + 2, and for the
// last entry j_t >= 2t - 1 and j_t <= n - 1. A failure can only mean the
// set was not convex or the scan is wrong, so it throws InternalError.
void check_witness_structure(const std::vector<RepWitness>& list, std::size_t n);

// Visits every strictly increasing gap sequence g_1 < ... < g_{n-1} with
// g_i in [1, max_gap] exactly once, in lexicographic order — that is, every
// translation-normalized integer convex set within the bound. Returns the
// number visited, always C(max_gap, n-1). Requires n >= 2 and
// max_gap >= n-1.
unsigned long long enumerate_convex(std::size_t n, long long max_gap,
                                    const std::function<void(const GapSequence&)>& visit);

struct SearchOptions {
    bool check_witnesses = true;   // run check_witness_structure on every
                                   // difference with count >= 2
    bool record_attainment = false; // keep the lex-first maximizing sequence
    unsigned threads = 1;
};

struct SearchReport {
    std::size_t n = 0;
    long long max_gap = 0;
    unsigned long long sets_enumerated = 0;
    long long max_count_found = 0;
    long long bound = 0; // floor(n/2)
    std::optional<GapSequence> extremal_witness;
    unsigned long long witness_lists_checked = 0;
    std::vector<std::string> violations; // must be empty; nonempty = bug
};

// Exhaustively measures max_rep_diff over every enumerated set and records
// any count exceeding floor(n/2) — the bound provably holds, so violations
// diagnose defects rather than report findings. Work is partitioned by the
// first gap; merging is deterministic, so the report does not depend on the
// thread count.
SearchReport search_bound(std::size_t n, long long max_gap, const SearchOptions& options = {});

struct BoundReport {
    long long n = 0;
    long long bound = 0; // floor(n/2)
    Rational d;
    long long count = 0;
    long long margin = 0; // bound - count, always >= 0
    std::vector<RepWitness> witnesses;
};

// Checks the representation bound on one set: takes the maximizing d (or a
// supplied one, queried as |d|), cross-checks the histogram count against
// the witness scan, and runs the structural checks. Any inconsistency is an
// InternalError.
BoundReport verify_bound(const ConvexSet& A);
BoundReport verify_bound(const ConvexSet& A, const Rational& d); // d != 0

} // namespace convexdiff
