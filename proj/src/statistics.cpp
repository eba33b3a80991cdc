#include "convexdiff/statistics.hpp"

#include "convexdiff/errors.hpp"

#include <algorithm>
#include <string>

namespace convexdiff {

long long rep_diff(const ConvexSet& A, const Rational& x) {
    const std::vector<Rational>& a = A.elements();
    if (x.is_zero())
        return static_cast<long long>(a.size()); // diagonal pairs
    // r(-x) = r(x): count pairs a_j + |x| = a_i with one search per j.
    const Rational step = x.abs();
    long long count = 0;
    for (const Rational& base : a) {
        if (std::binary_search(a.begin(), a.end(), base + step))
            ++count;
    }
    return count;
}

long long rep_sum(const ConvexSet& A, const Rational& C) {
    const std::vector<Rational>& a = A.elements();
    long long count = 0;
    for (const Rational& base : a) {
        if (std::binary_search(a.begin(), a.end(), C - base))
            ++count;
    }
    return count;
}

DiffStats diff_stats(const ConvexSet& A) {
    const std::vector<Rational>& a = A.elements();
    const std::size_t n = a.size();

    std::vector<Rational> diffs;
    diffs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            diffs.push_back(a[j] - a[i]);
    std::sort(diffs.begin(), diffs.end());

    DiffStats stats;
    stats.n = static_cast<long long>(n);
    Integer sum_sq(0);
    auto hint = stats.rep_counts.begin();
    for (std::size_t i = 0; i < diffs.size();) {
        std::size_t j = i + 1;
        while (j < diffs.size() && diffs[j] == diffs[i])
            ++j;
        const long long count = static_cast<long long>(j - i);
        hint = stats.rep_counts.emplace_hint(hint, diffs[i], count);
        sum_sq += to_integer(count) * to_integer(count);
        i = j;
    }
    stats.diff_set_size = 2 * static_cast<long long>(stats.rep_counts.size()) + 1;
    stats.energy = to_integer(stats.n) * to_integer(stats.n) + 2 * sum_sq;
    return stats;
}

long long rich_count(const DiffStats& stats, long long t) {
    if (t < 1)
        throw ValidationError("threshold t must be at least 1, got " + std::to_string(t));
    long long count = 0;
    for (const auto& [d, r] : stats.rep_counts)
        if (r >= t)
            ++count;
    return count;
}

long long rich_count(const ConvexSet& A, long long t) { return rich_count(diff_stats(A), t); }

MaxRep max_rep_diff(const DiffStats& stats) {
    if (stats.n < 2)
        throw ValidationError("max_rep_diff needs at least two elements");
    MaxRep best;
    for (const auto& [d, r] : stats.rep_counts) {
        if (r > best.count) { // keys ascend, so ties keep the smallest d
            best.value = d;
            best.count = r;
        }
    }
    if (best.count > stats.n / 2)
        throw InternalError("difference " + best.value.str() + " has count " +
                            std::to_string(best.count) + " > floor(n/2) = " +
                            std::to_string(stats.n / 2) + " on a convex set");
    return best;
}

MaxRep max_rep_diff(const ConvexSet& A) { return max_rep_diff(diff_stats(A)); }

MaxRep max_rep_sum(const ConvexSet& A) {
    const std::vector<Rational>& a = A.elements();
    const std::size_t n = a.size();
    if (n < 1)
        throw ValidationError("max_rep_sum needs a nonempty set");

    // Each unordered pair {i, j} with i < j contributes 2 ordered pairs to
    // its sum; the diagonal contributes 1.
    std::vector<std::pair<Rational, long long>> sums;
    sums.reserve(n * (n + 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            sums.emplace_back(a[i] + a[j], i == j ? 1 : 2);
    std::sort(sums.begin(), sums.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });

    MaxRep best;
    for (std::size_t i = 0; i < sums.size();) {
        std::size_t j = i;
        long long count = 0;
        while (j < sums.size() && sums[j].first == sums[i].first) {
            count += sums[j].second;
            ++j;
        }
        if (count > best.count) { // ascending values: ties keep the smallest C
            best.value = sums[i].first;
            best.count = count;
        }
        i = j;
    }
    return best;
}

} // namespace convexdiff
