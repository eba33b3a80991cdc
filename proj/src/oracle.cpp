#include "convexdiff/oracle.hpp"

#include "convexdiff/errors.hpp"
#include "convexdiff/statistics.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <utility>

namespace convexdiff {

std::vector<RepWitness> witnesses(const ConvexSet& A, const Rational& d) {
    if (d.is_zero())
        throw ValidationError("witness query requires a nonzero difference");
    const std::vector<Rational>& a = A.elements();
    const std::size_t n = a.size();

    std::vector<RepWitness> out;
    if (d.sign() < 0)
        return out; // only positive differences have (j, k) witnesses
    for (std::size_t j = 0; j < n; ++j) {
        // a_{j+k} - a_j grows strictly in k, so scan until it passes d.
        for (std::size_t jk = j + 1; jk < n; ++jk) {
            const int cmp = Rational::compare(a[jk] - a[j], d);
            if (cmp == 0) {
                out.push_back(RepWitness{j + 1, jk - j});
                break;
            }
            if (cmp > 0)
                break;
        }
    }
    std::sort(out.begin(), out.end(), [](const RepWitness& lhs, const RepWitness& rhs) {
        if (lhs.k != rhs.k)
            return lhs.k > rhs.k;
        return lhs.j < rhs.j;
    });
    check_witness_structure(out, n);
    return out;
}

void check_witness_structure(const std::vector<RepWitness>& list, std::size_t n) {
    const std::size_t t = list.size();
    for (std::size_t i = 0; i + 1 < t; ++i) {
        if (list[i].k <= list[i + 1].k)
            throw InternalError("witness k values not strictly decreasing: k_" +
                                std::to_string(i + 1) + " = " + std::to_string(list[i].k) +
                                " <= k_" + std::to_string(i + 2) + " = " +
                                std::to_string(list[i + 1].k));
        if (list[i + 1].j < list[i].j + 2)
            throw InternalError("witness start indices too close: j_" + std::to_string(i + 2) +
                                " = " + std::to_string(list[i + 1].j) + " < j_" +
                                std::to_string(i + 1) + " + 2 = " +
                                std::to_string(list[i].j + 2));
    }
    if (t > 0) {
        const std::size_t jt = list[t - 1].j;
        if (jt + 1 < 2 * t) // j_t >= 2t - 1
            throw InternalError("last witness start j_t = " + std::to_string(jt) +
                                " below 2t - 1 = " + std::to_string(2 * t - 1));
        if (jt > n - 1)
            throw InternalError("last witness start j_t = " + std::to_string(jt) +
                                " exceeds n - 1 = " + std::to_string(n - 1));
    }
}

namespace {

// Lexicographic combinations: suffix g[from..] of a strictly increasing
// sequence bounded by max_gap. Returns false when the suffix has rolled over.
bool next_suffix(std::vector<long long>& g, std::size_t from, long long max_gap) {
    const std::size_t len = g.size();
    std::size_t i = len;
    while (i > from) {
        --i;
        // g[i] may grow up to max_gap - (len - 1 - i), keeping room above.
        if (g[i] < max_gap - static_cast<long long>(len - 1 - i)) {
            ++g[i];
            for (std::size_t r = i + 1; r < len; ++r)
                g[r] = g[r - 1] + 1;
            return true;
        }
    }
    return false;
}

struct Partial {
    unsigned long long sets = 0;
    long long max_count = 0;
    std::optional<GapSequence> first_max;
    unsigned long long witness_lists = 0;
    std::vector<std::string> violations;
};

std::string describe_gaps(const GapSequence& gaps) {
    std::string out = "gaps [";
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(gaps[i]);
    }
    out += "]";
    return out;
}

} // namespace

unsigned long long enumerate_convex(std::size_t n, long long max_gap,
                                    const std::function<void(const GapSequence&)>& visit) {
    if (n < 2)
        throw ValidationError("enumeration needs n >= 2");
    const std::size_t len = n - 1;
    if (max_gap < static_cast<long long>(len))
        throw ValidationError("no strictly increasing gap sequence of length " +
                              std::to_string(len) + " fits in [1, " + std::to_string(max_gap) +
                              "]");
    std::vector<long long> g(len);
    for (std::size_t i = 0; i < len; ++i)
        g[i] = static_cast<long long>(i) + 1;
    unsigned long long visited = 0;
    do {
        visit(GapSequence::validate(g));
        ++visited;
    } while (next_suffix(g, 0, max_gap));
    return visited;
}

namespace {

// Enumerates the block with fixed first gap and runs the bound checks on
// each set.
Partial run_partition(std::size_t n, long long max_gap, long long first_gap,
                      const SearchOptions& options) {
    Partial part;
    const std::size_t len = n - 1;
    const long long bound = static_cast<long long>(n) / 2;

    std::vector<long long> g(len);
    g[0] = first_gap;
    for (std::size_t i = 1; i < len; ++i)
        g[i] = first_gap + static_cast<long long>(i);
    if (len > 1 && g[len - 1] > max_gap)
        return part; // first gap too large to fit a full suffix

    do {
        GapSequence gaps = GapSequence::validate(g);
        ConvexSet set = ConvexSet::from_gap_sequence(gaps);
        DiffStats stats = diff_stats(set);
        ++part.sets;

        long long best = 0;
        for (const auto& [d, count] : stats.rep_counts) {
            if (count > best)
                best = count;
            if (count > bound)
                part.violations.push_back(describe_gaps(gaps) + ": difference " + d.str() +
                                          " has count " + std::to_string(count) +
                                          " > floor(n/2) = " + std::to_string(bound));
            if (options.check_witnesses && count >= 2) {
                try {
                    auto list = witnesses(set, d);
                    if (static_cast<long long>(list.size()) != count)
                        throw InternalError("witness scan found " + std::to_string(list.size()) +
                                            " representations, histogram says " +
                                            std::to_string(count));
                    ++part.witness_lists;
                } catch (const InternalError& e) {
                    part.violations.push_back(describe_gaps(gaps) + ", difference " + d.str() +
                                              ": " + e.what());
                }
            }
        }
        if (best > part.max_count) {
            part.max_count = best;
            if (options.record_attainment)
                part.first_max = gaps;
        }
    } while (len > 1 && next_suffix(g, 1, max_gap));
    return part;
}

} // namespace

SearchReport search_bound(std::size_t n, long long max_gap, const SearchOptions& options) {
    if (n < 2)
        throw ValidationError("search needs n >= 2");
    const std::size_t len = n - 1;
    if (max_gap < static_cast<long long>(len))
        throw ValidationError("no strictly increasing gap sequence of length " +
                              std::to_string(len) + " fits in [1, " + std::to_string(max_gap) +
                              "]");

    // One partition per admissible first gap; the suffix needs len-1 larger
    // values above it.
    const long long first_max = max_gap - static_cast<long long>(len) + 1;
    std::vector<Partial> parts(static_cast<std::size_t>(first_max));

    unsigned threads = options.threads == 0 ? 1 : options.threads;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(first_max));
    if (threads <= 1) {
        for (long long f = 1; f <= first_max; ++f)
            parts[static_cast<std::size_t>(f - 1)] = run_partition(n, max_gap, f, options);
    } else {
        std::atomic<long long> next{1};
        auto worker = [&] {
            for (;;) {
                const long long f = next.fetch_add(1);
                if (f > first_max)
                    return;
                parts[static_cast<std::size_t>(f - 1)] = run_partition(n, max_gap, f, options);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (std::thread& th : pool)
            th.join();
    }

    SearchReport report;
    report.n = n;
    report.max_gap = max_gap;
    report.bound = static_cast<long long>(n) / 2;
    // Merge in first-gap order with strict >, so the witness stays the
    // lexicographically first attaining sequence whatever the thread count.
    for (const Partial& part : parts) {
        report.sets_enumerated += part.sets;
        report.witness_lists_checked += part.witness_lists;
        if (part.max_count > report.max_count_found) {
            report.max_count_found = part.max_count;
            if (options.record_attainment)
                report.extremal_witness = part.first_max;
        }
        report.violations.insert(report.violations.end(), part.violations.begin(),
                                 part.violations.end());
    }
    return report;
}

BoundReport verify_bound(const ConvexSet& A) {
    DiffStats stats = diff_stats(A);
    MaxRep best = max_rep_diff(stats); // throws if the bound ever failed
    return verify_bound(A, best.value);
}

BoundReport verify_bound(const ConvexSet& A, const Rational& d) {
    if (d.is_zero())
        throw ValidationError("verification requires a nonzero difference");
    const Rational query = d.abs();
    const long long n = static_cast<long long>(A.size());
    if (n < 2)
        throw ValidationError("verification needs at least two elements");

    BoundReport report;
    report.n = n;
    report.bound = n / 2;
    report.d = query;
    report.count = rep_diff(A, query);
    report.witnesses = witnesses(A, query); // structural checks run inside
    if (static_cast<long long>(report.witnesses.size()) != report.count)
        throw InternalError("witness scan found " + std::to_string(report.witnesses.size()) +
                            " representations of " + query.str() + ", pair scan says " +
                            std::to_string(report.count));
    if (report.count > report.bound)
        throw InternalError("difference " + query.str() + " has count " +
                            std::to_string(report.count) + " > floor(n/2) = " +
                            std::to_string(report.bound) + " on a convex set");
    report.margin = report.bound - report.count;
    return report;
}

} // namespace convexdiff
