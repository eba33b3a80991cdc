#pragma once

#include "convexdiff/convex_set.hpp"
#include "convexdiff/rational.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace convexdiff {

// Rich-difference count at one threshold plus the comparison ratio
// count * t^3 / n^3 (the cubic regime the upper bound lives in).
struct RichEntry {
    long long threshold = 0;
    long long count = 0;
    std::string ratio;
};

// One construction measured: raw integers are exact and re-derivable from
// the stored set; the *_ratio strings are presentation-only decimals.
struct ScalingRow {
    unsigned long m = 0;
    long long n = 0;     // = 2m
    Rational delta;      // perturbation used by the construction
    Integer scale;       // dilation factor that made the set integral
    ConvexSet set;       // the dilated (integer) set
    Rational rich_difference; // dilated d, represented exactly m times
    Integer energy;
    std::string energy_ratio; // E / n^{5/2}
    long long max_sum_rep = 0;
    std::string sum_ratio; // max_sum_rep / n^{2/3}
    std::vector<RichEntry> rich;
};

// Even thresholds 2, 4, ..., up to m, with m itself appended when odd (and
// {1} for m = 1) so the extremal threshold t = m is always measured.
std::vector<long long> report_thresholds(unsigned long m);

// Builds, dilates, and measures construct(m) for each requested m
// (duplicates collapsed, output ordered by m).
std::vector<ScalingRow> scaling_report(std::vector<unsigned long> m_list);

struct WrittenReport {
    std::filesystem::path csv;
    std::filesystem::path companion; // JSON with set-file references
    std::vector<std::filesystem::path> set_files;
};

// Writes the CSV (header m,n,energy,energy_ratio,max_sum_rep,sum_ratio,
// rich_t,rich_count; one line per (m, threshold)), a companion JSON next to
// it carrying every row plus relative set-file paths, and one set file per
// row under "<csv stem>.sets/".
WrittenReport write_scaling_report(const std::vector<ScalingRow>& rows,
                                   const std::filesystem::path& csv_path);

struct RecheckResult {
    long long rows = 0;
    std::vector<std::string> failures; // empty iff every row reproduces
};

// Re-derives every integer in a previously written report from its set
// files alone — energy, max sum representation, rich counts, the count of
// the recorded rich difference — and re-renders the ratio strings; any
// mismatch is reported, not thrown.
RecheckResult recheck_scaling_report(const std::filesystem::path& companion_path);

} // namespace convexdiff
