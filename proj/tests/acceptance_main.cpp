// Acceptance sweep: one PASS/FAIL line per criterion, exit 0 only if all
// eight hold. Each check is exact — no tolerances anywhere.

#include "convexdiff/cli.hpp"
#include "convexdiff/construction.hpp"
#include "convexdiff/convex_set.hpp"
#include "convexdiff/errors.hpp"
#include "convexdiff/oracle.hpp"
#include "convexdiff/set_io.hpp"
#include "convexdiff/statistics.hpp"

#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

using namespace convexdiff;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok)
        throw Failure(what);
}

class Runner {
  public:
    void criterion(int number, const std::string& label, double limit_seconds,
                   const std::function<void()>& body) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            body();
        } catch (const std::exception& e) {
            failure = e.what();
        } catch (...) {
            failure = "non-standard exception";
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (failure.empty() && limit_seconds > 0 && elapsed > limit_seconds) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "correct but took %.1fs, over the %.0fs budget",
                          elapsed, limit_seconds);
            failure = buf;
        }

        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", elapsed);
        if (failure.empty()) {
            std::cout << "PASS — criterion " << number << ": " << label << " (" << timing
                      << ")" << std::endl;
        } else {
            std::cout << "FAIL — criterion " << number << ": " << label << " — " << failure
                      << std::endl;
            ++failures_;
        }
    }

    int failures() const { return failures_; }

  private:
    int failures_ = 0;
};

std::string run_ok(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int rc = cli::run(args, out, err);
    require(rc == 0,
            "`" + args.front() + "` exited " + std::to_string(rc) + ": " + err.str());
    return out.str();
}

// State shared between criteria: 4 audits the sweep 3 ran, 8 re-runs 7.
struct SweepState {
    bool complete = false;
    unsigned long long witness_lists = 0;
    std::vector<std::string> violations;
};

void generate_report(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    run_ok({"report", "--m-list", "2,4,8,16,32,64", "--out", (dir / "scaling.csv").string()});
}

std::vector<std::filesystem::path> report_artifacts(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files{dir / "scaling.csv", dir / "scaling.json"};
    for (const char* name : {"m0002.json", "m0004.json", "m0008.json", "m0016.json",
                             "m0032.json", "m0064.json"})
        files.push_back(dir / "scaling.sets" / name);
    return files;
}

} // namespace

int main() {
    const std::filesystem::path scratch =
        std::filesystem::temp_directory_path() /
        ("convexdiff-acceptance-" + std::to_string(::getpid()));
    std::filesystem::remove_all(scratch);
    std::filesystem::create_directories(scratch);

    Runner runner;
    SweepState sweep;

    runner.criterion(
        1, "construct with default delta gives |A| = 2m and r(d) = m for m up to 200", 10.0,
        [&] {
            for (unsigned long m = 1; m <= 200; ++m) {
                const std::string label = "m=" + std::to_string(m);
                const ConstructionResult built = construct(m);
                require(built.set.size() == 2 * m, label + ": size is not 2m");
                require(!ConvexSet::check(built.set.elements()).has_value(),
                        label + ": output fails convexity validation");
                const long long count =
                    oracles::brute_rep_diff(built.set.elements(), built.rich_difference);
                require(count == static_cast<long long>(m),
                        label + ": brute-force count of d is " + std::to_string(count) +
                            ", want exactly m");
            }
        });

    runner.criterion(
        2, "delta condition is sharp: 1/(m-2) rejected, a millionth less accepted", 0, [&] {
            for (unsigned long m = 3; m <= 50; ++m) {
                const std::string label = "m=" + std::to_string(m);
                const long long k = static_cast<long long>(m) - 2;
                const Rational boundary(1, k);

                bool rejected = false;
                try {
                    construct(m, boundary);
                } catch (const ValidationError&) {
                    rejected = true;
                }
                require(rejected, label + ": delta = 1/(m-2) was accepted");

                const Rational delta = boundary - Rational(1, 1000000);
                const ConstructionResult built = construct(m, delta);
                require(!ConvexSet::check(built.set.elements()).has_value(),
                        label + ": boundary-adjacent set is not convex");
                // Tightest point: gap growth across the splice at index m+1.
                const auto gaps = built.set.gaps();
                const Rational margin = gaps[m] - gaps[m - 1];
                require(margin > Rational(0), label + ": margin is not positive");
                require(margin == Rational(k, 1000000),
                        label + ": margin is " + margin.str() + ", want " +
                            Rational(k, 1000000).str());
            }
        });

    runner.criterion(
        3, "every integer convex set with n <= 8, gaps <= 12 obeys count <= floor(n/2)", 60.0,
        [&] {
            for (std::size_t n = 3; n <= 8; ++n) {
                const std::string label = "n=" + std::to_string(n);
                SearchOptions options;
                options.check_witnesses = true;
                options.record_attainment = (n == 4);
                options.threads = 1;
                const SearchReport report = search_bound(n, 12, options);

                sweep.witness_lists += report.witness_lists_checked;
                sweep.violations.insert(sweep.violations.end(), report.violations.begin(),
                                        report.violations.end());

                require(report.sets_enumerated ==
                            oracles::binomial(12, static_cast<unsigned>(n) - 1),
                        label + ": enumerated " + std::to_string(report.sets_enumerated) +
                            " sets, want C(12, n-1)");
                require(report.violations.empty(),
                        label + ": " + (report.violations.empty()
                                            ? std::string()
                                            : report.violations.front()));
                require(report.max_count_found <= report.bound,
                        label + ": maximum count exceeds the bound");
                if (n == 4) {
                    require(report.max_count_found == 2,
                            "n=4: bound not attained (max count " +
                                std::to_string(report.max_count_found) + ")");
                    require(report.extremal_witness.has_value() &&
                                report.extremal_witness->values() ==
                                    std::vector<long long>{1, 2, 3},
                            "n=4: attainment is not the gap sequence 1,2,3");
                }
            }
            sweep.complete = true;
        });

    runner.criterion(
        4, "witness lists from the exhaustive sweep all have the proof structure", 0, [&] {
            require(sweep.complete, "the criterion-3 sweep did not complete");
            require(sweep.witness_lists > 0, "no witness list was ever checked");
            require(sweep.violations.empty(),
                    sweep.violations.empty()
                        ? std::string()
                        : std::to_string(sweep.violations.size()) +
                              " structural violations, first: " + sweep.violations.front());
        });

    runner.criterion(
        5, "energy via sum of squared counts equals the direct quadruple count", 0, [&] {
            std::mt19937_64 rng(0x5eed2026ULL);
            std::uniform_int_distribution<std::size_t> size_pick(2, 12);
            for (int i = 0; i < 100; ++i) {
                const auto elements = oracles::random_convex_elements(rng, size_pick(rng));
                const DiffStats stats = diff_stats(ConvexSet::validate(elements));
                const Integer direct = oracles::brute_energy_quadruples(elements);
                require(stats.energy == direct,
                        "set #" + std::to_string(i) + " (n=" +
                            std::to_string(elements.size()) + "): " + stats.energy.get_str() +
                            " vs " + direct.get_str());
            }
        });

    runner.criterion(
        6, "glued sets are convex with at least `copies` differences rich at t", 5.0, [&] {
            const std::vector<std::pair<unsigned long, unsigned long>> cases{
                {2, 2}, {2, 4}, {3, 3}, {4, 5}};
            for (const auto& [t, copies] : cases) {
                const std::string label =
                    "t=" + std::to_string(t) + ", copies=" + std::to_string(copies);
                const GluedResult glued = glue(t, copies);
                require(!ConvexSet::check(glued.set.elements()).has_value(),
                        label + ": glued set is not convex");
                require(glued.set.size() == 2 * t * copies, label + ": size is not 2*t*copies");

                long long rich = 0;
                for (const auto& [d, count] :
                     oracles::brute_positive_histogram(glued.set.elements()))
                    if (count >= static_cast<long long>(t))
                        ++rich;
                require(rich >= static_cast<long long>(copies),
                        label + ": only " + std::to_string(rich) +
                            " differences reach the threshold");
            }
        });

    const std::filesystem::path report_dir = scratch / "report1";
    runner.criterion(
        7, "the scaling report generates, rechecks clean, and has rich count 1 at t = m", 0,
        [&] {
            generate_report(report_dir);
            run_ok({"report", "--recheck", (report_dir / "scaling.json").string()});

            const std::string csv = read_text_file(report_dir / "scaling.csv");
            require(csv.rfind("m,n,energy,energy_ratio,max_sum_rep,sum_ratio,rich_t,"
                              "rich_count\n", 0) == 0,
                    "CSV is missing the ratio columns");

            const Json companion = Json::parse(read_text_file(report_dir / "scaling.json"));
            require(companion.at("rows").size() == 6, "companion does not have 6 rows");
            for (const Json& row : companion.at("rows")) {
                const long long m = row.at("m").get<long long>();
                bool found = false;
                for (const Json& entry : row.at("rich"))
                    if (entry.at("t").get<long long>() == m) {
                        found = true;
                        require(entry.at("count").get<long long>() == 1,
                                "m=" + std::to_string(m) + ": rich count at t=m is " +
                                    std::to_string(entry.at("count").get<long long>()) +
                                    ", want 1");
                    }
                require(found, "m=" + std::to_string(m) + ": no rich entry at t=m");
            }
        });

    runner.criterion(8, "re-running every artifact-producing step is byte-identical", 0, [&] {
        // The full report artifact set, regenerated from scratch.
        const std::filesystem::path second_dir = scratch / "report2";
        generate_report(second_dir);
        const auto first = report_artifacts(report_dir);
        const auto second = report_artifacts(second_dir);
        for (std::size_t i = 0; i < first.size(); ++i)
            require(read_text_file(first[i]) == read_text_file(second[i]),
                    first[i].filename().string() + " differs between runs");

        // Every command's stdout, and the files construct writes.
        const std::filesystem::path example = scratch / "example.json";
        const std::vector<std::vector<std::string>> invocations{
            {"construct", "--m", "3", "--delta", "1/4", "--integer", "-o", example.string()},
            {"glue", "--t", "3", "--copies", "3"},
            {"analyze", example.string(), "--energy", "--max-rep", "--sum-rep", "--hist", "2",
             "--hist", "3"},
            {"verify", example.string()},
            {"search", "--n", "6", "--max-gap", "10", "--attain"},
        };
        for (const auto& args : invocations) {
            const std::string once = run_ok(args);
            const std::string again = run_ok(args);
            require(once == again, "`" + args.front() + "` stdout changed between runs");
        }
        run_ok({"construct", "--m", "3", "--delta", "1/4", "--integer", "-o",
                (scratch / "example2.json").string()});
        require(read_text_file(example) == read_text_file(scratch / "example2.json"),
                "construct set file differs between runs");

        // The search report is independent of the worker count.
        SearchOptions serial;
        serial.record_attainment = true;
        SearchOptions parallel = serial;
        parallel.threads = 4;
        const SearchReport a = search_bound(7, 12, serial);
        const SearchReport b = search_bound(7, 12, parallel);
        require(a.sets_enumerated == b.sets_enumerated &&
                    a.max_count_found == b.max_count_found && a.bound == b.bound &&
                    a.witness_lists_checked == b.witness_lists_checked &&
                    a.violations == b.violations &&
                    a.extremal_witness.has_value() == b.extremal_witness.has_value() &&
                    (!a.extremal_witness ||
                     a.extremal_witness->values() == b.extremal_witness->values()),
                "search reports differ between 1 and 4 threads");
    });

    std::filesystem::remove_all(scratch);

    if (runner.failures() == 0) {
        std::cout << "all 8 criteria hold" << std::endl;
        return 0;
    }
    std::cout << runner.failures() << " of 8 criteria failed" << std::endl;
    return 1;
}
