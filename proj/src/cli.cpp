#include "convexdiff/cli.hpp"

#include "convexdiff/construction.hpp"
#include "convexdiff/convex_set.hpp"
#include "convexdiff/decimal.hpp"
#include "convexdiff/errors.hpp"
#include "convexdiff/oracle.hpp"
#include "convexdiff/report.hpp"
#include "convexdiff/set_io.hpp"
#include "convexdiff/statistics.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>

namespace convexdiff::cli {

namespace {

void emit(const Json& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

// PATH.json -> PATH.meta.json; anything else gets .meta.json appended.
std::filesystem::path metadata_path(const std::filesystem::path& set_path) {
    std::filesystem::path meta = set_path;
    if (meta.extension() == ".json")
        meta.replace_extension(".meta.json");
    else
        meta += ".meta.json";
    return meta;
}

std::vector<unsigned long> parse_m_list(const std::string& text) {
    std::vector<unsigned long> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        std::string token = text.substr(pos, comma - pos);
        while (!token.empty() && token.front() == ' ')
            token.erase(token.begin());
        while (!token.empty() && token.back() == ' ')
            token.pop_back();
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw ValidationError("bad m-list entry \"" + token +
                                  "\": expected comma-separated positive integers");
        out.push_back(std::stoul(token));
        pos = comma + 1;
    }
    return out;
}

// Shared by construct and glue: emits {"elements", "metadata"} on stdout
// and, when requested, a plain set file plus a .meta.json next to it.
int finish_build(const ConvexSet& set, Json metadata, const std::string& out_path,
                 std::ostream& out) {
    Json doc = set_to_json(set);
    doc["metadata"] = metadata;
    if (!out_path.empty()) {
        const std::filesystem::path set_path(out_path);
        write_set_file(set_path, set);
        write_text_file(metadata_path(set_path), metadata.dump(2) + "\n");
    }
    emit(doc, out);
    return 0;
}

int run_construct(unsigned long m, const std::string& delta_text, bool integer,
                  const std::string& out_path, std::ostream& out) {
    const Rational delta = delta_text.empty() ? default_delta(m) : Rational::parse(delta_text);
    ConstructionResult built = construct(m, delta);

    Json metadata;
    metadata["m"] = built.m;
    metadata["delta"] = built.delta.str();
    ConvexSet set = built.set;
    Rational d = built.rich_difference;
    if (integer) {
        auto [dilated, scale] = built.set.dilate_to_integers();
        set = dilated;
        d = d * Rational(scale);
        metadata["d"] = d.str();
        metadata["scale"] = integer_to_json(scale);
    } else {
        metadata["d"] = d.str();
    }
    return finish_build(set, std::move(metadata), out_path, out);
}

int run_glue(unsigned long t, unsigned long copies, bool integer, const std::string& out_path,
             std::ostream& out) {
    GluedResult built = glue(t, copies);

    Json metadata;
    metadata["t"] = built.t;
    metadata["copies"] = built.copies;
    metadata["delta"] = default_delta(t).str();
    ConvexSet set = built.set;
    std::vector<Rational> rich = built.rich_differences;
    Json rich_json = Json::array();
    if (integer) {
        auto [dilated, scale] = built.set.dilate_to_integers();
        set = dilated;
        for (Rational& r : rich)
            r = r * Rational(scale);
        for (const Rational& r : rich)
            rich_json.push_back(r.str());
        metadata["rich_differences"] = std::move(rich_json);
        metadata["scale"] = integer_to_json(scale);
    } else {
        for (const Rational& r : rich)
            rich_json.push_back(r.str());
        metadata["rich_differences"] = std::move(rich_json);
    }
    return finish_build(set, std::move(metadata), out_path, out);
}

int run_analyze(const std::string& file, bool want_energy, bool want_max_rep, bool want_sum_rep,
                std::vector<long long> hist, const std::string& csv_path,
                const std::string& out_path, std::ostream& out) {
    const ConvexSet set = read_set_file(file);
    DiffStats stats = diff_stats(set);

    std::sort(hist.begin(), hist.end());
    hist.erase(std::unique(hist.begin(), hist.end()), hist.end());
    const bool selective = want_energy || want_max_rep || want_sum_rep || !hist.empty();

    Json doc;
    doc["n"] = stats.n;
    if (!selective || want_energy)
        doc["energy"] = stats.energy.get_str();
    doc["diff_set_size"] = stats.diff_set_size;
    if (!selective || want_max_rep) {
        if (stats.n < 2 && !want_max_rep) {
            doc["max_rep"] = nullptr; // a singleton has no positive difference
        } else {
            MaxRep best = max_rep_diff(stats);
            Json entry;
            entry["d"] = best.value.str();
            entry["count"] = best.count;
            doc["max_rep"] = std::move(entry);
        }
    }
    if (want_sum_rep) {
        MaxRep best = max_rep_sum(set);
        Json entry;
        entry["C"] = best.value.str();
        entry["count"] = best.count;
        doc["max_sum_rep"] = std::move(entry);
    }
    if (!hist.empty()) {
        Json rich = Json::array();
        for (long long t : hist) {
            Json entry;
            entry["t"] = t;
            entry["count"] = rich_count(stats, t);
            rich.push_back(std::move(entry));
        }
        doc["rich_counts"] = std::move(rich);
    }

    if (!csv_path.empty()) {
        std::string csv = "difference,count\n";
        for (const auto& [d, count] : stats.rep_counts)
            csv += d.str() + "," + std::to_string(count) + "\n";
        write_text_file(csv_path, csv);
    }
    if (!out_path.empty())
        write_text_file(out_path, doc.dump(2) + "\n");
    else
        emit(doc, out);
    return 0;
}

int run_verify(const std::string& file, const std::string& d_text, const std::string& out_path,
               std::ostream& out) {
    const ConvexSet set = read_set_file(file);
    BoundReport report =
        d_text.empty() ? verify_bound(set) : verify_bound(set, Rational::parse(d_text));

    Json doc;
    doc["n"] = report.n;
    doc["bound"] = report.bound;
    doc["d"] = report.d.str();
    doc["count"] = report.count;
    doc["margin"] = report.margin;
    doc["ok"] = true; // a violation would have surfaced as an internal error
    Json list = Json::array();
    for (const RepWitness& w : report.witnesses) {
        Json entry;
        entry["j"] = w.j;
        entry["k"] = w.k;
        list.push_back(std::move(entry));
    }
    doc["witnesses"] = std::move(list);
    if (!out_path.empty())
        write_text_file(out_path, doc.dump(2) + "\n");
    else
        emit(doc, out);
    return 0;
}

int run_search(std::size_t n, long long max_gap, bool attain, unsigned threads,
               const std::string& out_path, std::ostream& out) {
    SearchOptions options;
    options.record_attainment = attain;
    options.threads = threads;
    SearchReport report = search_bound(n, max_gap, options);

    Json doc;
    doc["n"] = report.n;
    doc["max_gap"] = report.max_gap;
    doc["bound"] = report.bound;
    doc["sets_enumerated"] = report.sets_enumerated;
    doc["max_count_found"] = report.max_count_found;
    doc["witness_lists_checked"] = report.witness_lists_checked;
    if (attain) {
        if (report.extremal_witness) {
            Json gaps = Json::array();
            for (std::size_t i = 0; i < report.extremal_witness->size(); ++i)
                gaps.push_back((*report.extremal_witness)[i]);
            doc["extremal_witness"] = std::move(gaps);
        } else {
            doc["extremal_witness"] = nullptr;
        }
    }
    Json violations = Json::array();
    for (const std::string& v : report.violations)
        violations.push_back(v);
    doc["violations"] = std::move(violations);
    if (!out_path.empty())
        write_text_file(out_path, doc.dump(2) + "\n");
    else
        emit(doc, out);
    return report.violations.empty() ? 0 : 2;
}

int run_report(const std::string& m_list_text, const std::string& out_csv,
               const std::string& recheck_path, std::ostream& out) {
    if (!recheck_path.empty()) {
        RecheckResult result = recheck_scaling_report(recheck_path);
        Json doc;
        doc["rows"] = result.rows;
        doc["ok"] = result.failures.empty();
        Json failures = Json::array();
        for (const std::string& f : result.failures)
            failures.push_back(f);
        doc["failures"] = std::move(failures);
        emit(doc, out);
        return result.failures.empty() ? 0 : 1;
    }

    std::vector<ScalingRow> rows = scaling_report(parse_m_list(m_list_text));
    WrittenReport written = write_scaling_report(rows, out_csv);
    Json doc;
    doc["csv"] = written.csv.generic_string();
    doc["companion"] = written.companion.generic_string();
    doc["rows"] = rows.size();
    Json files = Json::array();
    for (const std::filesystem::path& p : written.set_files)
        files.push_back(p.generic_string());
    doc["set_files"] = std::move(files);
    emit(doc, out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convex difference sets: extremal constructions, exact statistics, and "
                 "exhaustive verification of the representation bound"};
    app.require_subcommand(1);

    unsigned long m = 0;
    std::string delta_text;
    bool integer = false;
    std::string out_path;
    auto* cmd_construct = app.add_subcommand(
        "construct", "Build the size-2m set whose difference d is represented m times");
    cmd_construct->add_option("--m", m, "Number of representations (set size is 2m)")
        ->required();
    cmd_construct->add_option("--delta", delta_text,
                              "Gap perturbation as a rational; default keeps a safety margin");
    cmd_construct->add_flag("--integer", integer, "Dilate to the integers before output");
    cmd_construct->add_option("--output,-o", out_path,
                              "Write the set here and metadata to the matching .meta.json");

    unsigned long t = 0;
    unsigned long copies = 0;
    auto* cmd_glue = app.add_subcommand(
        "glue", "Concatenate scaled copies of a construction, one rich difference per copy");
    cmd_glue->add_option("--t", t, "Richness threshold of each copy (copy size is 2t)")
        ->required();
    cmd_glue->add_option("--copies", copies, "Number of copies")->required();
    cmd_glue->add_flag("--integer", integer, "Dilate to the integers before output");
    cmd_glue->add_option("--output,-o", out_path,
                         "Write the set here and metadata to the matching .meta.json");

    std::string file;
    bool want_energy = false;
    bool want_max_rep = false;
    bool want_sum_rep = false;
    std::vector<long long> hist;
    std::string csv_path;
    auto* cmd_analyze =
        app.add_subcommand("analyze", "Exact difference/sum statistics of a set file");
    cmd_analyze->add_option("file", file, "Set file to analyze")->required();
    cmd_analyze->add_flag("--energy", want_energy, "Report the additive energy");
    cmd_analyze->add_flag("--max-rep", want_max_rep, "Report the maximizing difference");
    cmd_analyze->add_flag("--sum-rep", want_sum_rep, "Report the maximizing sum");
    cmd_analyze->add_option("--hist", hist,
                            "Rich-difference threshold (repeatable): count d with r(d) >= t");
    cmd_analyze->add_option("--csv", csv_path, "Write the full difference histogram here");
    cmd_analyze->add_option("--output,-o", out_path, "Write the JSON report here");

    std::string d_text;
    auto* cmd_verify = app.add_subcommand(
        "verify", "Check the representation bound and witness structure on a set file");
    cmd_verify->add_option("file", file, "Set file to verify")->required();
    cmd_verify->add_option("--d", d_text,
                           "Difference to verify (default: the maximizing one); sign ignored");
    cmd_verify->add_option("--output,-o", out_path, "Write the JSON report here");

    std::size_t n = 0;
    long long max_gap = 0;
    bool attain = false;
    unsigned threads = 1;
    auto* cmd_search = app.add_subcommand(
        "search", "Exhaustively check the bound over all small integer convex sets");
    cmd_search->add_option("--n", n, "Set size")->required();
    cmd_search->add_option("--max-gap", max_gap, "Largest allowed gap")->required();
    cmd_search->add_flag("--attain", attain, "Report the first maximizing gap sequence");
    cmd_search->add_option("--threads", threads, "Worker threads (default 1)");
    cmd_search->add_option("--output,-o", out_path, "Write the JSON report here");

    std::string m_list_text;
    std::string out_csv;
    std::string recheck_path;
    auto* cmd_report = app.add_subcommand(
        "report", "Scaling table over the construction family, or recheck of a written one");
    cmd_report->add_option("--m-list", m_list_text, "Comma-separated m values");
    cmd_report->add_option("--out,--output,-o", out_csv, "CSV output path");
    cmd_report->add_option("--recheck", recheck_path,
                           "Re-derive a written report from its set files (companion JSON)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_construct->parsed())
            return run_construct(m, delta_text, integer, out_path, out);
        if (cmd_glue->parsed())
            return run_glue(t, copies, integer, out_path, out);
        if (cmd_analyze->parsed())
            return run_analyze(file, want_energy, want_max_rep, want_sum_rep, hist, csv_path,
                               out_path, out);
        if (cmd_verify->parsed())
            return run_verify(file, d_text, out_path, out);
        if (cmd_search->parsed())
            return run_search(n, max_gap, attain, threads, out_path, out);
        if (cmd_report->parsed()) {
            const bool generate = !m_list_text.empty() || !out_csv.empty();
            if (generate == !recheck_path.empty())
                throw ValidationError(
                    "report needs either --m-list with --out, or --recheck PATH");
            if (generate && (m_list_text.empty() || out_csv.empty()))
                throw ValidationError("report --m-list and --out go together");
            return run_report(m_list_text, out_csv, recheck_path, out);
        }
        throw ValidationError("no command given");
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace convexdiff::cli
