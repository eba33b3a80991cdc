#include "convexdiff/report.hpp"

#include "convexdiff/construction.hpp"
#include "convexdiff/decimal.hpp"
#include "convexdiff/errors.hpp"
#include "convexdiff/set_io.hpp"
#include "convexdiff/statistics.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

namespace convexdiff {

std::vector<long long> report_thresholds(unsigned long m) {
    std::vector<long long> out;
    for (unsigned long t = 2; t <= m; t += 2)
        out.push_back(static_cast<long long>(t));
    // Keep the extremal threshold t = m in view when the evens miss it.
    if (m % 2 == 1)
        out.push_back(static_cast<long long>(m));
    return out;
}

namespace {

ScalingRow measure(unsigned long m) {
    ConstructionResult built = construct(m);
    auto [set, scale] = built.set.dilate_to_integers();
    DiffStats stats = diff_stats(set);
    const Integer n_big = to_integer(stats.n);

    ScalingRow row{m,
                   stats.n,
                   built.delta,
                   scale,
                   std::move(set),
                   built.rich_difference * Rational(scale),
                   stats.energy,
                   power_ratio_decimal(stats.energy, n_big, 5, 2),
                   0,
                   "",
                   {}};
    MaxRep sum_best = max_rep_sum(row.set);
    row.max_sum_rep = sum_best.count;
    row.sum_ratio = power_ratio_decimal(to_integer(row.max_sum_rep), n_big, 2, 3);
    for (long long t : report_thresholds(m)) {
        const long long count = rich_count(stats, t);
        row.rich.push_back(RichEntry{
            t, count, power_ratio_decimal(to_integer(count) * to_integer(t) * to_integer(t) * to_integer(t),
                                          n_big, 3, 1)});
    }
    return row;
}

std::string set_file_name(unsigned long m) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "m%04lu.json", m);
    return buf;
}

} // namespace

std::vector<ScalingRow> scaling_report(std::vector<unsigned long> m_list) {
    if (m_list.empty())
        throw ValidationError("report needs at least one m");
    std::sort(m_list.begin(), m_list.end());
    m_list.erase(std::unique(m_list.begin(), m_list.end()), m_list.end());
    std::vector<ScalingRow> rows;
    rows.reserve(m_list.size());
    for (unsigned long m : m_list)
        rows.push_back(measure(m));
    return rows;
}

WrittenReport write_scaling_report(const std::vector<ScalingRow>& rows,
                                   const std::filesystem::path& csv_path) {
    WrittenReport written;
    written.csv = csv_path;
    written.companion = csv_path;
    written.companion.replace_extension(".json");
    const std::string set_dir_name = csv_path.stem().string() + ".sets";

    std::string csv = "m,n,energy,energy_ratio,max_sum_rep,sum_ratio,rich_t,rich_count\n";
    Json companion_rows = Json::array();
    for (const ScalingRow& row : rows) {
        const std::string prefix = std::to_string(row.m) + "," + std::to_string(row.n) + "," +
                                   row.energy.get_str() + "," + row.energy_ratio + "," +
                                   std::to_string(row.max_sum_rep) + "," + row.sum_ratio;
        for (const RichEntry& entry : row.rich)
            csv += prefix + "," + std::to_string(entry.threshold) + "," +
                   std::to_string(entry.count) + "\n";

        const std::string rel_set = set_dir_name + "/" + set_file_name(row.m);
        std::filesystem::path set_path = csv_path.parent_path() / set_dir_name /
                                         set_file_name(row.m);
        write_set_file(set_path, row.set);
        written.set_files.push_back(set_path);

        Json doc;
        doc["m"] = row.m;
        doc["n"] = row.n;
        doc["delta"] = row.delta.str();
        doc["scale"] = integer_to_json(row.scale);
        doc["d"] = row.rich_difference.str();
        doc["set_file"] = rel_set;
        doc["energy"] = integer_to_json(row.energy);
        doc["energy_ratio"] = row.energy_ratio;
        doc["max_sum_rep"] = row.max_sum_rep;
        doc["sum_ratio"] = row.sum_ratio;
        Json rich = Json::array();
        for (const RichEntry& entry : row.rich) {
            Json e;
            e["t"] = entry.threshold;
            e["count"] = entry.count;
            e["ratio"] = entry.ratio;
            rich.push_back(std::move(e));
        }
        doc["rich"] = std::move(rich);
        companion_rows.push_back(std::move(doc));
    }

    write_text_file(csv_path, csv);
    Json companion;
    companion["csv"] = csv_path.filename().string();
    companion["set_directory"] = set_dir_name;
    companion["rows"] = std::move(companion_rows);
    write_text_file(written.companion, companion.dump(2) + "\n");
    return written;
}

namespace {

void recheck_row(const Json& doc, const std::filesystem::path& base,
                 std::vector<std::string>& failures) {
    const unsigned long m = doc.at("m").get<unsigned long>();
    const std::string label = "m=" + std::to_string(m);
    auto mismatch = [&](const std::string& what, const std::string& stored,
                        const std::string& derived) {
        failures.push_back(label + ": " + what + " mismatch: report says " + stored +
                           ", set file gives " + derived);
    };

    const ConvexSet set = read_set_file(base / doc.at("set_file").get<std::string>());
    const long long n = doc.at("n").get<long long>();
    if (static_cast<long long>(set.size()) != n || n != 2 * static_cast<long long>(m)) {
        mismatch("size", std::to_string(n) + " (= 2m)", std::to_string(set.size()));
        return; // every other figure depends on the set
    }

    // The parameters must regenerate the stored set exactly.
    const Rational delta = Rational::parse(doc.at("delta").get<std::string>());
    const Integer scale = integer_from_json(doc.at("scale"));
    auto [regenerated, rescale] = construct(m, delta).set.dilate_to_integers();
    if (rescale != scale)
        mismatch("scale", scale.get_str(), rescale.get_str());
    else if (!(regenerated == set))
        failures.push_back(label + ": stored set differs from the construction it claims");

    DiffStats stats = diff_stats(set);
    const Integer n_big = to_integer(stats.n);
    const Integer energy = integer_from_json(doc.at("energy"));
    if (stats.energy != energy)
        mismatch("energy", energy.get_str(), stats.energy.get_str());
    const std::string energy_ratio = power_ratio_decimal(stats.energy, n_big, 5, 2);
    if (doc.at("energy_ratio").get<std::string>() != energy_ratio)
        mismatch("energy_ratio", doc.at("energy_ratio").get<std::string>(), energy_ratio);

    const long long max_sum = max_rep_sum(set).count;
    if (doc.at("max_sum_rep").get<long long>() != max_sum)
        mismatch("max_sum_rep", std::to_string(doc.at("max_sum_rep").get<long long>()),
                 std::to_string(max_sum));
    const std::string sum_ratio = power_ratio_decimal(to_integer(max_sum), n_big, 2, 3);
    if (doc.at("sum_ratio").get<std::string>() != sum_ratio)
        mismatch("sum_ratio", doc.at("sum_ratio").get<std::string>(), sum_ratio);

    const Rational d = Rational::parse(doc.at("d").get<std::string>());
    const long long d_count = rep_diff(set, d);
    if (d_count != static_cast<long long>(m))
        mismatch("count of the rich difference", std::to_string(m), std::to_string(d_count));

    for (const Json& entry : doc.at("rich")) {
        const long long t = entry.at("t").get<long long>();
        const long long stored = entry.at("count").get<long long>();
        const long long derived = rich_count(stats, t);
        if (stored != derived)
            mismatch("rich count at t=" + std::to_string(t), std::to_string(stored),
                     std::to_string(derived));
        const std::string ratio =
            power_ratio_decimal(to_integer(derived) * to_integer(t) * to_integer(t) * to_integer(t), n_big,
                                3, 1);
        if (entry.at("ratio").get<std::string>() != ratio)
            mismatch("rich ratio at t=" + std::to_string(t),
                     entry.at("ratio").get<std::string>(), ratio);
    }
}

} // namespace

RecheckResult recheck_scaling_report(const std::filesystem::path& companion_path) {
    Json companion;
    try {
        companion = Json::parse(read_text_file(companion_path));
    } catch (const Json::parse_error& e) {
        throw ValidationError("cannot parse " + companion_path.string() + ": " + e.what());
    }
    if (!companion.is_object() || !companion.contains("rows") || !companion["rows"].is_array())
        throw ValidationError("report companion must be an object with a \"rows\" array");

    RecheckResult result;
    const std::filesystem::path base = companion_path.parent_path();
    for (const Json& doc : companion["rows"]) {
        ++result.rows;
        try {
            recheck_row(doc, base, result.failures);
        } catch (const Json::exception& e) {
            result.failures.push_back("row " + std::to_string(result.rows) +
                                      ": malformed: " + e.what());
        } catch (const ValidationError& e) {
            result.failures.push_back("row " + std::to_string(result.rows) + ": " + e.what());
        }
    }
    return result;
}

} // namespace convexdiff
