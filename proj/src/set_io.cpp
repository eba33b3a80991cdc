#include "convexdiff/set_io.hpp"

#include "convexdiff/errors.hpp"

#include <fstream>
#include <sstream>

namespace convexdiff {

Json set_to_json(const ConvexSet& set) {
    Json elements = Json::array();
    for (const Rational& a : set.elements())
        elements.push_back(a.str());
    Json doc;
    doc["elements"] = std::move(elements);
    return doc;
}

ConvexSet set_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("elements"))
        throw ValidationError("set document must be an object with an \"elements\" array");
    const Json& elements = doc["elements"];
    if (!elements.is_array())
        throw ValidationError("\"elements\" must be an array of rational strings");
    std::vector<Rational> parsed;
    parsed.reserve(elements.size());
    for (const Json& item : elements) {
        if (!item.is_string())
            throw ValidationError("set elements must be rational strings, got " + item.dump());
        parsed.push_back(Rational::parse(item.get<std::string>()));
    }
    return ConvexSet::validate(std::move(parsed));
}

ConvexSet read_set_file(const std::filesystem::path& path) {
    Json doc;
    try {
        doc = Json::parse(read_text_file(path));
    } catch (const Json::parse_error& e) {
        throw ValidationError("cannot parse " + path.string() + ": " + e.what());
    }
    return set_from_json(doc);
}

void write_set_file(const std::filesystem::path& path, const ConvexSet& set) {
    write_text_file(path, set_to_json(set).dump(2) + "\n");
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open " + path.string() + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ValidationError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out)
        throw ValidationError("failed writing " + path.string());
}

Json integer_to_json(const Integer& value) {
    if (value.fits_slong_p())
        return Json(static_cast<long long>(value.get_si()));
    return Json(value.get_str());
}

Integer integer_from_json(const Json& value) {
    if (value.is_number_integer())
        return Integer(static_cast<long>(value.get<long long>()));
    if (value.is_string()) {
        const Rational parsed = Rational::parse(value.get<std::string>());
        if (!parsed.is_integer())
            throw ValidationError("expected an integer, got " + value.dump());
        return parsed.numerator();
    }
    throw ValidationError("expected an integer, got " + value.dump());
}

} // namespace convexdiff
