#include "trirhombus/serialize.hpp"

#include <array>
#include <sstream>

#include <json.hpp>

namespace trirhombus {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 13> kCsvColumns = {
    "a",           "b",          "c", "side", "sin_theta", "cos_theta", "common_perimeter", "common_area",
    "scale_lambda", "u", "v_canonical", "multiple", "torsion_added"};

Json to_json(const PairCertificate& c) {
    Json j;
    j["triangle"] = {{"a", to_string(c.tri_a)}, {"b", to_string(c.tri_b)}, {"c", to_string(c.tri_c)}};
    j["rhombus"] = {{"side", to_string(c.rhombus_side)},
                    {"sin_theta", c.sin_theta.str()},
                    {"cos_theta", c.cos_theta.str()}};
    j["common_perimeter"] = to_string(c.common_perimeter);
    j["common_area"] = c.common_area.str();
    j["scale_lambda"] = to_string(c.scale_lambda);
    j["param"] = {{"u", c.u.str()}, {"v_canonical", c.v_canonical.str()}};
    j["provenance"] = {{"multiple", std::to_string(c.source_multiple)}, {"torsion_added", c.torsion_added}};
    return j;
}

const Json& field(const Json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return obj.at(key);
}

std::string string_field(const Json& obj, const char* key) {
    const Json& v = field(obj, key);
    if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

Integer integer_field(const Json& obj, const char* key) { return parse_integer(string_field(obj, key)); }

Rational rational_field(const Json& obj, const char* key) {
    return Rational::parse(string_field(obj, key), /*strict=*/true);
}

std::int64_t small_integer(std::string_view text) {
    const Integer z = parse_integer(text);
    if (!z.fits_slong_p()) throw ParseError("multiple out of range: " + std::string(text));
    return z.get_si();
}

PairCertificate from_json(const Json& j) {
    const Json& tri = field(j, "triangle");
    const Json& rho = field(j, "rhombus");
    const Json& param = field(j, "param");
    const Json& prov = field(j, "provenance");
    const Json& torsion = field(prov, "torsion_added");
    if (!torsion.is_boolean()) throw ParseError("field 'torsion_added' must be a boolean");

    PairCertificate c;
    c.tri_a = integer_field(tri, "a");
    c.tri_b = integer_field(tri, "b");
    c.tri_c = integer_field(tri, "c");
    c.rhombus_side = integer_field(rho, "side");
    c.sin_theta = rational_field(rho, "sin_theta");
    c.cos_theta = rational_field(rho, "cos_theta");
    c.common_perimeter = integer_field(j, "common_perimeter");
    c.common_area = rational_field(j, "common_area");
    c.scale_lambda = integer_field(j, "scale_lambda");
    c.u = rational_field(param, "u");
    c.v_canonical = rational_field(param, "v_canonical");
    c.source_multiple = small_integer(string_field(prov, "multiple"));
    c.torsion_added = torsion.get<bool>();
    return c;
}

std::vector<PairCertificate> parse_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    const Json& list = field(doc, "certificates");
    if (!list.is_array()) throw ParseError("'certificates' must be an array");
    std::vector<PairCertificate> out;
    for (const Json& item : list) out.push_back(from_json(item));
    return out;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::istringstream is(line);
    std::string cell;
    while (std::getline(is, cell, sep)) cells.push_back(cell);
    if (!line.empty() && line.back() == sep) cells.emplace_back();
    return cells;
}

std::vector<PairCertificate> parse_csv(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    std::vector<PairCertificate> out;
    bool header = true;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() != kCsvColumns.size()) {
            throw ParseError("CSV row has " + std::to_string(cells.size()) + " columns, expected " +
                             std::to_string(kCsvColumns.size()));
        }
        if (header) {
            header = false;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (cells[i] != kCsvColumns[i]) throw ParseError("unexpected CSV header");
            }
            continue;
        }
        PairCertificate c;
        c.tri_a = parse_integer(cells[0]);
        c.tri_b = parse_integer(cells[1]);
        c.tri_c = parse_integer(cells[2]);
        c.rhombus_side = parse_integer(cells[3]);
        c.sin_theta = Rational::parse(cells[4], true);
        c.cos_theta = Rational::parse(cells[5], true);
        c.common_perimeter = parse_integer(cells[6]);
        c.common_area = Rational::parse(cells[7], true);
        c.scale_lambda = parse_integer(cells[8]);
        c.u = Rational::parse(cells[9], true);
        c.v_canonical = Rational::parse(cells[10], true);
        c.source_multiple = small_integer(cells[11]);
        if (cells[12] != "true" && cells[12] != "false") throw ParseError("torsion_added must be true or false");
        c.torsion_added = cells[12] == "true";
        out.push_back(std::move(c));
    }
    if (header) throw ParseError("empty CSV document");
    return out;
}

}  // namespace

std::string to_json_document(const std::vector<PairCertificate>& certs) {
    Json doc;
    doc["certificates"] = Json::array();
    for (const auto& c : certs) doc["certificates"].push_back(to_json(c));
    return doc.dump(2) + "\n";
}

std::string to_csv(const std::vector<PairCertificate>& certs) {
    std::string out;
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
        out += (i ? "," : "");
        out += kCsvColumns[i];
    }
    out += '\n';
    for (const auto& c : certs) {
        out += to_string(c.tri_a) + ',' + to_string(c.tri_b) + ',' + to_string(c.tri_c) + ',' +
               to_string(c.rhombus_side) + ',' + c.sin_theta.str() + ',' + c.cos_theta.str() + ',' +
               to_string(c.common_perimeter) + ',' + c.common_area.str() + ',' + to_string(c.scale_lambda) + ',' +
               c.u.str() + ',' + c.v_canonical.str() + ',' + std::to_string(c.source_multiple) + ',' +
               (c.torsion_added ? "true" : "false") + '\n';
    }
    return out;
}

std::vector<PairCertificate> parse_certificates(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError("empty certificate document");
    return text[first] == '{' ? parse_json(text) : parse_csv(text);
}

}  // namespace trirhombus
