#include "defcolor/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "defcolor/errors.hpp"

namespace defcolor {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("document",
                         std::string("invalid JSON at byte ") +
                             std::to_string(e.byte) + ": " + e.what());
    }
}

void expect_format(const json& doc, const std::string& want) {
    if (!doc.is_object()) throw ParseError("document", "expected a JSON object");
    if (!doc.contains("format") || !doc["format"].is_string())
        throw ParseError("format", "missing format string");
    const std::string got = doc["format"].get<std::string>();
    if (got != want)
        throw ParseError("format", "expected '" + want + "', got '" + got + "'");
}

int expect_int(const json& doc, const std::string& field) {
    if (!doc.contains(field) || !doc[field].is_number_integer())
        throw ParseError(field, "missing integer field");
    return doc[field].get<int>();
}

std::vector<std::vector<int>> expect_int_lists(const json& doc,
                                               const std::string& field) {
    if (!doc.contains(field) || !doc[field].is_array())
        throw ParseError(field, "missing array field");
    std::vector<std::vector<int>> out;
    int i = 0;
    for (const auto& row : doc[field]) {
        if (!row.is_array())
            throw ParseError(field + "[" + std::to_string(i) + "]",
                             "expected an array of integers");
        std::vector<int> vals;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw ParseError(field + "[" + std::to_string(i) + "]",
                                 "expected an integer entry");
            vals.push_back(x.get<int>());
        }
        out.push_back(std::move(vals));
        ++i;
    }
    return out;
}

} // namespace

RotationSystem parse_graph(const std::string& text) {
    const json doc = parse_document(text);
    expect_format(doc, "defcolor-graph/1");
    const int n = expect_int(doc, "n");
    if (n < 0) throw ParseError("n", "vertex count must be nonnegative");
    auto rotations = expect_int_lists(doc, "rotations");
    if (static_cast<int>(rotations.size()) != n)
        throw ParseError("rotations", "expected " + std::to_string(n) + " rows");

    std::set<std::pair<int, int>> negatives;
    if (doc.contains("signs")) {
        if (!doc["signs"].is_object())
            throw ParseError("signs", "expected an object");
        for (const auto& [key, value] : doc["signs"].items()) {
            int u = 0, v = 0;
            char dash = 0;
            std::istringstream is(key);
            if (!(is >> u >> dash >> v) || dash != '-' || !is.eof() || u >= v)
                throw ParseError("signs." + key,
                                 "expected a key of the form 'u-v' with u < v");
            if (!value.is_number_integer() ||
                (value.get<int>() != 1 && value.get<int>() != -1))
                throw ParseError("signs." + key, "sign must be 1 or -1");
            if (value.get<int>() == -1) negatives.insert({u, v});
        }
    }
    try {
        return RotationSystem::from_rotations(std::move(rotations),
                                              std::move(negatives));
    } catch (const Error& e) {
        throw ParseError("rotations", e.what());
    }
}

std::string serialize_graph(const RotationSystem& rs) {
    json doc;
    doc["format"] = "defcolor-graph/1";
    doc["n"] = rs.vertex_count();
    json rot = json::array();
    for (int v = 0; v < rs.vertex_count(); ++v) rot.push_back(rs.rotation(v));
    doc["rotations"] = std::move(rot);
    if (!rs.negative_edges().empty()) {
        json signs = json::object();
        for (auto [u, v] : rs.negative_edges())
            signs[std::to_string(u) + "-" + std::to_string(v)] = -1;
        doc["signs"] = std::move(signs);
    }
    return doc.dump() + "\n";
}

ListsFile parse_lists(const std::string& text) {
    const json doc = parse_document(text);
    expect_format(doc, "defcolor-lists/1");
    ListsFile out;
    out.t = expect_int(doc, "t");
    if (out.t < 1) throw ParseError("t", "list-size parameter must be positive");
    auto lists = expect_int_lists(doc, "lists");
    for (size_t v = 0; v < lists.size(); ++v) {
        for (int c : lists[v])
            if (c < 0)
                throw ParseError("lists[" + std::to_string(v) + "]",
                                 "colour ids must be nonnegative");
    }
    out.lists = ListAssignment(std::move(lists));
    if (out.lists.size() > 0 && out.lists.min_list_size() < out.t)
        throw ParseError("lists", "some list is shorter than the declared t");
    return out;
}

std::string serialize_lists(const ListAssignment& lists, int t) {
    json doc;
    doc["format"] = "defcolor-lists/1";
    doc["t"] = t;
    json rows = json::array();
    for (int v = 0; v < lists.size(); ++v) rows.push_back(lists.list(v));
    doc["lists"] = std::move(rows);
    return doc.dump() + "\n";
}

Colouring parse_colouring(const std::string& text) {
    const json doc = parse_document(text);
    expect_format(doc, "defcolor-colouring/1");
    if (!doc.contains("colours") || !doc["colours"].is_array())
        throw ParseError("colours", "missing array field");
    std::vector<int> colours;
    int i = 0;
    for (const auto& x : doc["colours"]) {
        if (!x.is_number_integer())
            throw ParseError("colours[" + std::to_string(i) + "]",
                             "expected an integer");
        const int c = x.get<int>();
        if (c < 0 && c != kUncoloured)
            throw ParseError("colours[" + std::to_string(i) + "]",
                             "colour ids must be nonnegative (-1 = uncoloured)");
        colours.push_back(c);
        ++i;
    }
    return Colouring(std::move(colours));
}

std::string serialize_colouring(const Colouring& c) {
    json doc;
    doc["format"] = "defcolor-colouring/1";
    doc["colours"] = c.colours();
    return doc.dump() + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

} // namespace defcolor
