#pragma once

// Core files: a small JSON document holding the center line, its truncation
// and the over/under assignment at every crossing.
//
//   {
//     "version": 1,
//     "name": "trefoil", "notes": "...",            (optional)
//     "closed": false,
//     "vertices": [[x, y], ...],
//     "truncation": {"start_offset": 0, "end_offset": 0, "cut": "flush"},
//     "crossings": [{"i": 0, "j": 2, "over": 0}, ...]
//   }
//
// Syntax errors carry line:column, semantic errors carry the field path.

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "json.hpp"

#include "flatknot/ribbon.hpp"

namespace flatknot {

inline constexpr int kCoreFileVersion = 1;

struct CoreFile {
    std::string name;
    std::string notes;
    CoreCurve core;
    Weaving weaving;
};

namespace detail {

using Json = nlohmann::ordered_json;

[[noreturn]] inline void invalid(const std::string& path, const std::string& msg) {
    throw Error(ErrorCode::ValidationError, path + ": " + msg);
}

inline std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
        if (text[k] == '\n') { ++line; col = 1; } else { ++col; }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

inline const Json& field(const Json& obj, const char* key, const std::string& path) {
    const auto it = obj.find(key);
    if (it == obj.end()) invalid(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

inline Real number(const Json& j, const std::string& path) {
    if (!j.is_number()) invalid(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) invalid(path, "not finite");
    return v;
}

inline std::size_t index(const Json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) invalid(path, "expected a non-negative integer");
    return j.get<std::size_t>();
}

inline std::string text_field(const Json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) return {};
    if (!it->is_string()) invalid(key, "expected a string");
    return it->get<std::string>();
}

}  // namespace detail

inline CoreFile parse_core_file(std::string_view text) {
    using detail::Json;
    using detail::invalid;
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        // strip the library's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix
        std::string msg = e.what();
        if (const auto p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
        throw Error(ErrorCode::ParseError, detail::line_col(text, e.byte) + ": " + msg);
    }
    if (!doc.is_object()) invalid("(root)", "expected an object");

    for (const auto& [key, value] : doc.items()) {
        if (key != "version" && key != "name" && key != "notes" && key != "closed" && key != "vertices" &&
            key != "truncation" && key != "crossings") {
            invalid(key, "unknown field");
        }
    }
    const Json& version = detail::field(doc, "version", "");
    if (!version.is_number_integer() || version.get<int>() != kCoreFileVersion) {
        invalid("version", "unsupported (expected " + std::to_string(kCoreFileVersion) + ")");
    }

    const Json& closed = detail::field(doc, "closed", "");
    if (!closed.is_boolean()) invalid("closed", "expected true or false");

    const Json& verts = detail::field(doc, "vertices", "");
    if (!verts.is_array()) invalid("vertices", "expected an array of [x, y] pairs");
    std::vector<Point2> pts;
    for (std::size_t k = 0; k < verts.size(); ++k) {
        const std::string path = "vertices[" + std::to_string(k) + "]";
        const Json& v = verts[k];
        if (!v.is_array() || v.size() != 2) invalid(path, "expected [x, y]");
        pts.push_back({detail::number(v[0], path + "[0]"), detail::number(v[1], path + "[1]")});
    }

    std::optional<Truncation> trunc;
    if (const auto it = doc.find("truncation"); it != doc.end() && !it->is_null()) {
        if (!it->is_object()) invalid("truncation", "expected an object");
        Truncation t;
        t.start_offset = detail::number(detail::field(*it, "start_offset", "truncation"), "truncation.start_offset");
        t.end_offset = detail::number(detail::field(*it, "end_offset", "truncation"), "truncation.end_offset");
        if (const auto c = it->find("cut"); c != it->end()) {
            if (*c == "flush") t.cut = CutStyle::flush;
            else if (*c == "perpendicular") t.cut = CutStyle::perpendicular;
            else invalid("truncation.cut", "expected \"flush\" or \"perpendicular\"");
        }
        trunc = t;
    }

    Weaving weaving;
    if (const auto it = doc.find("crossings"); it != doc.end()) {
        if (!it->is_array()) invalid("crossings", "expected an array");
        for (std::size_t e = 0; e < it->size(); ++e) {
            const std::string path = "crossings[" + std::to_string(e) + "]";
            const Json& c = (*it)[e];
            if (!c.is_object()) invalid(path, "expected {\"i\", \"j\", \"over\"}");
            weaving.crossings.push_back({detail::index(detail::field(c, "i", path), path + ".i"),
                                         detail::index(detail::field(c, "j", path), path + ".j"),
                                         detail::index(detail::field(c, "over", path), path + ".over")});
        }
    }

    std::optional<CoreCurve> core;
    try {
        core.emplace(std::move(pts), closed.get<bool>(), trunc);
    } catch (const Error& e) {
        const bool about_truncation = std::string_view(e.what()).find("truncation") != std::string_view::npos;
        invalid(about_truncation ? "truncation" : "vertices", e.what());
    }
    validate_weaving(*core, weaving);
    return {detail::text_field(doc, "name"), detail::text_field(doc, "notes"), std::move(*core), std::move(weaving)};
}

inline CoreFile read_core_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_core_file(buf.str());
}

// Numbers are written as the shortest decimal that reads back to the same
// double.
inline std::string serialize_core_file(const CoreCurve& core, const Weaving& weaving, const std::string& name = {},
                                       const std::string& notes = {}) {
    using detail::Json;
    Json doc = Json::object();
    doc["version"] = kCoreFileVersion;
    if (!name.empty()) doc["name"] = name;
    if (!notes.empty()) doc["notes"] = notes;
    doc["closed"] = core.closed();
    Json verts = Json::array();
    for (const auto& p : core.vertices()) verts.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
    doc["vertices"] = std::move(verts);
    if (const auto& t = core.truncation()) {
        doc["truncation"] = {{"start_offset", static_cast<double>(t->start_offset)},
                             {"end_offset", static_cast<double>(t->end_offset)},
                             {"cut", t->cut == CutStyle::flush ? "flush" : "perpendicular"}};
    }
    Json cr = Json::array();
    for (const auto& c : weaving.crossings) cr.push_back({{"i", c.i}, {"j", c.j}, {"over", c.over}});
    doc["crossings"] = std::move(cr);
    return doc.dump(2) + "\n";
}

inline void write_core_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error(ErrorCode::ParseError, path + ": cannot write");
}

}  // namespace flatknot
