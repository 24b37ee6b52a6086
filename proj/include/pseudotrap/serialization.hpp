#ifndef PSEUDOTRAP_SERIALIZATION_HPP
#define PSEUDOTRAP_SERIALIZATION_HPP

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pseudotrap/system.hpp"

namespace pseudotrap {

namespace detail {

inline const nlohmann::json& require_key(const nlohmann::json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw parse_error(std::string("missing field \"") + key + "\"");
    return *it;
}

inline std::int64_t require_int(const nlohmann::json& v, const std::string& what) {
    if (!v.is_number_integer()) throw parse_error(what + " must be an integer");
    return v.get<std::int64_t>();
}

} // namespace detail

/// Parses a system document:
///   {"num_points": N, "labels": [...]?, "scale": s, "dist": [[...]], "map": [...]}
/// Throws parse_error for malformed JSON or field types and validation_error for
/// broken invariants (non-metric dist, out-of-range map entries).
inline FiniteSystem load_system(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("system document must be a JSON object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const auto& k = it.key();
        if (k != "num_points" && k != "labels" && k != "scale" && k != "dist" && k != "map")
            throw parse_error("unknown field \"" + k + "\"");
    }

    const auto n = detail::require_int(detail::require_key(doc, "num_points"), "num_points");
    if (n <= 0) throw validation_error("num_points must be positive");
    const auto scale = detail::require_int(detail::require_key(doc, "scale"), "scale");

    const auto& jd = detail::require_key(doc, "dist");
    if (!jd.is_array()) throw parse_error("dist must be an array of rows");
    std::vector<std::vector<Distance>> dist;
    dist.reserve(jd.size());
    for (std::size_t i = 0; i < jd.size(); ++i) {
        if (!jd[i].is_array()) throw parse_error("dist[" + std::to_string(i) + "] must be an array");
        auto& row = dist.emplace_back();
        for (std::size_t j = 0; j < jd[i].size(); ++j)
            row.push_back(detail::require_int(jd[i][j], "dist[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }

    const auto& jm = detail::require_key(doc, "map");
    if (!jm.is_array()) throw parse_error("map must be an array");
    std::vector<Point> map;
    for (std::size_t i = 0; i < jm.size(); ++i) {
        const auto v = detail::require_int(jm[i], "map[" + std::to_string(i) + "]");
        if (v < 0 || v >= n)
            throw validation_error("map[" + std::to_string(i) + "] = " + std::to_string(v) +
                                   " is not a valid point index");
        map.push_back(static_cast<Point>(v));
    }
    if (static_cast<std::int64_t>(map.size()) != n)
        throw validation_error("map has " + std::to_string(map.size()) + " entries, expected " + std::to_string(n));

    std::optional<std::vector<std::string>> labels;
    if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_array()) throw parse_error("labels must be an array of strings");
        auto& l = labels.emplace();
        for (const auto& v : *it) {
            if (!v.is_string()) throw parse_error("labels must be an array of strings");
            l.push_back(v.get<std::string>());
        }
    }
    return FiniteSystem(std::move(dist), std::move(map), scale, std::move(labels));
}

/// Canonical text form: fixed key order, 2-space indent, one dist row per
/// line, LF endings, trailing newline. Equal systems give identical bytes.
inline std::string save_system(const FiniteSystem& s) {
    const std::size_t n = s.size();
    std::ostringstream out;
    out << "{\n  \"num_points\": " << n << ",\n";
    if (s.labels()) {
        out << "  \"labels\": [";
        for (std::size_t i = 0; i < n; ++i) out << (i ? ", " : "") << nlohmann::json((*s.labels())[i]).dump();
        out << "],\n";
    }
    out << "  \"scale\": " << s.scale() << ",\n  \"dist\": [\n";
    for (Point i = 0; i < n; ++i) {
        out << "    [";
        for (Point j = 0; j < n; ++j) out << (j ? ", " : "") << s.dist(i, j);
        out << (i + 1 < n ? "],\n" : "]\n");
    }
    out << "  ],\n  \"map\": [";
    for (Point i = 0; i < n; ++i) out << (i ? ", " : "") << s.f(i);
    out << "]\n}\n";
    return out.str();
}

/// FNV-1a (64-bit) of the canonical text, as "fnv1a64:<16 hex digits>".
inline std::string system_hash(const FiniteSystem& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : save_system(s)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

inline FiniteSystem load_system_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open system file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_system(buf.str());
}

} // namespace pseudotrap

#endif // PSEUDOTRAP_SERIALIZATION_HPP
