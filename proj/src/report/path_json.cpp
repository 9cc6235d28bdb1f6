#include "polyhodge/report/path_json.hpp"

#include "polyhodge/errors.hpp"

#include <fstream>

namespace polyhodge::report {

namespace {

Real scalar(const Json& j, const char* what) {
    if (j.is_number()) return Real(j.get<double>());
    if (j.is_string()) {
        try {
            return Real(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw DomainError(std::string("path: ") + what + " is not a number");
}

analytic::Complex point(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) throw DomainError(std::string("path: ") + what + " must be [re, im]");
    return {scalar(j[0], what), scalar(j[1], what)};
}

}  // namespace

analytic::PathSpec path_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("segments"))
        throw DomainError("path: need \"base\" and \"segments\"");
    analytic::PathSpec path;
    path.base = point(j.at("base"), "base");
    if (!j.at("segments").is_array()) throw DomainError("path: \"segments\" must be an array");
    for (const auto& s : j.at("segments")) {
        if (s.is_object() && s.size() == 1 && s.contains("line")) {
            path.segments.emplace_back(analytic::LineSegment{point(s.at("line"), "line end")});
        } else if (s.is_object() && s.size() == 1 && s.contains("arc")) {
            const auto& arc = s.at("arc");
            if (!arc.is_object() || !arc.contains("center") || !arc.contains("sweep"))
                throw DomainError("path: arc needs \"center\" and \"sweep\"");
            path.segments.emplace_back(analytic::ArcSegment{point(arc.at("center"), "arc center"),
                                                            scalar(arc.at("sweep"), "arc sweep")});
        } else {
            throw DomainError("path: segment must be {\"line\": ...} or {\"arc\": ...}");
        }
    }
    if (j.contains("closed")) {
        if (!j.at("closed").is_boolean()) throw DomainError("path: \"closed\" must be a boolean");
        path.closed = j.at("closed").get<bool>();
    }
    return path;
}

Json path_to_json(const analytic::PathSpec& path) {
    Json segments = Json::array();
    for (const auto& s : path.segments) {
        if (const auto* line = std::get_if<analytic::LineSegment>(&s)) {
            segments.push_back({{"line", encode(line->end)}});
        } else {
            const auto& arc = std::get<analytic::ArcSegment>(s);
            Json body;
            body["center"] = encode(arc.center);
            body["sweep"] = encode(arc.sweep);
            segments.push_back({{"arc", body}});
        }
    }
    Json out;
    out["base"] = encode(path.base);
    out["segments"] = segments;
    out["closed"] = path.closed;
    return out;
}

analytic::PathSpec load_path(const std::string& name_or_file) {
    if (name_or_file == "loop0") return analytic::canonical_loop(analytic::Puncture::Zero);
    if (name_or_file == "loop1") return analytic::canonical_loop(analytic::Puncture::One);
    std::ifstream in(name_or_file);
    if (!in) throw DomainError("path: cannot open " + name_or_file);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DomainError(std::string("path: invalid JSON: ") + e.what());
    }
    return path_from_json(j);
}

}  // namespace polyhodge::report
