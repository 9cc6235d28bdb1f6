#include "polyhodge/report/report.hpp"

#include <sstream>

namespace polyhodge::report {

Json encode(const Real& x) { return to_decimal(x); }

Json encode(const analytic::Complex& z) { return Json::array({to_decimal(z.real()), to_decimal(z.imag())}); }

Json encode(const analytic::ComplexMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.size(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.size(); ++c) row.push_back(encode(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json encode(const exact::Rational& q) { return exact::to_string(q); }

Json encode(const exact::RationalMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(encode(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const RunReport& report) {
    Json out;
    out["command"] = report.command;
    out["params"] = report.params;
    out["result"] = report.result;
    out["verdict"] = report.verdict;
    out["elapsed_ms"] = report.elapsed_ms ? Json(*report.elapsed_ms) : Json(nullptr);
    return out;
}

std::string render_json(const RunReport& report) { return to_json(report).dump(2) + "\n"; }

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void flatten(const Json& node, const std::string& key, std::ostringstream& out) {
    if (node.is_object()) {
        if (node.empty()) out << csv_field(key) << ",\n";
        for (const auto& [k, v] : node.items()) flatten(v, key.empty() ? k : key + "." + k, out);
    } else if (node.is_array()) {
        if (node.empty()) out << csv_field(key) << ",\n";
        for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], key + "[" + std::to_string(i) + "]", out);
    } else if (node.is_string()) {
        out << csv_field(key) << "," << csv_field(node.get<std::string>()) << "\n";
    } else if (node.is_null()) {
        out << csv_field(key) << ",\n";
    } else {
        out << csv_field(key) << "," << csv_field(node.dump()) << "\n";
    }
}

}  // namespace

std::string render_csv(const RunReport& report) {
    std::ostringstream out;
    out << "key,value\n";
    flatten(to_json(report), "", out);
    return out.str();
}

}  // namespace polyhodge::report
