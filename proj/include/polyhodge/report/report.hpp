#pragma once

#include "polyhodge/analytic/complex.hpp"
#include "polyhodge/exact/matrix.hpp"
#include "polyhodge/exact/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace polyhodge::report {

using Json = nlohmann::ordered_json;

// Decimal strings at the working precision; complex values as [re, im].
Json encode(const Real& x);
Json encode(const analytic::Complex& z);
Json encode(const analytic::ComplexMatrix& m);
Json encode(const exact::Rational& q);
Json encode(const exact::RationalMatrix& m);

struct RunReport {
    std::string command;
    Json params = Json::object();
    Json result = Json::object();
    std::string verdict;                 // "pass", "fail" or "ok"
    std::optional<double> elapsed_ms;    // null unless timing was requested
};

Json to_json(const RunReport& report);
// Pretty-printed JSON followed by a newline.
std::string render_json(const RunReport& report);
// Header "key,value", then one row per scalar leaf; keys are dotted object
// paths with [i] for array positions.
std::string render_csv(const RunReport& report);

}  // namespace polyhodge::report
