#pragma once

#include "polyhodge/analytic/path.hpp"
#include "polyhodge/report/report.hpp"

#include <string>

namespace polyhodge::report {

// {"base": [re, im], "segments": [{"line": [re, im]} |
//  {"arc": {"center": [re, im], "sweep": radians}}], "closed": bool}.
// Coordinates may be JSON numbers or decimal strings. Throws DomainError on
// malformed input.
analytic::PathSpec path_from_json(const Json& j);
Json path_to_json(const analytic::PathSpec& path);

// "loop0", "loop1", or the name of a file holding a PathSpec document.
analytic::PathSpec load_path(const std::string& name_or_file);

}  // namespace polyhodge::report
