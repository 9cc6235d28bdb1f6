#pragma once

#include "polyhodge/analytic/complex.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace polyhodge::analytic {

inline constexpr double kDefaultPathMargin = 1e-3;

struct LineSegment {
    Complex end;
};

// Arc around `center` starting at the current point; positive sweep is
// counterclockwise.
struct ArcSegment {
    Complex center;
    Real sweep;
};

using PathSegment = std::variant<LineSegment, ArcSegment>;

// Piecewise path in C \ {0, 1}. Segments start where the previous one ends,
// so continuity holds by construction.
struct PathSpec {
    Complex base;
    std::vector<PathSegment> segments;
    bool closed = false;
};

enum class Puncture { Zero = 0, One = 1 };

// Base 1/2, straight to distance 1/4 from the puncture, one counterclockwise
// turn of radius 1/4, straight back.
PathSpec canonical_loop(Puncture which);

// Points where each segment starts, plus the final endpoint.
std::vector<Complex> vertices(const PathSpec& path);
Complex endpoint(const PathSpec& path);
Real arclength(const PathSpec& path);

// Smallest distance from the path to {0, 1}.
Real distance_to_punctures(const PathSpec& path);

// Throws DomainError when the path comes closer than `margin` to 0 or 1, has
// a degenerate segment, or claims to be closed without returning to its base.
void validate(const PathSpec& path, double margin = kDefaultPathMargin);

PathSpec reversed(const PathSpec& path);
// `second` must start where `first` ends.
PathSpec concatenate(const PathSpec& first, const PathSpec& second);

// Winding numbers of a closed path around (0, 1).
std::pair<int, int> winding_numbers(const PathSpec& path);

std::string describe(const PathSpec& path);

}  // namespace polyhodge::analytic
