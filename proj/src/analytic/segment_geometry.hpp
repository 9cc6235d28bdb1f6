#pragma once

#include "polyhodge/analytic/path.hpp"

#include <vector>

namespace polyhodge::analytic::detail {

// Arclength parametrisation of one path segment.
struct SegmentGeometry {
    bool is_arc = false;
    Complex start;
    Complex end;
    Complex direction;  // unit tangent of a line
    Complex center;
    Real radius = 0;
    Real start_angle = 0;
    Real sweep = 0;
    Real length = 0;

    Complex point(const Real& s) const;
    Complex tangent(const Real& s) const;
    // Smallest distance from the segment to the point a.
    Real distance_to(const Complex& a) const;
};

std::vector<SegmentGeometry> geometry(const PathSpec& path);

}  // namespace polyhodge::analytic::detail
