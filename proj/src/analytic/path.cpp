#include "polyhodge/analytic/path.hpp"

#include "polyhodge/errors.hpp"
#include "segment_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <iomanip>
#include <sstream>

namespace polyhodge::analytic {
namespace detail {

Complex SegmentGeometry::point(const Real& s) const {
    if (!is_arc) return start + direction * s;
    const Real angle = start_angle + (sweep > 0 ? s : Real(-s)) / radius;
    return center + Complex::polar(radius, angle);
}

Complex SegmentGeometry::tangent(const Real& s) const {
    if (!is_arc) return direction;
    const Real angle = start_angle + (sweep > 0 ? s : Real(-s)) / radius;
    const Complex unit = Complex::polar(Real(1), angle);
    // d/ds of center + r e^{i angle} with d(angle)/ds = +-1/r.
    return sweep > 0 ? Complex::i() * unit : Complex(-Complex::i() * unit);
}

Real SegmentGeometry::distance_to(const Complex& a) const {
    if (!is_arc) {
        const Complex chord = end - start;
        const Complex rel = a - start;
        Real t = (rel.real() * chord.real() + rel.imag() * chord.imag()) / chord.norm();
        if (t < 0) t = 0;
        if (t > 1) t = 1;
        return (start + chord * t - a).abs();
    }
    const Complex rel = a - center;
    const Real d = rel.abs();
    const Real radial = abs(d - radius);
    const Real two_pi = 2 * pi_real();
    if (abs(sweep) >= two_pi || d == 0) return d == 0 ? radius : radial;
    // Is the direction of a from the center inside the swept range?
    Real offset = rel.arg() - start_angle;
    if (sweep < 0) offset = -offset;
    offset = offset - two_pi * floor(offset / two_pi);
    if (offset <= abs(sweep)) return radial;
    return std::min((start - a).abs(), (end - a).abs());
}

std::vector<SegmentGeometry> geometry(const PathSpec& path) {
    std::vector<SegmentGeometry> out;
    out.reserve(path.segments.size());
    Complex current = path.base;
    for (const auto& segment : path.segments) {
        SegmentGeometry g;
        g.start = current;
        if (const auto* line = std::get_if<LineSegment>(&segment)) {
            g.end = line->end;
            const Complex chord = g.end - g.start;
            g.length = chord.abs();
            if (g.length > 0) g.direction = chord / g.length;
        } else {
            const auto& arc = std::get<ArcSegment>(segment);
            g.is_arc = true;
            g.center = arc.center;
            g.sweep = arc.sweep;
            const Complex rel = current - arc.center;
            g.radius = rel.abs();
            g.start_angle = rel.arg();
            g.length = g.radius * abs(arc.sweep);
            g.end = arc.center + Complex::polar(g.radius, g.start_angle + arc.sweep);
        }
        current = g.end;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace detail

namespace {

bool close_enough(const Complex& a, const Complex& b) {
    const Real scale = std::max(Real(1), a.abs());
    return (a - b).abs() <= Real(1e-9) * scale;
}

std::string format_double(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << (x == 0.0 ? 0.0 : x);
    return out.str();
}

std::string format_point(const Complex& z) {
    return "(" + format_double(z.real().convert_to<double>()) + "," + format_double(z.imag().convert_to<double>()) + ")";
}

// Change of arg(z - a) along a segment, by chords short enough that no chord
// turns by more than a quarter turn around a.
double arg_change(const detail::SegmentGeometry& g, const Complex& a) {
    const std::complex<double> target = a.to_std();
    if (!g.is_arc) return std::arg((g.end.to_std() - target) / (g.start.to_std() - target));
    const double dist = g.distance_to(a).convert_to<double>();
    const double length = g.length.convert_to<double>();
    const int pieces = std::max(16, static_cast<int>(std::ceil(4.0 * length / dist)));
    double total = 0.0;
    std::complex<double> prev = g.start.to_std() - target;
    for (int i = 1; i <= pieces; ++i) {
        const Real s = g.length * i / pieces;
        const std::complex<double> next = g.point(s).to_std() - target;
        total += std::arg(next / prev);
        prev = next;
    }
    return total;
}

}  // namespace

PathSpec canonical_loop(Puncture which) {
    const Real two_pi = 2 * pi_real();
    PathSpec loop;
    loop.base = Complex(0.5);
    loop.closed = true;
    if (which == Puncture::Zero) {
        loop.segments = {LineSegment{Complex(0.25)}, ArcSegment{Complex(0), two_pi}, LineSegment{Complex(0.5)}};
    } else {
        loop.segments = {LineSegment{Complex(0.75)}, ArcSegment{Complex(1), two_pi}, LineSegment{Complex(0.5)}};
    }
    return loop;
}

std::vector<Complex> vertices(const PathSpec& path) {
    std::vector<Complex> out{path.base};
    for (const auto& g : detail::geometry(path)) out.push_back(g.end);
    return out;
}

Complex endpoint(const PathSpec& path) { return vertices(path).back(); }

Real arclength(const PathSpec& path) {
    Real total = 0;
    for (const auto& g : detail::geometry(path)) total += g.length;
    return total;
}

Real distance_to_punctures(const PathSpec& path) {
    Real best = std::min(path.base.abs(), (path.base - Complex(1)).abs());
    for (const auto& g : detail::geometry(path)) {
        best = std::min(best, g.distance_to(Complex(0)));
        best = std::min(best, g.distance_to(Complex(1)));
    }
    return best;
}

void validate(const PathSpec& path, double margin) {
    if (!path.base.is_finite()) throw DomainError("path: non-finite base point");
    for (const auto& g : detail::geometry(path)) {
        if (!g.end.is_finite() || !(g.length > 0))
            throw DomainError("path: degenerate or non-finite segment starting at " + format_point(g.start));
    }
    const Real dist = distance_to_punctures(path);
    if (dist < Real(margin))
        throw DomainError("path: comes within " + format_double(dist.convert_to<double>()) +
                          " of a puncture (margin " + format_double(margin) + ")");
    if (path.closed && !close_enough(path.base, endpoint(path)))
        throw DomainError("path: marked closed but ends at " + format_point(endpoint(path)));
}

PathSpec reversed(const PathSpec& path) {
    const auto geo = detail::geometry(path);
    PathSpec out;
    out.base = geo.empty() ? path.base : geo.back().end;
    out.closed = path.closed;
    for (auto it = geo.rbegin(); it != geo.rend(); ++it) {
        if (it->is_arc) {
            out.segments.push_back(ArcSegment{it->center, -it->sweep});
        } else {
            out.segments.push_back(LineSegment{it->start});
        }
    }
    return out;
}

PathSpec concatenate(const PathSpec& first, const PathSpec& second) {
    if (!close_enough(endpoint(first), second.base))
        throw DomainError("concatenate: second path does not start where the first ends");
    PathSpec out = first;
    out.segments.insert(out.segments.end(), second.segments.begin(), second.segments.end());
    out.closed = close_enough(endpoint(out), out.base);
    return out;
}

std::pair<int, int> winding_numbers(const PathSpec& path) {
    const double two_pi = 2.0 * std::acos(-1.0);
    double around_zero = 0.0;
    double around_one = 0.0;
    for (const auto& g : detail::geometry(path)) {
        around_zero += arg_change(g, Complex(0));
        around_one += arg_change(g, Complex(1));
    }
    return {static_cast<int>(std::lround(around_zero / two_pi)), static_cast<int>(std::lround(around_one / two_pi))};
}

std::string describe(const PathSpec& path) {
    std::ostringstream out;
    out << "base=" << format_point(path.base);
    for (const auto& segment : path.segments) {
        if (const auto* line = std::get_if<LineSegment>(&segment)) {
            out << " line" << format_point(line->end);
        } else {
            const auto& arc = std::get<ArcSegment>(segment);
            out << " arc(center=" << format_point(arc.center) << ",sweep=" << format_double(arc.sweep.convert_to<double>())
                << ")";
        }
    }
    if (path.closed) out << " closed";
    return out.str();
}

}  // namespace polyhodge::analytic
