#include "polyhodge/hodge/filtration.hpp"

#include "polyhodge/errors.hpp"

#include <algorithm>
#include <sstream>

namespace polyhodge::hodge {

using analytic::Complex;
using analytic::ComplexMatrix;
using Columns = std::vector<std::vector<Complex>>;

FilteredFiber::FilteredFiber(const analytic::PeriodMatrix& lambda) : FilteredFiber(lambda.n, lambda.entries) {}

FilteredFiber::FilteredFiber(int n, ComplexMatrix hodge_columns) : n_(n), columns_(std::move(hodge_columns)) {
    if (n < 0 || columns_.size() != n + 1) throw DomainError("FilteredFiber: column matrix has the wrong size");
}

FilteredFiber FilteredFiber::with_column_replaced(int target, int source) const {
    ComplexMatrix cols = columns_;
    for (int r = 0; r <= n_; ++r) cols(r, target) = columns_(r, source);
    return FilteredFiber(n_, std::move(cols));
}

Columns FilteredFiber::weight_step(int k) const {
    Columns out;
    for (int i = 0; i <= std::min(k, n_); ++i) {
        std::vector<Complex> e(n_ + 1);
        e[i] = Complex(1);
        out.push_back(std::move(e));
    }
    return out;
}

Columns FilteredFiber::hodge_step(int k) const {
    Columns out;
    for (int c = std::max(k, 0); c <= n_; ++c) {
        std::vector<Complex> v(n_ + 1);
        for (int r = 0; r <= n_; ++r) v[r] = columns_(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

int span_rank(const Columns& columns, double threshold) {
    if (columns.empty()) return 0;
    Columns rows = columns;
    Real largest = 0;
    for (const auto& v : rows) {
        Real norm = 0;
        for (const auto& x : v) norm += x.norm();
        largest = std::max(largest, Real(sqrt(norm)));
    }
    if (largest == 0) return 0;
    const Real cutoff = Real(threshold) * largest;

    const std::size_t width = rows.front().size();
    int rank = 0;
    for (std::size_t col = 0; col < width && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = rank;
        Real best = -1;
        for (std::size_t r = rank; r < rows.size(); ++r) {
            const Real a = rows[r][col].abs();
            if (a > best) {
                best = a;
                pivot = r;
            }
        }
        if (best <= cutoff) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const Complex f = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < width; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

namespace {

int intersection_dimension(const Columns& a, const Columns& b) {
    Columns both = a;
    both.insert(both.end(), b.begin(), b.end());
    return span_rank(a) + span_rank(b) - span_rank(both);
}

}  // namespace

std::vector<std::pair<int, int>> graded_dimensions(const FilteredFiber& fiber) {
    std::vector<std::pair<int, int>> out;
    int below = 0;
    for (int k = 0; k <= fiber.weight(); ++k) {
        const int here = span_rank(fiber.weight_step(k));
        out.emplace_back(2 * k, here - below);
        below = here;
    }
    return out;
}

TransversalityReport hodge_transversality_check(const FilteredFiber& fiber) {
    TransversalityReport report;
    for (int k = 0; k <= fiber.weight(); ++k) {
        const Columns w = fiber.weight_step(k);
        const Columns w_below = k > 0 ? fiber.weight_step(k - 1) : Columns{};
        const Columns f = fiber.hodge_step(k);
        const Columns f_next = fiber.hodge_step(k + 1);

        const int meet = intersection_dimension(f, w);
        const int meet_below = intersection_dimension(f, w_below);
        const int next_meet = intersection_dimension(f_next, w);
        const int next_meet_below = intersection_dimension(f_next, w_below);

        // Image of F^k cap W_{2k} in Gr^W_{2k} and the kernel of that map.
        const int image = meet - meet_below;
        const bool iso = image == 1 && meet_below == 0;
        const bool next_vanishes = next_meet - next_meet_below == 0;
        if (!iso || !next_vanishes) {
            std::ostringstream out;
            out << "k=" << k << ": dim(F^k cap W)=" << meet << ", dim(F^k cap W_below)=" << meet_below
                << ", image of F^{k+1} in Gr=" << next_meet - next_meet_below;
            report.pure = false;
            report.failing_step = k;
            report.detail = out.str();
            return report;
        }
    }
    return report;
}

}  // namespace polyhodge::hodge
