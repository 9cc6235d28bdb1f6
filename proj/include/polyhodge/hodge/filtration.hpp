#pragma once

#include "polyhodge/analytic/period_matrix.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polyhodge::hodge {

// Relative pivot threshold for rank decisions on spans of fiber vectors.
inline constexpr double kRankThreshold = 1e-8;

// Fiber of the polylogarithm variation at one point: W_{2k} = span(e_0..e_k)
// in the rational basis, F^k = span of columns k..n of the period matrix.
class FilteredFiber {
public:
    explicit FilteredFiber(const analytic::PeriodMatrix& lambda);
    // Arbitrary Hodge spanning columns; column k..n span F^k.
    FilteredFiber(int n, analytic::ComplexMatrix hodge_columns);

    int weight() const { return n_; }
    int dimension() const { return n_ + 1; }
    const analytic::ComplexMatrix& hodge_columns() const { return columns_; }

    // Replaces Hodge spanning column `target` by column `source`.
    FilteredFiber with_column_replaced(int target, int source) const;

    // Spanning vectors of W_{2k}, as columns of a (n+1) x (k+1) array.
    std::vector<std::vector<analytic::Complex>> weight_step(int k) const;
    // Spanning vectors of F^k.
    std::vector<std::vector<analytic::Complex>> hodge_step(int k) const;

private:
    int n_;
    analytic::ComplexMatrix columns_;
};

// Rank of a set of column vectors, pivots below threshold * (largest column
// norm) count as zero.
int span_rank(const std::vector<std::vector<analytic::Complex>>& columns, double threshold = kRankThreshold);

// (weight 2k, dim Gr^W_{2k}) for k = 0..n.
std::vector<std::pair<int, int>> graded_dimensions(const FilteredFiber& fiber);

struct TransversalityReport {
    bool pure = true;
    // First k at which the graded piece failed to be of type (k, k).
    int failing_step = -1;
    std::string detail;
};

// Each Gr^W_{2k} is pure of type (k, k): F^k meets W_{2k} in a line mapping
// isomorphically onto Gr^W_{2k}, and F^{k+1} meets W_{2k} inside W_{2k-2}.
TransversalityReport hodge_transversality_check(const FilteredFiber& fiber);

}  // namespace polyhodge::hodge
