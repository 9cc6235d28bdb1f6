#include "polyhodge/combinat/postnikov.hpp"

#include "polyhodge/combinat/arnold.hpp"
#include "polyhodge/combinat/set_partition.hpp"
#include "polyhodge/errors.hpp"

namespace polyhodge::combinat {

exact::BigInt stirling_first(int n, int k) {
    if (n < 0 || k < 0) throw DomainError("stirling_first: negative argument");
    std::vector<exact::BigInt> row{1};  // c(0, .)
    for (int m = 0; m < n; ++m) {
        std::vector<exact::BigInt> next(row.size() + 1, 0);
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += m * row[j];
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    return k < static_cast<int>(row.size()) ? row[k] : exact::BigInt(0);
}

PostnikovReport postnikov_graded_check(int n) {
    if (n < 1 || n > 8) throw DomainError("postnikov_graded_check: need 1 <= n <= 8");
    constexpr int kArnoldLimit = 6;
    std::vector<exact::BigInt> block_dim(n + 1, 0);
    std::vector<bool> cross_checked(n + 1, false);
    for (int size = 1; size <= n; ++size) {
        const exact::BigInt formula = exact::factorial(size - 1);
        if (size <= kArnoldLimit) {
            block_dim[size] = arnold_dimension(size);
            cross_checked[size] = block_dim[size] == formula;
        } else {
            block_dim[size] = formula;
            cross_checked[size] = true;
        }
    }

    PostnikovReport report;
    report.n = n;
    for (int k = 0; k < n; ++k) report.rows.push_back({k, 0, stirling_first(n, n - k), true});
    for (const auto& pi : partitions_of(n)) {
        auto& row = report.rows[n - pi.block_count()];
        exact::BigInt product = 1;
        for (const auto& block : pi.blocks()) {
            const int size = static_cast<int>(block.size());
            product *= block_dim[size];
            row.cross_checked = row.cross_checked && cross_checked[size];
        }
        row.graded_dimension += product;
    }
    report.ok = true;
    for (const auto& row : report.rows)
        report.ok = report.ok && row.cross_checked && row.graded_dimension == row.stirling;
    return report;
}

}  // namespace polyhodge::combinat
