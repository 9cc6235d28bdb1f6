#pragma once

#include "polyhodge/exact/rational.hpp"

#include <vector>

namespace polyhodge::combinat {

// Unsigned Stirling numbers of the first kind c(n, k) by
// c(n+1, k) = n c(n, k) + c(n, k-1).
exact::BigInt stirling_first(int n, int k);

struct PostnikovRow {
    int k = 0;
    exact::BigInt graded_dimension;   // sum over |pi| = n-k of prod_B dim A_B
    exact::BigInt stirling;           // c(n, n-k)
    bool cross_checked = false;       // Arnol'd dimensions agreed with (|B|-1)!
};

struct PostnikovReport {
    int n = 0;
    std::vector<PostnikovRow> rows;
    bool ok = false;
};

// For k = 0..n-1 checks sum_{|pi| = n-k} prod_{B in pi} dim A_B = c(n, n-k),
// with dim A_B from arnold_dimension for n <= 6 (cross-checked against
// (|B|-1)!) and from (|B|-1)! beyond. 1 <= n <= 8.
PostnikovReport postnikov_graded_check(int n);

}  // namespace polyhodge::combinat
