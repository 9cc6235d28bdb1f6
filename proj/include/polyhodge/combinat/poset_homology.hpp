#pragma once

#include <utility>
#include <vector>

namespace polyhodge::combinat {

// Reduced rational homology of the order complex of the proper part
// Pi_n \ {0^, 1^} of the partition lattice, as (degree, dimension) pairs for
// degrees -1 .. n-3. Requires 3 <= n <= 7.
std::vector<std::pair<int, int>> poset_homology(int n);

// Number of d-simplices (chains of d+1 elements) of the same order complex,
// d = -1 .. n-3.
std::vector<long long> chain_counts(int n);

}  // namespace polyhodge::combinat
