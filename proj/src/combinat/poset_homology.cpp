#include "polyhodge/combinat/poset_homology.hpp"

#include "polyhodge/combinat/set_partition.hpp"
#include "polyhodge/combinat/sparse_echelon.hpp"
#include "polyhodge/errors.hpp"

#include <map>

namespace polyhodge::combinat {

namespace {

struct OrderComplex {
    // chains[d + 1] lists the chains with d + 1 elements, each increasing.
    std::vector<std::vector<std::vector<int>>> chains;
};

OrderComplex build(int n) {
    if (n < 3 || n > 7) throw DomainError("poset_homology: need 3 <= n <= 7");
    std::vector<SetPartition> elements;
    for (auto& p : partitions_of(n))
        if (p.block_count() > 1 && p.block_count() < n) elements.push_back(std::move(p));
    const int m = static_cast<int>(elements.size());
    std::vector<std::vector<int>> above(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (a != b && elements[a].refines(elements[b])) above[a].push_back(b);

    OrderComplex complex;
    complex.chains.resize(n - 1);
    complex.chains[0].push_back({});
    std::vector<int> chain;
    auto extend = [&](auto&& self) -> void {
        complex.chains[chain.size()].push_back(chain);
        for (int next : above[chain.back()]) {
            chain.push_back(next);
            self(self);
            chain.pop_back();
        }
    };
    for (int a = 0; a < m; ++a) {
        chain.assign(1, a);
        extend(extend);
    }
    return complex;
}

int boundary_rank(const std::vector<std::vector<int>>& cells, const std::vector<std::vector<int>>& faces) {
    if (cells.empty() || faces.empty()) return 0;
    std::map<std::vector<int>, int> face_index;
    for (std::size_t i = 0; i < faces.size(); ++i) face_index.emplace(faces[i], static_cast<int>(i));
    SparseEchelon echelon(static_cast<int>(faces.size()));
    for (const auto& cell : cells) {
        std::map<int, Rational> row;
        for (std::size_t drop = 0; drop < cell.size(); ++drop) {
            std::vector<int> face;
            face.reserve(cell.size() - 1);
            for (std::size_t i = 0; i < cell.size(); ++i)
                if (i != drop) face.push_back(cell[i]);
            row[face_index.at(face)] += drop % 2 == 0 ? 1 : -1;
        }
        SparseVector sparse;
        for (auto& [col, value] : row)
            if (value != 0) sparse.emplace_back(col, value);
        echelon.insert(std::move(sparse));
    }
    return echelon.rank();
}

}  // namespace

std::vector<long long> chain_counts(int n) {
    std::vector<long long> out;
    for (const auto& level : build(n).chains) out.push_back(static_cast<long long>(level.size()));
    return out;
}

std::vector<std::pair<int, int>> poset_homology(int n) {
    const OrderComplex complex = build(n);
    const int levels = static_cast<int>(complex.chains.size());
    // ranks[l] is the rank of the boundary from level l to level l - 1.
    std::vector<int> ranks(levels + 1, 0);
    for (int l = 1; l < levels; ++l) ranks[l] = boundary_rank(complex.chains[l], complex.chains[l - 1]);
    std::vector<std::pair<int, int>> out;
    for (int l = 0; l < levels; ++l) {
        const int cells = static_cast<int>(complex.chains[l].size());
        out.emplace_back(l - 1, cells - ranks[l] - ranks[l + 1]);
    }
    return out;
}

}  // namespace polyhodge::combinat
