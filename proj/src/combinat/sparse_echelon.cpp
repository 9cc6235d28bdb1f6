#include "polyhodge/combinat/sparse_echelon.hpp"

namespace polyhodge::combinat {

SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b) {
    SparseVector out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -factor * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second - factor * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

bool SparseEchelon::insert(SparseVector row) {
    while (!row.empty()) {
        const auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) break;
        const Rational factor = row.front().second;
        row = axpy(row, factor, it->second);
    }
    if (row.empty()) return false;
    const Rational lead = row.front().second;
    if (lead != 1)
        for (auto& [col, value] : row) value /= lead;
    const int column = row.front().first;
    pivots_.emplace(column, std::move(row));
    return true;
}

std::vector<int> SparseEchelon::free_columns() const {
    std::vector<int> out;
    for (int c = 0; c < columns_; ++c)
        if (!is_pivot(c)) out.push_back(c);
    return out;
}

std::map<int, Rational> SparseEchelon::reduce(const SparseVector& v) const {
    std::map<int, Rational> acc(v.begin(), v.end());
    auto it = acc.begin();
    while (it != acc.end()) {
        const auto pivot = pivots_.find(it->first);
        if (pivot == pivots_.end()) {
            ++it;
            continue;
        }
        const Rational factor = it->second;
        const int column = it->first;
        // Pivot rows only touch columns >= their pivot.
        for (const auto& [col, value] : pivot->second) {
            auto [slot, inserted] = acc.try_emplace(col, 0);
            slot->second -= factor * value;
            if (slot->second == 0 && col != column) acc.erase(slot);
        }
        it = acc.erase(acc.find(column));
    }
    return acc;
}

}  // namespace polyhodge::combinat
