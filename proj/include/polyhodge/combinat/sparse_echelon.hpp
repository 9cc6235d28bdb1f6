#pragma once

#include "polyhodge/exact/rational.hpp"

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polyhodge::combinat {

using exact::Rational;

// Sparse vector as (column, value) pairs sorted by column, no zero values.
using SparseVector = std::vector<std::pair<int, Rational>>;

// Incremental row echelon form over Q. Each stored row is normalised so that
// its lowest column (the pivot) has coefficient 1.
class SparseEchelon {
public:
    explicit SparseEchelon(int columns) : columns_(columns) {}

    // Reduces `row` against the stored pivots; keeps it when a nonzero
    // remainder is left. Returns true when the rank grew.
    bool insert(SparseVector row);

    int rank() const { return static_cast<int>(pivots_.size()); }
    int columns() const { return columns_; }
    bool is_pivot(int column) const { return pivots_.count(column) != 0; }

    // Columns without a pivot, ascending. They index a basis of the quotient
    // Q^columns / rowspace.
    std::vector<int> free_columns() const;

    // Normal form of `v` modulo the row space: all pivot columns cleared.
    std::map<int, Rational> reduce(const SparseVector& v) const;

private:
    int columns_;
    std::unordered_map<int, SparseVector> pivots_;
};

// a - factor * b for sorted sparse vectors.
SparseVector axpy(const SparseVector& a, const Rational& factor, const SparseVector& b);

}  // namespace polyhodge::combinat
