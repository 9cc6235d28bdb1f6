#pragma once

#include "polyhodge/exact/rational.hpp"

#include <vector>

namespace polyhodge::combinat {

using exact::Rational;

// Permutation of {0..n-1} as the image list.
using Permutation = std::vector<int>;

// Cycle type, parts in descending order.
using CycleType = std::vector<int>;

// Conjugacy classes of S_n indexed by cycle type, listed in ascending
// lexicographic order: (1^n), (2,1^{n-2}), ..., (n).
std::vector<CycleType> conjugacy_classes(int n);

Permutation class_representative(const CycleType& type);
CycleType cycle_type(const Permutation& p);
exact::BigInt class_size(const CycleType& type);
int sign(const CycleType& type);

Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);

// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

struct ClassFunction {
    int n = 0;
    std::vector<Rational> values;  // aligned with conjugacy_classes(n)

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;
};

ClassFunction sign_character(int n);
ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b);
// (1/n!) sum over classes |C| a(C) b(C); real-valued characters.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

// Ind_{C_n}^{S_n} of the character sending (1 2 ... n) to exp(2 pi i e / n),
// by summing over all conjugates. Values are integers; the sum of roots of
// unity is rounded after a closeness check.
ClassFunction induced_from_cyclic(int n, int character_exponent);

}  // namespace polyhodge::combinat
