#pragma once

#include "polyhodge/combinat/sparse_echelon.hpp"
#include "polyhodge/combinat/symmetric_group.hpp"

#include <map>
#include <vector>

namespace polyhodge::combinat {

inline constexpr int kMaxArnoldSize = 7;

// Top-degree piece A_N (degree n-1) of the Arnol'd algebra on generators
// e_{i,j}, i < j, modulo the three-term relations times all monomials of
// degree n-3. Generators are indexed lexicographically by (i, j); a monomial
// is a strictly increasing list of generator indices.
class ArnoldModule {
public:
    explicit ArnoldModule(int n);

    int ground_size() const { return n_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    int monomial_count() const { return static_cast<int>(monomials_.size()); }
    int relation_rank() const { return echelon_.rank(); }

    // Monomial indices forming a basis of the quotient.
    const std::vector<int>& basis() const { return basis_; }
    const std::vector<int>& monomial(int index) const { return monomials_[index]; }

    // Matrix entry <basis_row | sigma . basis_col> of the action of a
    // permutation (0-based images) on A_N.
    Rational action_coefficient(const Permutation& sigma, int basis_row, int basis_col) const;
    Rational trace(const Permutation& sigma) const;

private:
    int monomial_index(const std::vector<int>& sorted) const;

    int n_;
    std::vector<std::pair<int, int>> generators_;
    std::vector<std::vector<int>> generator_index_;
    std::vector<std::vector<int>> monomials_;
    std::map<std::vector<int>, int> lookup_;
    SparseEchelon echelon_;
    std::vector<int> basis_;
};

// Sorts a generator word, returning the sign of the sorting permutation, or 0
// when a generator repeats.
int normalize_monomial(std::vector<int>& word);

// dim A_N for 1 <= n <= 7.
int arnold_dimension(int n);

// Character of S_n on A_N, classes as in conjugacy_classes(n); 1 <= n <= 6.
ClassFunction arnold_character(int n);

// <chi_{A_N^dual}, sgn>; 1 <= n <= 6.
exact::BigInt sign_multiplicity(int n);

struct InducedCharacterReport {
    bool matches = false;
    ClassFunction arnold;
    ClassFunction twisted_induced;
};

// Compares the character of A_N^dual with sgn (x) Ind_{C_n}^{S_n}(xi^e), where
// xi is the character of the n-cycle subgroup sending the generator to
// exp(2 pi i / n) and e = `character_exponent` (1 is primitive). 2 <= n <= 6.
InducedCharacterReport induced_character_check(int n, int character_exponent = 1);

}  // namespace polyhodge::combinat
