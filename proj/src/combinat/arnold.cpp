#include "polyhodge/combinat/arnold.hpp"

#include "polyhodge/errors.hpp"

#include <algorithm>
#include <string>

namespace polyhodge::combinat {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw DomainError(what);
}

void combinations_rec(int count, int start, int size, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == size) {
        out.push_back(current);
        return;
    }
    for (int i = start; i < count; ++i) {
        current.push_back(i);
        combinations_rec(count, i + 1, size, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> combinations(int count, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    if (size >= 0 && size <= count) combinations_rec(count, 0, size, current, out);
    return out;
}

}  // namespace

int normalize_monomial(std::vector<int>& word) {
    int sign = 1;
    // Insertion sort, one transposition per swap.
    for (std::size_t i = 1; i < word.size(); ++i)
        for (std::size_t j = i; j > 0 && word[j - 1] >= word[j]; --j) {
            if (word[j - 1] == word[j]) return 0;
            std::swap(word[j - 1], word[j]);
            sign = -sign;
        }
    return sign;
}

ArnoldModule::ArnoldModule(int n) : n_(n), echelon_(0) {
    require(n >= 1 && n <= kMaxArnoldSize, "ArnoldModule: need 1 <= n <= 7");
    generator_index_.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            generator_index_[i][j] = generator_index_[j][i] = static_cast<int>(generators_.size());
            generators_.emplace_back(i, j);
        }
    const int g = static_cast<int>(generators_.size());
    monomials_ = combinations(g, n - 1);
    for (std::size_t i = 0; i < monomials_.size(); ++i) lookup_.emplace(monomials_[i], static_cast<int>(i));
    echelon_ = SparseEchelon(static_cast<int>(monomials_.size()));

    if (n >= 3) {
        const auto multipliers = combinations(g, n - 3);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    const int ij = generator_index_[i][j], ik = generator_index_[i][k], jk = generator_index_[j][k];
                    const std::pair<std::pair<int, int>, int> terms[] = {{{ij, ik}, 1}, {{ij, jk}, -1}, {{ik, jk}, 1}};
                    for (const auto& m : multipliers) {
                        std::map<int, Rational> row;
                        for (const auto& [pair, coefficient] : terms) {
                            std::vector<int> word{pair.first, pair.second};
                            word.insert(word.end(), m.begin(), m.end());
                            const int s = normalize_monomial(word);
                            if (s == 0) continue;
                            row[monomial_index(word)] += coefficient * s;
                        }
                        SparseVector sparse;
                        for (auto& [col, value] : row)
                            if (value != 0) sparse.emplace_back(col, value);
                        if (!sparse.empty()) echelon_.insert(std::move(sparse));
                    }
                }
    }
    basis_ = echelon_.free_columns();
}

int ArnoldModule::monomial_index(const std::vector<int>& sorted) const {
    return lookup_.at(sorted);
}

Rational ArnoldModule::action_coefficient(const Permutation& sigma, int basis_row, int basis_col) const {
    require(static_cast<int>(sigma.size()) == n_, "ArnoldModule: permutation of wrong size");
    std::vector<int> word;
    for (int gen : monomials_.at(basis_.at(basis_col))) {
        const auto [i, j] = generators_[gen];
        word.push_back(generator_index_[sigma[i]][sigma[j]]);
    }
    const int s = normalize_monomial(word);
    if (s == 0) return 0;
    const auto reduced = echelon_.reduce({{monomial_index(word), Rational(s)}});
    const auto it = reduced.find(basis_.at(basis_row));
    return it == reduced.end() ? Rational(0) : it->second;
}

Rational ArnoldModule::trace(const Permutation& sigma) const {
    Rational sum = 0;
    for (int b = 0; b < dimension(); ++b) sum += action_coefficient(sigma, b, b);
    return sum;
}

int arnold_dimension(int n) {
    require(n >= 1 && n <= kMaxArnoldSize, "arnold_dimension: need 1 <= n <= 7");
    return ArnoldModule(n).dimension();
}

ClassFunction arnold_character(int n) {
    require(n >= 1 && n <= 6, "arnold_character: need 1 <= n <= 6");
    const ArnoldModule module(n);
    ClassFunction f{n, {}};
    for (const auto& type : conjugacy_classes(n)) f.values.push_back(module.trace(class_representative(type)));
    return f;
}

exact::BigInt sign_multiplicity(int n) {
    require(n >= 1 && n <= 6, "sign_multiplicity: need 1 <= n <= 6");
    // Classes of S_n are closed under inversion, so A_N and its dual share a character.
    const Rational m = inner_product(arnold_character(n), sign_character(n));
    if (exact::denominator_of(m) != 1 || m < 0) throw NumericalError("sign_multiplicity: not a multiplicity");
    return exact::numerator_of(m);
}

InducedCharacterReport induced_character_check(int n, int character_exponent) {
    require(n >= 2 && n <= 6, "induced_character_check: need 2 <= n <= 6");
    InducedCharacterReport report;
    report.arnold = arnold_character(n);
    report.twisted_induced = pointwise_product(sign_character(n), induced_from_cyclic(n, character_exponent));
    report.matches = report.arnold == report.twisted_induced;
    return report;
}

}  // namespace polyhodge::combinat
