#include "polyhodge/combinat/symmetric_group.hpp"

#include "polyhodge/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>

namespace polyhodge::combinat {

namespace {

void partitions_rec(int remaining, int max_part, CycleType& current, std::vector<CycleType>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_rec(remaining - part, part, current, out);
        current.pop_back();
    }
}

void require_size(int n, const char* what) {
    if (n < 1 || n > 9) throw DomainError(std::string(what) + ": need 1 <= n <= 9");
}

}  // namespace

std::vector<CycleType> conjugacy_classes(int n) {
    require_size(n, "conjugacy_classes");
    std::vector<CycleType> out;
    CycleType current;
    partitions_rec(n, n, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

Permutation class_representative(const CycleType& type) {
    const int n = std::accumulate(type.begin(), type.end(), 0);
    Permutation p(n);
    int start = 0;
    for (int len : type) {
        for (int i = 0; i < len; ++i) p[start + i] = start + (i + 1) % len;
        start += len;
    }
    return p;
}

CycleType cycle_type(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    CycleType type;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

exact::BigInt class_size(const CycleType& type) {
    const int n = std::accumulate(type.begin(), type.end(), 0);
    std::map<int, int> multiplicity;
    for (int len : type) ++multiplicity[len];
    exact::BigInt denominator = 1;
    for (const auto& [len, m] : multiplicity) {
        for (int i = 0; i < m; ++i) denominator *= len;
        denominator *= exact::factorial(m);
    }
    return exact::factorial(n) / denominator;
}

int sign(const CycleType& type) {
    int transpositions = 0;
    for (int len : type) transpositions += len - 1;
    return transpositions % 2 == 0 ? 1 : -1;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a[b[i]];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    require_size(n, "all_permutations");
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

ClassFunction sign_character(int n) {
    ClassFunction f{n, {}};
    for (const auto& type : conjugacy_classes(n)) f.values.emplace_back(sign(type));
    return f;
}

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.n != b.n || a.values.size() != b.values.size())
        throw DomainError("pointwise_product: class functions of different groups");
    ClassFunction f{a.n, {}};
    for (std::size_t i = 0; i < a.values.size(); ++i) f.values.push_back(a.values[i] * b.values[i]);
    return f;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.n != b.n || a.values.size() != b.values.size())
        throw DomainError("inner_product: class functions of different groups");
    const auto classes = conjugacy_classes(a.n);
    Rational sum = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
        sum += Rational(class_size(classes[i])) * a.values[i] * b.values[i];
    return sum / Rational(exact::factorial(a.n));
}

ClassFunction induced_from_cyclic(int n, int character_exponent) {
    require_size(n, "induced_from_cyclic");
    if (n > 8) throw DomainError("induced_from_cyclic: need n <= 8");
    // Powers of the n-cycle (0 1 ... n-1) and their exponents.
    std::map<Permutation, int> power_of;
    Permutation c(n), current(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    std::iota(current.begin(), current.end(), 0);
    for (int j = 0; j < n; ++j) {
        power_of.emplace(current, j);
        current = compose(c, current);
    }
    const auto group = all_permutations(n);
    ClassFunction f{n, {}};
    for (const auto& type : conjugacy_classes(n)) {
        const Permutation g = class_representative(type);
        std::complex<double> sum = 0.0;
        for (const auto& x : group) {
            const auto it = power_of.find(compose(compose(x, g), inverse(x)));
            if (it == power_of.end()) continue;
            const double angle = 2.0 * std::numbers::pi * character_exponent * it->second / n;
            sum += std::polar(1.0, angle);
        }
        sum /= static_cast<double>(n);
        const double rounded = std::round(sum.real());
        if (std::abs(sum - rounded) > 1e-9)
            throw NumericalError("induced_from_cyclic: character value is not an integer");
        f.values.emplace_back(static_cast<long>(rounded));
    }
    return f;
}

}  // namespace polyhodge::combinat
