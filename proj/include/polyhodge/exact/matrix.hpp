#pragma once

#include "polyhodge/exact/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyhodge::exact {

class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);
    RationalMatrix(std::vector<std::vector<Rational>> rows);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_upper_triangular() const;

    Rational& operator()(int r, int c) { return data_[index(r, c)]; }
    const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

    // Gauss-Jordan; nullopt when singular.
    std::optional<RationalMatrix> inverse() const;

    RationalMatrix& operator+=(const RationalMatrix& other);
    RationalMatrix& operator-=(const RationalMatrix& other);

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

    int rows_;
    int cols_;
    std::vector<Rational> data_;
};

// Smallest k with (m - I)^k = 0, reporting 0 for the identity; nullopt when
// (m - I) is not nilpotent, which is decided at k = dimension.
std::optional<int> nilpotency_index(const RationalMatrix& m);

}  // namespace polyhodge::exact
