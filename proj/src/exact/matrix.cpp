#include "polyhodge/exact/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace polyhodge::exact {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("RationalMatrix: dimensions must be positive");
    data_.resize(static_cast<std::size_t>(rows) * cols);
}

RationalMatrix::RationalMatrix(std::vector<std::vector<Rational>> rows)
    : RationalMatrix(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows.front().size())) {
    for (int r = 0; r < rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != cols_) throw std::invalid_argument("RationalMatrix: ragged rows");
        for (int c = 0; c < cols_; ++c) (*this)(r, c) = std::move(rows[r][c]);
    }
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool RationalMatrix::is_upper_triangular() const {
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < std::min(r, cols_); ++c)
            if ((*this)(r, c) != 0) return false;
    return true;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("inverse: matrix not square");
    const int n = rows_;
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            for (int c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const Rational scale = 1 / a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Rational f = a(r, col);
            for (int c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            if (a(r, k) == 0) continue;
            for (int c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
        }
    return out;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (int r = 0; r < rows_; ++r) {
        out << (r ? ", [" : "[");
        for (int c = 0; c < cols_; ++c) out << (c ? ", " : "") << exact::to_string((*this)(r, c));
        out << "]";
    }
    out << "]";
    return out.str();
}

std::optional<int> nilpotency_index(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("nilpotency_index: matrix not square");
    const RationalMatrix nil = m - RationalMatrix::identity(m.rows());
    if (nil.is_zero()) return 0;
    RationalMatrix power = nil;
    for (int k = 1; k <= m.rows(); ++k) {
        if (power.is_zero()) return k;
        power = power * nil;
    }
    return std::nullopt;
}

}  // namespace polyhodge::exact
