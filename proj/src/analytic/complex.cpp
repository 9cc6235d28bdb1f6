#include "polyhodge/analytic/complex.hpp"

#include <stdexcept>

namespace polyhodge::analytic {

Complex two_pi_i() { return {Real(0), 2 * pi_real()}; }

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Complex(1);
    return m;
}

Real ComplexMatrix::max_abs() const {
    Real best = 0;
    for (const auto& z : data_) {
        const Real a = z.abs();
        if (a > best) best = a;
    }
    return best;
}

bool ComplexMatrix::is_finite() const {
    for (const auto& z : data_)
        if (!z.is_finite()) return false;
    return true;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("ComplexMatrix product: size mismatch");
    ComplexMatrix out(a.n_);
    for (int r = 0; r < a.n_; ++r)
        for (int k = 0; k < a.n_; ++k) {
            const Complex& x = a(r, k);
            if (x.real() == 0 && x.imag() == 0) continue;
            for (int c = 0; c < a.n_; ++c) out(r, c) += x * b(k, c);
        }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("ComplexMatrix difference: size mismatch");
    ComplexMatrix out(a.n_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

Real max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }

std::pair<std::string, std::string> to_decimal_pair(const Complex& z) {
    return {to_decimal(z.real()), to_decimal(z.imag())};
}

}  // namespace polyhodge::analytic
