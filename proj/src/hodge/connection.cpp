#include "polyhodge/hodge/connection.hpp"

#include "polyhodge/errors.hpp"

namespace polyhodge::hodge {

std::string to_string(OneForm form) {
    switch (form) {
        case OneForm::Zero: return "0";
        case OneForm::DzOverZ: return "dz/z";
        case OneForm::DzOverOneMinusZ: return "dz/(1-z)";
    }
    return "?";
}

ConnectionMatrix::ConnectionMatrix(int n) : n_(n) {
    if (n < 0) throw DomainError("connection: negative weight");
}

OneForm ConnectionMatrix::operator()(int r, int c) const {
    if (r < 0 || c < 0 || r > n_ || c > n_) throw DomainError("connection: index out of range");
    if (c != r + 1) return OneForm::Zero;
    return r == 0 ? OneForm::DzOverOneMinusZ : OneForm::DzOverZ;
}

ConnectionMatrix connection(int n) { return ConnectionMatrix(n); }

analytic::ComplexMatrix evaluate_connection(const ConnectionMatrix& c, const analytic::Complex& z) {
    using analytic::Complex;
    const Complex one_minus_z = Complex(1) - z;
    if (z.norm() == 0 || one_minus_z.norm() == 0) throw DomainError("evaluate_connection: z is a puncture");
    analytic::ComplexMatrix out(c.dimension());
    for (int r = 0; r < c.dimension(); ++r)
        for (int col = 0; col < c.dimension(); ++col) {
            switch (c(r, col)) {
                case OneForm::Zero: break;
                case OneForm::DzOverZ: out(r, col) = Complex(1) / z; break;
                case OneForm::DzOverOneMinusZ: out(r, col) = Complex(1) / one_minus_z; break;
            }
        }
    return out;
}

}  // namespace polyhodge::hodge
