#pragma once

#include "polyhodge/analytic/complex.hpp"

#include <string>
#include <vector>

namespace polyhodge::hodge {

enum class OneForm { Zero, DzOverZ, DzOverOneMinusZ };

std::string to_string(OneForm form);

// Omega_n: strictly upper triangular, nonzero only on the superdiagonal with
// dz/(1-z) in position (0, 1) and dz/z in positions (k, k+1), k >= 1.
class ConnectionMatrix {
public:
    explicit ConnectionMatrix(int n);

    int weight() const { return n_; }
    int dimension() const { return n_ + 1; }
    OneForm operator()(int r, int c) const;

private:
    int n_;
};

ConnectionMatrix connection(int n);

// Coefficient matrix at z: dz/z -> 1/z, dz/(1-z) -> 1/(1-z). Throws
// DomainError at the punctures.
analytic::ComplexMatrix evaluate_connection(const ConnectionMatrix& c, const analytic::Complex& z);

}  // namespace polyhodge::hodge
