#pragma once

#include <stdexcept>
#include <string>

namespace polyhodge {

// Argument outside the mathematical domain of an operation (punctures,
// out-of-range indices, size guards).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A numerical procedure failed to reach its target accuracy.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive transport could not continue; `arclength` is where it stopped.
class IntegrationError : public NumericalError {
public:
    IntegrationError(const std::string& what, double arclength)
        : NumericalError(what), arclength_(arclength) {}

    double arclength() const noexcept { return arclength_; }

private:
    double arclength_;
};

// An entry that should be rational was not within tolerance of any
// fraction with a bounded denominator.
class ReconstructionError : public NumericalError {
public:
    ReconstructionError(const std::string& what, int row, int col)
        : NumericalError(what), row_(row), col_(col) {}

    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

private:
    int row_;
    int col_;
};

}  // namespace polyhodge
