#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace pcfz {

// Argument outside the region where a routine is defined (branch cut, bad index, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requested index lies beyond the finite count of a zero family.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// u is an odd integer: U(a,z) is a Hermite polynomial times a Gaussian and
// the complex / non-positive families do not exist.
class PolynomialCaseError : public DomainError {
public:
    using DomainError::DomainError;
};

// A correction formula would divide by a vanishing zeta.
class DegenerateError : public DomainError {
public:
    using DomainError::DomainError;
};

// An iteration failed to converge; carries the last iterate and its residual.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::complex<double> last, double residual)
        : std::runtime_error(what), last_(last), residual_(residual) {}

    std::complex<double> last_iterate() const { return last_; }
    double residual() const { return residual_; }

private:
    std::complex<double> last_;
    double residual_;
};

// A zero sweep returned to a zero it had already visited.
class ChainBreakError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pcfz
