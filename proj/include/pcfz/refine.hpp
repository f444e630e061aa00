#pragma once
#include <complex>
#include <vector>

namespace pcfz {

struct RefinedZero {
    std::complex<double> value;
    std::complex<double> seed;
    int iterations = 0;     // evaluations of T, including the confirming one
    double residual = 0;    // size of the last correction
    bool converged = false;
};

struct RefineOptions {
    int max_iter = 20;
    double rel_tol = 1e-13;          // |T(z) - z| <= rel_tol (1 + |z|)
    double turning_guard = 1e-6;     // minimum |z^2/4 + a| / (1 + |a|)
};

// Local frequency (-z^2/4 - a)^{1/2}, principal branch.
std::complex<double> local_frequency(double a, std::complex<double> z);

// One application of T(z) = z - q^{-1/2} arctan(q^{1/2} U / U'), q = -z^2/4 - a.
std::complex<double> t_map(double a, std::complex<double> z);

// Fixed-point iteration of T from z0. Real seeds with real a stay real.
// Throws DomainError near a turning point or a zero of U', ConvergenceError
// after max_iter steps.
RefinedZero t_iterate(double a, std::complex<double> z0, const RefineOptions& opt = {});

// Outward displacement z + pi q^{-1/2} to the next zero along the zero chain.
std::complex<double> h_plus(double a, std::complex<double> z);

struct SweepResult {
    std::vector<RefinedZero> zeros;  // strictly increasing in |z|
    int branch_flips = 0;            // outward branch disagreeing with the continued one
};

// Polishes z_start and then alternates h_plus and t_iterate to collect count
// consecutive zeros. Throws ChainBreakError when a step returns to a known zero
// or fails to move outward.
SweepResult sweep(double a, std::complex<double> z_start, int count, const RefineOptions& opt = {});

} // namespace pcfz
