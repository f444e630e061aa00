#pragma once

#include <complex>

namespace pcfz {

// Data at the leading-order zero needed by the correction terms.
struct CorrectionInput {
    std::complex<double> z0;
    std::complex<double> zeta0;
    std::complex<double> sigma0;
};

// Builds the input from the mapping at z0.
CorrectionInput correction_input(std::complex<double> z0);

// G_s(zhat), s = 1..4.
std::complex<double> g_coeff(int s, std::complex<double> zhat);

// First coefficient of the expansion of the implicit zero function; finite at zhat = 1.
std::complex<double> upsilon1(std::complex<double> zhat);

// Corrections to the leading zero; they enter divided by u^2 and u^4.
std::complex<double> correction1(const CorrectionInput& in);
std::complex<double> correction2(const CorrectionInput& in);

} // namespace pcfz
