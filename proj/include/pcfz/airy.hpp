#pragma once

#include <complex>

namespace pcfz {

// Function value and derivative, both multiplied by exp(log_scale).
// log_scale is 0 whenever the plain values fit in a double.
struct AiryValue {
    std::complex<double> value;
    std::complex<double> derivative;
    double log_scale = 0;
};

AiryValue eval_ai(std::complex<double> z);

// Ai(z e^{-2 pi i l / 3}) and its z-derivative, l = +1 or -1.
AiryValue eval_ai_rotated(int l, std::complex<double> z);

AiryValue eval_bi_real(double x);

// m-th negative zero of Ai, m >= 1.
double real_airy_zero(int m);

namespace detail {
// t^{2/3} times the large-t phase series used for Airy-type zeros.
std::complex<double> airy_phase_series(std::complex<double> t);
} // namespace detail

} // namespace pcfz
