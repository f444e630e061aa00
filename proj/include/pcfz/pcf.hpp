#pragma once

#include <complex>
#include <optional>
#include <string_view>

namespace pcfz {

enum class PcfMethod { series, asymptotic, quadrature, continuation };

std::string_view to_string(PcfMethod m);

// U(a,z) and dU/dz, both multiplied by exp(log_scale); log_scale is 0 whenever
// the plain values fit in a double. est_accuracy is relative to the larger of
// |U| and |U'|/sqrt|z^2/4 + a|, so it stays meaningful near zeros.
struct PcfValue {
    std::complex<double> value;
    std::complex<double> derivative;
    double log_scale = 0;
    PcfMethod method = PcfMethod::series;
    double est_accuracy = 0;
};

struct ScaledComplex {
    std::complex<double> mantissa;
    double log_scale = 0;

    std::complex<double> value() const;
};

// Region-selected evaluation; accurate to ~1e-14 of the local envelope for
// |z| <= 60, |a| <= 40 and usable well beyond.
PcfValue eval_U(double a, std::complex<double> z);

// Forced methods, for cross-validation.
PcfValue eval_U_series(double a, std::complex<double> z);
PcfValue eval_U_asymptotic(double a, std::complex<double> z);  // |arg z| < 3pi/4
PcfValue eval_U_quadrature(double a, std::complex<double> z);  // a > -1/2

// dU/dz from U' = z U(a,z)/2 - U(a-1,z).
ScaledComplex eval_U_prime(double a, std::complex<double> z);

// |1 + i e^{-u pi i/2} U(u/2, i sqrt(2u) w) / U(u/2, -i sqrt(2u) w)|, u = -2a.
double residual_eq319(double a, std::complex<double> w);

struct ValidationRecord {
    int m = 0;
    std::complex<double> z_approx;
    std::complex<double> z_ref;
    double g1_approx = 0, g1_ref = 0;
    std::optional<double> g2_approx, g2_ref;
    double eps1 = 0;
    std::optional<double> eps2;  // empty when Re(z_ref) Im(z_ref) = 0
};

ValidationRecord metrics(std::complex<double> z_approx, std::complex<double> z_ref);

// Net winding of arg U(a, .) around the circle |z - center| = radius, in turns.
int winding_number(double a, std::complex<double> center, double radius);

} // namespace pcfz
