#pragma once

#include <complex>
#include <optional>

namespace pcfz {

// Zeros of the u-dependent Airy combination sin(u pi/2) Ai(z) + cos(u pi/2) Bi(z),
// equivalently e^{(3u-1) pi i/3} Ai_1(z) + Ai_{-1}(z).

enum class AiryZeroKind { negative_real, sole_positive, complex_first_quadrant };

struct GenAiryZero {
    int m = 0;
    AiryZeroKind kind = AiryZeroKind::negative_real;
    std::complex<double> value;
    bool refined = false;
    double residual = 0;  // identity residual (complex) or |combination| (real)
    double shift = 0;     // |refined - asymptotic|
    bool reliable = true; // false when the phase series was used below |t| = 2
};

struct IndexShift {
    double mu;
    int vartheta;
    int m_plus;
    int m_minus;
};

// Period-2 index shift: 2r for r < 4/3, else 2r - 4, r = u mod 2.
double mu(double u);

// 1 iff (u mod 2) lies in (1, 4/3).
int vartheta(double u);

IndexShift index_shift(double u);

struct PhaseSeries {
    std::complex<double> value;
    bool reliable;
};

// t^{2/3}(1 + 5/(48t^2) - 5/(36t^4) + 77125/(82944t^6) - 108056875/(6967296t^8)).
PhaseSeries t_series(std::complex<double> t);

// m-th non-positive zero (m >= 1), largest first. m = 1 is always refined.
GenAiryZero neg_zeros(double u, int m, bool refine = true);

// The positive zero, present iff vartheta(u) = 1; the value 0 when u = 4/3 mod 2.
std::optional<GenAiryZero> sole_positive_zero(double u);

// m-th zero in the first quadrant; throws PolynomialCaseError for odd-integer u.
GenAiryZero complex_zeros(double u, int m, bool refine = true);

// Newton polish of a complex zero from the rotated-Airy identity.
GenAiryZero refine_zero(double u, std::complex<double> approx);

// Width of the band around odd integers rejected by complex_zeros.
inline constexpr double polynomial_guard = 1e-8;

} // namespace pcfz
