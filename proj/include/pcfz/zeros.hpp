#pragma once
#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <vector>

namespace pcfz {

// The four zero families of U(a, .). With u = 2|a| and zhat the scaled variable:
//   apos_complex      a > 0, z = i sqrt(2u) zhat, second quadrant
//   aneg_positive     a < 0, z = sqrt(2u) xhat, 0 < xhat < 1, decreasing in m
//   aneg_nonpositive  a < 0, z = -sqrt(2u) xhat, xhat >= 0, decreasing in m
//   aneg_complex      a < 0, z = -sqrt(2u) conj(what), second quadrant
enum class ZeroFamilyKind { apos_complex, aneg_positive, aneg_nonpositive, aneg_complex };

std::string_view to_string(ZeroFamilyKind k);

struct ZeroFamily {
    ZeroFamilyKind kind;
    double a;
    double u;
    std::optional<int> count;  // empty for the unbounded complex families
    int first_index = 1;       // 1 - vartheta(u) for aneg_nonpositive
};

struct ZeroApproximation {
    ZeroFamilyKind family;
    double a = 0;
    int m = 0;
    std::complex<double> z0;                    // leading term in the scaled variable
    std::array<std::complex<double>, 2> terms{}; // corrections, entering as /u^2 and /u^4
    std::complex<double> zhat;                  // z0 + sum of the used corrections
    std::complex<double> z;                     // zero of U(a, .)
    int terms_used = 3;
};

// Number of positive zeros of U(-u/2, .); 0 for u <= 3.
int count_positive(double u);
// Number of non-positive zeros: indices 1 - vartheta .. count - vartheta whose
// three-term expansion is non-negative.
int count_nonpositive(double u);

// Families present for a, with counts.
std::vector<ZeroFamily> zero_families(double a);

ZeroApproximation zeros_apos(double a, int m, int terms = 3);
ZeroApproximation zeros_aneg_positive(double a, int m, int terms = 3);
ZeroApproximation zeros_aneg_nonpositive(double a, int m, int terms = 3);
ZeroApproximation zeros_aneg_complex(double a, int m, int terms = 3);
ZeroApproximation zero_approximation(ZeroFamilyKind kind, double a, int m, int terms = 3);

// Zeros of the physicists' Hermite polynomial H_n, ascending. The positive ones
// come from the aneg_positive family with u = 2n + 1, optionally refined.
std::vector<double> hermite_zeros(int n, bool refine = true);

} // namespace pcfz
