#include "pcfz/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pcfz/airy.hpp"
#include "pcfz/coeffs.hpp"
#include "pcfz/errors.hpp"
#include "pcfz/genairy.hpp"
#include "pcfz/mapping.hpp"
#include "pcfz/refine.hpp"

namespace pcfz {

using C = std::complex<double>;

namespace {

constexpr int max_nonpositive = 100000;

void check_terms(int terms)
{
    if (terms < 1 || terms > 3)
        throw DomainError("terms must be 1, 2 or 3");
}

void check_not_polynomial(double u)
{
    double r = std::fmod(u, 2.0);
    if (std::abs(r - 1.0) < polynomial_guard)
        throw PolynomialCaseError("u = -2a is an odd integer: U(a, .) is a Hermite polynomial times a Gaussian");
}

// Leading term z0 from zeta(z0) = zeta0, then the corrections.
ZeroApproximation assemble(ZeroFamilyKind kind, double a, int m, C zeta0, int terms)
{
    double u = 2 * std::abs(a);
    ZeroApproximation r{kind, a, m, invert_zeta(zeta0), {}, {}, {}, terms};
    r.zhat = r.z0;
    if (terms >= 2) {
        CorrectionInput in = correction_input(r.z0);
        r.terms[0] = correction1(in);
        r.zhat += r.terms[0] / (u * u);
        if (terms >= 3) {
            r.terms[1] = correction2(in);
            r.zhat += r.terms[1] / (u * u * u * u);
        }
    }
    if (zeta0.imag() == 0) {
        r.z0 = r.z0.real();
        r.zhat = r.zhat.real();
        r.terms = {r.terms[0].real(), r.terms[1].real()};
    }
    double scale = std::sqrt(2 * u);
    switch (kind) {
    case ZeroFamilyKind::apos_complex:
        r.z = C(0, scale) * r.zhat;
        break;
    case ZeroFamilyKind::aneg_positive:
        r.z = scale * r.zhat.real();
        break;
    case ZeroFamilyKind::aneg_nonpositive:
        r.z = -scale * r.zhat.real();
        break;
    case ZeroFamilyKind::aneg_complex:
        r.z = -scale * std::conj(r.zhat);
        break;
    }
    return r;
}

// zeta0 for the non-positive family; index 0 is the sole positive Airy-combination zero.
C nonpositive_zeta0(double u, int m)
{
    double am;
    if (m == 0) {
        auto p = sole_positive_zero(u);
        if (!p)
            throw IndexError("zeros_aneg_nonpositive: index 0 exists only when vartheta(u) = 1");
        am = p->value.real();
    } else {
        am = neg_zeros(u, m).value.real();
    }
    return am / std::cbrt(u * u);
}

} // namespace

std::string_view to_string(ZeroFamilyKind k)
{
    switch (k) {
    case ZeroFamilyKind::apos_complex: return "apos";
    case ZeroFamilyKind::aneg_positive: return "pos";
    case ZeroFamilyKind::aneg_nonpositive: return "nonpos";
    case ZeroFamilyKind::aneg_complex: return "complex";
    }
    return "?";
}

int count_positive(double u)
{
    if (u <= 3)
        return 0;
    return static_cast<int>(std::ceil((u - 3) / 4));
}

int count_nonpositive(double u)
{
    if (u <= 1)
        return 0;
    check_not_polynomial(u);
    int first = 1 - vartheta(u);
    int n = 0;
    for (int m = first; n < max_nonpositive; ++m) {
        try {
            ZeroApproximation z = assemble(ZeroFamilyKind::aneg_nonpositive, -u / 2, m, nonpositive_zeta0(u, m), 3);
            if (z.zhat.real() < 0)
                break;
        } catch (const DomainError&) {
            break;
        }
        ++n;
    }
    return n;
}

std::vector<ZeroFamily> zero_families(double a)
{
    double u = 2 * std::abs(a);
    std::vector<ZeroFamily> out;
    if (a > 0) {
        out.push_back({ZeroFamilyKind::apos_complex, a, u, std::nullopt, 1});
    } else if (a < 0) {
        out.push_back({ZeroFamilyKind::aneg_positive, a, u, count_positive(u), 1});
        double r = std::fmod(u, 2.0);
        if (u > 1 && std::abs(r - 1.0) >= polynomial_guard) {
            out.push_back({ZeroFamilyKind::aneg_nonpositive, a, u, count_nonpositive(u), 1 - vartheta(u)});
            out.push_back({ZeroFamilyKind::aneg_complex, a, u, std::nullopt, 1});
        }
    }
    return out;
}

ZeroApproximation zeros_apos(double a, int m, int terms)
{
    if (!(a > 0))
        throw DomainError("zeros_apos: a must be positive");
    if (m < 1)
        throw IndexError("zeros_apos: m must be >= 1");
    check_terms(terms);
    double u = 2 * a;
    C zeta0 = std::polar(std::abs(real_airy_zero(m)) / std::cbrt(u * u), std::numbers::pi / 3);
    return assemble(ZeroFamilyKind::apos_complex, a, m, zeta0, terms);
}

ZeroApproximation zeros_aneg_positive(double a, int m, int terms)
{
    if (!(a < 0))
        throw DomainError("zeros_aneg_positive: a must be negative");
    check_terms(terms);
    double u = -2 * a;
    if (m < 1 || m > count_positive(u))
        throw IndexError("zeros_aneg_positive: m outside 1..M+ (" + std::to_string(count_positive(u)) + ")");
    return assemble(ZeroFamilyKind::aneg_positive, a, m, real_airy_zero(m) / std::cbrt(u * u), terms);
}

ZeroApproximation zeros_aneg_nonpositive(double a, int m, int terms)
{
    if (!(a < 0))
        throw DomainError("zeros_aneg_nonpositive: a must be negative");
    check_terms(terms);
    double u = -2 * a;
    if (u <= 1)
        throw IndexError("zeros_aneg_nonpositive: no real zeros for u <= 1");
    check_not_polynomial(u);
    int first = 1 - vartheta(u);
    int last = count_nonpositive(u) - vartheta(u);
    if (m < first || m > last)
        throw IndexError("zeros_aneg_nonpositive: m outside " + std::to_string(first) + ".." + std::to_string(last));
    return assemble(ZeroFamilyKind::aneg_nonpositive, a, m, nonpositive_zeta0(u, m), terms);
}

ZeroApproximation zeros_aneg_complex(double a, int m, int terms)
{
    if (!(a < 0))
        throw DomainError("zeros_aneg_complex: a must be negative");
    if (m < 1)
        throw IndexError("zeros_aneg_complex: m must be >= 1");
    check_terms(terms);
    double u = -2 * a;
    check_not_polynomial(u);
    C zeta0 = complex_zeros(u, m).value / std::cbrt(u * u);
    return assemble(ZeroFamilyKind::aneg_complex, a, m, zeta0, terms);
}

ZeroApproximation zero_approximation(ZeroFamilyKind kind, double a, int m, int terms)
{
    switch (kind) {
    case ZeroFamilyKind::apos_complex: return zeros_apos(a, m, terms);
    case ZeroFamilyKind::aneg_positive: return zeros_aneg_positive(a, m, terms);
    case ZeroFamilyKind::aneg_nonpositive: return zeros_aneg_nonpositive(a, m, terms);
    case ZeroFamilyKind::aneg_complex: return zeros_aneg_complex(a, m, terms);
    }
    throw DomainError("zero_approximation: unknown family");
}

std::vector<double> hermite_zeros(int n, bool refine)
{
    if (n < 1)
        throw DomainError("hermite_zeros: n must be >= 1");
    double u = 2.0 * n + 1;
    double a = -u / 2;
    std::vector<double> out;
    for (int m = 1; m <= count_positive(u); ++m) {
        double z = zeros_aneg_positive(a, m).z.real();
        if (refine)
            z = t_iterate(a, z).value.real();
        double x = z / std::numbers::sqrt2;
        out.push_back(x);
        out.push_back(-x);
    }
    if (n % 2 == 1)
        out.push_back(0.0);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace pcfz
