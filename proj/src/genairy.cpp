#include "pcfz/genairy.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "pcfz/airy.hpp"
#include "pcfz/errors.hpp"

namespace pcfz {

namespace {

using C = std::complex<double>;
constexpr double pi = std::numbers::pi;

// sin and cos of u pi / 2 with the argument reduced first.
double sin_half_pi(double u) { return std::sin(pi / 2 * std::fmod(u, 4.0)); }
double cos_half_pi(double u) { return std::cos(pi / 2 * std::fmod(u, 4.0)); }

// sin(u pi/2) Ai(x) + cos(u pi/2) Bi(x) and its derivative, for moderate x.
struct RealComb {
    double f, df;
};

RealComb real_comb(double u, double x)
{
    AiryValue a = eval_ai(x);
    AiryValue b = eval_bi_real(x);
    double s = sin_half_pi(u), c = cos_half_pi(u);
    double ea = std::exp(a.log_scale), eb = std::exp(b.log_scale);
    return {s * a.value.real() * ea + c * b.value.real() * eb,
            s * a.derivative.real() * ea + c * b.derivative.real() * eb};
}

double polish_real(double u, double lo, double hi)
{
    auto f = [&](double x) { return real_comb(u, x).f; };
    double flo = f(lo), fhi = f(hi);
    if (flo == 0)
        return lo;
    if (fhi == 0)
        return hi;
    boost::math::tools::eps_tolerance<double> stop(52);
    std::uintmax_t iters = 200;
    auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, stop, iters);
    double x = 0.5 * (a + b);
    // a Newton step removes the last bracketing ulps
    RealComb v = real_comb(u, x);
    if (v.df != 0) {
        double nx = x - v.f / v.df;
        if (nx >= a && nx <= b)
            x = nx;
    }
    return x;
}

bool near_odd_integer(double u)
{
    double r = std::fmod(u, 2.0);
    return std::abs(r - 1.0) < polynomial_guard;
}

} // namespace

double mu(double u)
{
    if (u < 0)
        throw DomainError("mu: u must be non-negative");
    double r = std::fmod(u, 2.0);
    return r < 4.0 / 3 ? 2 * r : 2 * r - 4;
}

int vartheta(double u)
{
    double r = std::fmod(u, 2.0);
    return (r > 1 && r < 4.0 / 3) ? 1 : 0;
}

IndexShift index_shift(double u)
{
    return {mu(u), vartheta(u), static_cast<int>(std::floor((u + 1) / 4)),
            static_cast<int>(std::floor((u - 1) / 4))};
}

PhaseSeries t_series(C t) { return {detail::airy_phase_series(t), std::abs(t) >= 2}; }

GenAiryZero neg_zeros(double u, int m, bool refine)
{
    if (!(u > 0))
        throw DomainError("neg_zeros: u must be positive");
    if (m < 1)
        throw IndexError("neg_zeros: m must be >= 1");
    GenAiryZero z;
    z.m = m;
    z.kind = AiryZeroKind::negative_real;
    double tau = 4 * m - 3 + mu(u);
    PhaseSeries ts = t_series(C(3 * pi * tau / 8));
    double seed = -ts.value.real();
    z.reliable = ts.reliable && tau > 0;
    z.value = seed;
    if (m == 1) {
        // largest non-positive zero: scan down from the origin
        double x = 0;
        double f0 = real_comb(u, 0).f;
        if (f0 == 0) {
            z.value = 0;
        } else {
            for (;;) {
                double nx = x - 0.1;
                double f1 = real_comb(u, nx).f;
                if ((f0 < 0) != (f1 < 0) || f1 == 0) {
                    z.value = polish_real(u, nx, x);
                    break;
                }
                x = nx;
                f0 = f1;
            }
        }
        z.refined = true;
    } else if (refine) {
        double half = 0.5 * pi / std::sqrt(std::max(-seed, 1.0));
        double w = 0.25 * half;
        double lo = seed - w, hi = seed + w;
        while ((real_comb(u, lo).f < 0) == (real_comb(u, hi).f < 0) && w < half) {
            w *= 1.5;
            lo = seed - w;
            hi = std::min(seed + w, 0.0);
        }
        z.value = polish_real(u, lo, hi);
        z.refined = true;
    }
    z.residual = std::abs(real_comb(u, z.value.real()).f);
    z.shift = std::abs(z.value.real() - seed);
    return z;
}

std::optional<GenAiryZero> sole_positive_zero(double u)
{
    if (!(u > 0))
        throw DomainError("sole_positive_zero: u must be positive");
    double r = std::fmod(u, 2.0);
    GenAiryZero z;
    z.m = 0;
    z.kind = AiryZeroKind::sole_positive;
    z.refined = true;
    if (r == 4.0 / 3) {
        z.value = 0;
        z.residual = std::abs(real_comb(u, 0).f);
        return z;
    }
    if (vartheta(u) == 0)
        return std::nullopt;
    double f0 = real_comb(u, 0).f;
    double lo = 0, hi = 1;
    while (hi <= 64) {
        double f1 = real_comb(u, hi).f;
        if ((f0 < 0) != (f1 < 0) || f1 == 0) {
            z.value = polish_real(u, lo, hi);
            z.residual = std::abs(real_comb(u, z.value.real()).f);
            return z;
        }
        lo = hi;
        f0 = f1;
        hi *= 2;
    }
    throw ConvergenceError("sole_positive_zero: no sign change found", hi, std::abs(f0));
}

GenAiryZero refine_zero(double u, C approx)
{
    // f = e^{(3u-1) pi i/3} Ai_1 + Ai_{-1}
    const C e = std::polar(1.0, pi * std::fmod(u - 1.0 / 3, 2.0));
    auto eval = [&](C z, C& f, C& df, double& res) {
        AiryValue p = eval_ai_rotated(1, z);
        AiryValue q = eval_ai_rotated(-1, z);
        double top = std::max(p.log_scale, q.log_scale);
        C sp = e * std::exp(p.log_scale - top), sq = std::exp(q.log_scale - top);
        f = sp * p.value + sq * q.value;
        df = sp * p.derivative + sq * q.derivative;
        res = std::abs(1.0 + e * p.value / q.value * std::exp(p.log_scale - q.log_scale));
    };
    C z = approx, f, df;
    double res = 0;
    eval(z, f, df, res);
    for (int it = 0; it < 30; ++it) {
        C step = f / df;
        double cap = 0.5 + 0.1 * std::abs(z);
        if (std::abs(step) > cap)
            step *= cap / std::abs(step);
        C nz = z - step;
        C nf, ndf;
        double nres;
        eval(nz, nf, ndf, nres);
        for (int h = 0; h < 20 && std::abs(nf) > std::abs(f) && std::abs(step) > 1e-14 * (1 + std::abs(z)); ++h) {
            step *= 0.5;
            nz = z - step;
            eval(nz, nf, ndf, nres);
        }
        z = nz;
        f = nf;
        df = ndf;
        res = nres;
        if (std::abs(step) <= 1e-14 * (1 + std::abs(z))) {
            GenAiryZero out;
            out.kind = AiryZeroKind::complex_first_quadrant;
            out.value = z;
            out.refined = true;
            out.residual = res;
            out.shift = std::abs(z - approx);
            return out;
        }
    }
    throw ConvergenceError("refine_zero: Newton iteration did not converge", z, res);
}

GenAiryZero complex_zeros(double u, int m, bool refine)
{
    if (!(u > 0))
        throw DomainError("complex_zeros: u must be positive");
    if (m < 1)
        throw IndexError("complex_zeros: m must be >= 1");
    if (near_odd_integer(u))
        throw PolynomialCaseError("complex_zeros: u is an odd integer (polynomial case)");
    double c = cos_half_pi(u);
    IndexShift sh = index_shift(u);
    C tau = c > 0 ? C(4.0 * m + 4.0 * sh.m_plus - u - 1, 2 / pi * std::log(2 * c))
                  : C(4.0 * m + 4.0 * sh.m_minus - u + 1, 2 / pi * std::log(std::abs(2 * c)));
    PhaseSeries ts = t_series(3 * pi * tau / 8.0);
    C seed = std::polar(1.0, pi / 3) * ts.value;

    GenAiryZero z;
    if (refine) {
        z = refine_zero(u, seed);
    } else {
        z.kind = AiryZeroKind::complex_first_quadrant;
        z.value = seed;
        const C e = std::polar(1.0, pi * std::fmod(u - 1.0 / 3, 2.0));
        AiryValue p = eval_ai_rotated(1, seed), q = eval_ai_rotated(-1, seed);
        z.residual = std::abs(1.0 + e * p.value / q.value * std::exp(p.log_scale - q.log_scale));
    }
    z.m = m;
    z.reliable = ts.reliable;
    return z;
}

} // namespace pcfz
