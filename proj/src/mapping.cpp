#include "pcfz/mapping.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "pcfz/errors.hpp"

namespace pcfz {

namespace {

using C = std::complex<double>;

constexpr double series_radius = 0.3;
const double cbrt2 = std::cbrt(2.0);

// Coefficients of P(t) = 1 + O(t), where (3/2) xi = sqrt(2) t^{3/2} P(t), t = zhat - 1.
// P_k = (3/2) binom(1/2, k) 2^{-k} / (k + 3/2)
struct PSeries {
    std::array<double, 40> c{};
    PSeries()
    {
        double b = 1;
        for (int k = 0; k < static_cast<int>(c.size()); ++k) {
            c[k] = 1.5 * b / (k + 1.5);
            b *= (0.5 - k) / (k + 1) / 2;
        }
    }
};
const PSeries pseries;

struct PValue {
    C p, p1, p2;
};

PValue eval_p(C t)
{
    PValue v{0, 0, 0};
    C pw = 1, pw1 = 0, pw2 = 0;  // t^k, k t^{k-1}, k(k-1) t^{k-2}
    for (int k = 0; k < static_cast<int>(pseries.c.size()); ++k) {
        C term = pseries.c[k] * pw;
        v.p += term;
        v.p1 += pseries.c[k] * pw1;
        v.p2 += pseries.c[k] * pw2;
        if (k > 3 && std::abs(term) < 1e-18)
            break;
        pw2 = pw2 * t + 2.0 * pw1;
        pw1 = pw1 * t + pw;
        pw *= t;
    }
    return v;
}

MapBundle bundle_near_turning_point(C zhat)
{
    C t = zhat - 1.0;
    MapBundle b;
    b.zhat = zhat;
    PValue v = eval_p(t);
    C L1 = v.p1 / (3.0 * v.p) - 1.0 / (2.0 * (2.0 + t));
    C L2 = (v.p2 * v.p - v.p1 * v.p1) / (3.0 * v.p * v.p) + 1.0 / (2.0 * (2.0 + t) * (2.0 + t));
    C p13 = std::pow(v.p, 1.0 / 3);
    b.zeta = cbrt2 * t * p13 * p13;
    b.sigma = std::pow(2.0, 1.0 / 6) * p13 / std::sqrt(2.0 + t);
    b.sigma1 = b.sigma * L1;
    b.sigma2 = b.sigma * (L2 + L1 * L1);
    b.zeta1 = 1.0 / b.sigma;
    b.zeta2 = -b.sigma1 / (b.sigma * b.sigma);
    return b;
}

C beta_of(C zhat)
{
    if (std::abs(zhat) >= 1)
        return 1.0 / std::sqrt(1.0 - 1.0 / (zhat * zhat));
    C s = std::sqrt(1.0 - zhat * zhat);
    const C i(0, 1);
    return (zhat.imag() >= 0 ? -i : i) * zhat / s;
}

void check_domain(C zhat)
{
    if (!std::isfinite(zhat.real()) || !std::isfinite(zhat.imag()))
        throw DomainError("zeta: non-finite argument");
    if (zhat.imag() == 0 && zhat.real() <= -1)
        throw DomainError("zeta: argument on the cut (-inf, -1]");
}

} // namespace

C detail::zeta_outer(C z)
{
    C iz2 = 1.0 / (z * z);
    C r = std::sqrt(1.0 - iz2);
    C br = 0.75 * (r - iz2 * std::log(1.0 + r) - iz2 * std::log(z));
    return std::pow(z, 4.0 / 3) * std::pow(br, 2.0 / 3);
}

C detail::zeta_inner(C z)
{
    C br = 0.75 * (std::acos(z) - z * std::sqrt(1.0 - z * z));
    return -std::pow(br, 2.0 / 3);
}

C zeta(C zhat)
{
    check_domain(zhat);
    if (std::abs(zhat - 1.0) < series_radius)
        return bundle_near_turning_point(zhat).zeta;
    if (zhat.imag() == 0) {
        // real section: keep the result exactly real
        double x = zhat.real();
        return std::abs(x) >= 1 ? detail::zeta_outer(x).real() : detail::zeta_inner(x).real();
    }
    return std::abs(zhat) >= 1 ? detail::zeta_outer(zhat) : detail::zeta_inner(zhat);
}

MapBundle map_bundle(C zhat)
{
    check_domain(zhat);
    MapBundle b;
    if (std::abs(zhat - 1.0) < series_radius) {
        b = bundle_near_turning_point(zhat);
    } else {
        b.zhat = zhat;
        b.zeta = zeta(zhat);
        C s = std::sqrt(b.zeta / (zhat * zhat - 1.0));
        if (zhat.imag() == 0)
            s = s.real();
        b.sigma = s;
        C s3 = s * s * s;
        b.zeta1 = 1.0 / s;
        b.sigma1 = (1.0 - 2.0 * zhat * s3) / (2.0 * b.zeta);
        b.zeta2 = (2.0 * zhat * s3 - 1.0) / (2.0 * s * s * b.zeta);
        C s4 = s3 * s, s6 = s3 * s3;
        b.sigma2 = (6.0 * s6 + 4.0 * s4 * b.zeta - zhat * s3 - 1.0) / (2.0 * s * b.zeta * b.zeta);
    }
    b.beta = beta_of(zhat);
    return b;
}

C invert_zeta(C target)
{
    const double tol = 1e-14 * (1 + std::abs(target));
    const double zeta_m1 = -std::pow(0.75 * std::numbers::pi, 2.0 / 3);

    if (target.imag() == 0 && target.real() < 0) {
        double zt = target.real();
        if (zt <= zeta_m1)
            throw DomainError("invert_zeta: target maps onto the cut");
        auto f = [&](double x) { return zeta(C(x)).real() - zt; };
        boost::math::tools::eps_tolerance<double> stop(52);
        std::uintmax_t iters = 200;
        auto [lo, hi] = boost::math::tools::toms748_solve(f, -1.0, 1.0, zeta_m1 - zt, -zt, stop, iters);
        return 0.5 * (lo + hi);
    }

    C z;
    if (std::abs(target) < 1.5) {
        z = 1.0 + target / cbrt2;
    } else {
        C zt32 = std::pow(target, 1.5);
        z = std::sqrt(4.0 / 3 * zt32 + 0.5);
        for (int k = 0; k < 4; ++k)
            z = std::sqrt(4.0 / 3 * zt32 + std::log(2.0 * z) + 0.5);
    }
    if (target.imag() == 0)
        z = z.real();

    C f = zeta(z) - target;
    for (int it = 0; it < 100; ++it) {
        if (std::abs(f) <= tol)
            return z;
        MapBundle b = map_bundle(z);
        C step = f * b.sigma;
        double cap = 0.5 * std::max(std::abs(z), 0.5);
        if (std::abs(step) > cap)
            step *= cap / std::abs(step);
        C next, fn;
        for (int h = 0; h < 40; ++h) {
            next = z - step;
            if (!(next.imag() == 0 && next.real() <= -1)) {
                fn = zeta(next) - target;
                if (std::abs(fn) < std::abs(f) || std::abs(step) < 1e-15 * std::abs(z))
                    break;
            }
            step *= 0.5;
        }
        if (std::abs(step) <= 1e-16 * std::abs(z) && std::abs(fn) <= 100 * tol)
            return next;
        z = next;
        f = fn;
    }
    throw ConvergenceError("invert_zeta: Newton iteration did not converge", z, std::abs(f));
}

} // namespace pcfz
