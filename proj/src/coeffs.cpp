#include "pcfz/coeffs.hpp"

#include <array>
#include <cmath>

#include "pcfz/errors.hpp"
#include "pcfz/mapping.hpp"

namespace pcfz {

namespace {

using C = std::complex<double>;

constexpr double degenerate_zeta = 1e-10;

// Taylor coefficients of upsilon1 about zhat = 1.
constexpr std::array<double, 16> upsilon1_taylor = {
    -0.0404974623180494945818, 0.01959877188725358256305, -0.01074685903989900264105,
    0.005918430333740190711479, -0.003229773415524116957146, 0.001744953503650489901924,
    -0.0009344827722691205435557, 0.000496768180916118455274, -0.000262464894883246580014,
    0.0001379631340470242839215, -0.00007220721948166304106903, 0.00003765345480833658421696,
    -0.00001957319146301247432472, 0.0000101469249539578712765, -0.000005247754342807853847804,
    0.000002708339364591530972863,
};

C poly(const C& x, std::initializer_list<double> c)
{
    C r = 0;
    for (double v : c)
        r = r * x + v;
    return r;
}

void check_input(const CorrectionInput& in)
{
    if (std::abs(in.zeta0) < degenerate_zeta)
        throw DegenerateError("correction term: leading zero too close to the turning point");
}

} // namespace

CorrectionInput correction_input(C z0)
{
    MapBundle b = map_bundle(z0);
    return {z0, b.zeta, b.sigma};
}

C g_coeff(int s, C zhat)
{
    C x = zhat * zhat;
    C d = x - 1.0;
    if (std::abs(d) == 0)
        throw DomainError("g_coeff: pole at zhat = +-1");
    switch (s) {
    case 1:
        return -(x - 6.0) / (24.0 * d);
    case 2:
        return poly(x, {56, -252, 441, 1860, 3420}) / (5760.0 * std::pow(d, 4));
    case 3:
        return -poly(x, {3968, -29760, 96720, -177320, 199485, -1719018, -5480580, -1590120}) /
               (322560.0 * std::pow(d, 7));
    case 4:
        return poly(x, {130048, -1365504, 6486144, -18377408, 34457640, -44794932, 41062021, 495103464,
                        3107060712, 2497542880, 292852560}) /
               (3440640.0 * std::pow(d, 10));
    default:
        throw DomainError("g_coeff: s must be 1..4");
    }
}

C upsilon1(C zhat)
{
    C t = zhat - 1.0;
    if (std::abs(t) < 0.1) {
        C r = 0;
        for (auto it = upsilon1_taylor.rbegin(); it != upsilon1_taylor.rend(); ++it)
            r = r * t + *it;
        return r;
    }
    MapBundle b = map_bundle(zhat);
    C s3 = b.sigma * b.sigma * b.sigma;
    return (-2.0 * zhat * s3 * (zhat * zhat - 6.0) - 5.0) / (48.0 * b.zeta * b.zeta);
}

C correction1(const CorrectionInput& in)
{
    check_input(in);
    const C z = in.z0, s = in.sigma0, q = in.zeta0;
    return s / (48.0 * q * q) * (12.0 * z * s * q - 10.0 * z * z * z * s * s * s + 5.0);
}

C correction2(const CorrectionInput& in)
{
    check_input(in);
    const C z = in.z0, s = in.sigma0, q = in.zeta0;
    const C z2 = z * z;
    const C s2 = s * s, s3 = s2 * s;
    const C q2 = q * q, q3 = q2 * q;
    auto zp = [&](int n) { return std::pow(z, n); };
    auto sp = [&](int n) { return std::pow(s, n); };
    C brace = 200.0 * zp(7) * sp(9) * (221.0 * z2 + 35.0)
              - 720.0 * zp(5) * sp(7) * q * (221.0 * z2 + 25.0)
              - 4000.0 * zp(4) * sp(6)
              + 24.0 * zp(3) * sp(5) * q2 * (8847.0 * z2 + 580.0)
              + 5400.0 * z2 * sp(4) * q
              - 10.0 * z * s3 * (12432.0 * z2 * q3 + 288.0 * q3 - 25.0)
              - 1200.0 * s2 * q2
              + 27360.0 * z * s * q2 * q2
              - 5525.0;
    return -s / (46080.0 * q2 * q3) * brace;
}

} // namespace pcfz
