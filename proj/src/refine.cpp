#include "pcfz/refine.hpp"

#include <cmath>
#include <numbers>

#include "pcfz/errors.hpp"
#include "pcfz/pcf.hpp"

namespace pcfz {

using C = std::complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

void check_turning_point(double a, C z, const RefineOptions& opt)
{
    if (std::abs(z * z / 4.0 + a) < opt.turning_guard * (1 + std::abs(a)))
        throw DomainError("t_iterate: iterate too close to a turning point");
}

// q^{-1/2} arctan(q^{1/2} U/U').
C t_correction(double a, C z)
{
    PcfValue v = eval_U(a, z);
    if (v.derivative == C(0))
        throw DomainError("t_iterate: U' vanishes at the iterate");
    C sq = local_frequency(a, z);
    return std::atan(sq * (v.value / v.derivative)) / sq;
}

C outward(C z, C step)
{
    return (std::conj(z) * step).real() < 0 ? -step : step;
}

} // namespace

C local_frequency(double a, C z)
{
    return std::sqrt(-z * z / 4.0 - a);
}

C t_map(double a, C z)
{
    return z - t_correction(a, z);
}

RefinedZero t_iterate(double a, C z0, const RefineOptions& opt)
{
    RefinedZero r;
    r.seed = z0;
    const bool real = z0.imag() == 0;
    C z = z0;
    for (int it = 1; it <= opt.max_iter; ++it) {
        check_turning_point(a, z, opt);
        C c = t_correction(a, z);
        double bound = pi / (2 * std::abs(local_frequency(a, z)));
        for (int h = 0; h < 60 && !(std::abs(c) < bound); ++h)
            c *= 0.5;
        if (real)
            c = c.real();
        z -= c;
        r.value = z;
        r.iterations = it;
        r.residual = std::abs(c);
        if (r.residual <= opt.rel_tol * (1 + std::abs(z))) {
            r.converged = true;
            return r;
        }
    }
    throw ConvergenceError("t_iterate: no fixed point within max_iter steps", z, r.residual);
}

C h_plus(double a, C z)
{
    return z + outward(z, pi / local_frequency(a, z));
}

SweepResult sweep(double a, C z_start, int count, const RefineOptions& opt)
{
    SweepResult out;
    if (count < 1)
        return out;
    out.zeros.push_back(t_iterate(a, z_start, opt));
    C prev_step = 0;
    while (static_cast<int>(out.zeros.size()) < count) {
        C z = out.zeros.back().value;
        C step = pi / local_frequency(a, z);
        C ahead = outward(z, step);
        if (prev_step != C(0) && ahead != outward(prev_step, step))
            ++out.branch_flips;
        RefinedZero next = t_iterate(a, z + ahead, opt);
        double quarter = 0.25 * std::abs(step);
        for (const auto& f : out.zeros)
            if (std::abs(next.value - f.value) < quarter)
                throw ChainBreakError("sweep: step returned to a zero already found");
        if (!(std::abs(next.value) > std::abs(z)))
            throw ChainBreakError("sweep: step did not move outward");
        out.zeros.push_back(next);
        prev_step = ahead;
    }
    return out;
}

} // namespace pcfz
