#include "pcfz/airy.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pcfz/detail/scaled.hpp"
#include "pcfz/detail/taylor_ode.hpp"
#include "pcfz/errors.hpp"

namespace pcfz {

namespace {

using detail::OdeState;
using detail::QuadraticPotential;
using detail::Scaled;

using T = double;
using C = std::complex<T>;

constexpr T ai0 = 0.355028053887817239260063186004183176;
constexpr T aip0 = -0.258819403792806798405183560189203963;

constexpr T maclaurin_radius = 1.0;
constexpr T asymptotic_radius = 11.0;

const QuadraticPotential<T> airy_potential{C(0), C(1), C(0)};

Scaled<T> ai_asymptotic(C z)
{
    const T eps = std::numeric_limits<T>::epsilon();
    C sq = std::sqrt(z);
    C z14 = std::sqrt(sq);
    C eta = T(2) / 3 * z * sq;
    C ieta = T(1) / eta;

    C s = 1, d = 1, pw = 1;
    T u = 1;
    T last = std::numeric_limits<T>::infinity();
    for (int k = 1; k < 60; ++k) {
        u *= T(6 * k - 5) * T(6 * k - 3) * T(6 * k - 1) / (T(2 * k - 1) * 216 * k);
        T v = -T(6 * k + 1) / T(6 * k - 1) * u;
        pw *= -ieta;
        C ts = u * pw;
        T mag = std::abs(ts);
        if (mag > last)
            break;
        s += ts;
        d += v * pw;
        last = mag;
        if (mag < eps * T(0.1) * std::abs(s))
            break;
    }
    const T norm = T(0.5) / std::sqrt(std::numbers::pi_v<T>);
    C phase = std::polar(T(1), -eta.imag());
    Scaled<T> r{s * norm / z14 * phase, -d * norm * z14 * phase, -eta.real()};
    r.normalize();
    return r;
}

// Ai on 0 <= arg z <= 2pi/3.
Scaled<T> ai_sector(C z)
{
    T r = std::abs(z);
    if (r <= maclaurin_radius) {
        OdeState<T> st{C(0), {C(ai0), C(aip0), 0}};
        detail::walk_line(airy_potential, st, z);
        return st.s;
    }
    if (r >= asymptotic_radius)
        return ai_asymptotic(z);
    OdeState<T> st{C(asymptotic_radius), ai_asymptotic(C(asymptotic_radius))};
    detail::walk_line(airy_potential, st, C(r));
    detail::walk_arc(airy_potential, st, std::arg(z), z);
    return st.s;
}

Scaled<T> ai_scaled(C z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError("eval_ai: non-finite argument");
    if (z.imag() < 0)
        return ai_scaled(std::conj(z)).conj();
    if (std::abs(z) <= maclaurin_radius || std::arg(z) <= 2 * std::numbers::pi_v<T> / 3)
        return ai_sector(z);
    // Ai(z) = e^{pi i/3} Ai(z w^-1) + e^{-pi i/3} Ai(z w), w = e^{2 pi i/3}
    const C w = std::polar(T(1), 2 * std::numbers::pi_v<T> / 3);
    const C e = std::polar(T(1), std::numbers::pi_v<T> / 3);
    Scaled<T> p = ai_scaled(z * std::conj(w));
    Scaled<T> q = ai_scaled(z * w);
    p.dy *= std::conj(w);
    q.dy *= w;
    return detail::combine(e, p, std::conj(e), q);
}

AiryValue to_public(const Scaled<T>& s)
{
    if (std::abs(s.log_scale) < 600) {
        T f = std::exp(s.log_scale);
        return {s.y * f, s.dy * f, 0};
    }
    T whole = std::round(s.log_scale);
    T f = std::exp(s.log_scale - whole);
    return {s.y * f, s.dy * f, whole};
}

} // namespace

AiryValue eval_ai(std::complex<double> z) { return to_public(ai_scaled(z)); }

AiryValue eval_ai_rotated(int l, std::complex<double> z)
{
    if (l != 1 && l != -1)
        throw DomainError("eval_ai_rotated: l must be +1 or -1");
    const C rot = std::polar(T(1), -2 * std::numbers::pi_v<T> * l / 3);
    Scaled<T> s = ai_scaled(z * rot);
    s.dy *= rot;
    return to_public(s);
}

AiryValue eval_bi_real(double x)
{
    // Bi(x) = 2 Re[e^{pi i/6} Ai(x e^{2 pi i/3})]
    const C w = std::polar(T(1), 2 * std::numbers::pi_v<T> / 3);
    const C e = std::polar(T(1), std::numbers::pi_v<T> / 6);
    Scaled<T> s = ai_scaled(x * w);
    Scaled<T> r{C(2 * (e * s.y).real()), C(2 * (e * w * s.dy).real()), s.log_scale};
    return to_public(r);
}

std::complex<double> detail::airy_phase_series(std::complex<double> t)
{
    C t2 = T(1) / (t * t);
    C poly = T(1) + t2 * (T(5) / 48 + t2 * (T(-5) / 36 + t2 * (T(77125) / 82944 + t2 * (T(-108056875) / 6967296))));
    return std::pow(t, T(2) / 3) * poly;
}

double real_airy_zero(int m)
{
    if (m < 1)
        throw IndexError("real_airy_zero: m must be >= 1");
    T x = -detail::airy_phase_series(C(3 * std::numbers::pi_v<T> * (4 * m - 1) / 8)).real();
    for (int it = 0; it < 30; ++it) {
        AiryValue v = eval_ai(C(x));
        T dx = v.value.real() / v.derivative.real();
        x -= dx;
        if (std::abs(dx) <= 4 * std::numeric_limits<T>::epsilon() * std::abs(x))
            break;
    }
    return x;
}

} // namespace pcfz
