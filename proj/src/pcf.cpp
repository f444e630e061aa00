#include "pcfz/pcf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "pcfz/detail/scaled.hpp"
#include "pcfz/detail/taylor_ode.hpp"
#include "pcfz/errors.hpp"

namespace pcfz {

namespace {

using detail::OdeState;
using detail::QuadraticPotential;
using detail::Scaled;

// Working precision of the evaluator; results are rounded to double at the end.
using T = long double;
using C = std::complex<T>;

const T eps = std::numeric_limits<T>::epsilon();
const T pi = std::numbers::pi_v<T>;

// Series about the origin is only attempted inside this radius.
constexpr T maclaurin_max_radius = 8;

struct Eval {
    Scaled<T> s;
    PcfMethod method;
    T est;  // relative to the local envelope
};

T rgamma(T x)
{
    if (x <= 0 && x == std::floor(x))
        return 0;
    return 1 / std::tgamma(x);
}

// e^{i pi x}
C exp_i_pi(T x)
{
    T r = std::fmod(x, T(2));
    return {std::cos(pi * r), std::sin(pi * r)};
}

T envelope_scale(T a, C z) { return std::max(T(1), std::sqrt(std::abs(z * z / T(4) + a))); }

T envelope(const Scaled<T>& s, T a, C z) { return std::max(std::abs(s.y), std::abs(s.dy) / envelope_scale(a, z)); }

Eval maclaurin(T a, C z)
{
    const T c0 = std::sqrt(pi) * rgamma(T(0.75) + a / 2) / std::exp2(a / 2 + T(0.25));
    const T c1 = -std::sqrt(pi) * rgamma(T(0.25) + a / 2) / std::exp2(a / 2 - T(0.25));
    if (z == C(0))
        return {{C(c0), C(c1), 0}, PcfMethod::series, eps};

    // q_k = p_k z^k with (k+1)(k+2) p_{k+2} = a p_k + p_{k-2}/4
    const C z2 = z * z, z4 = z2 * z2 / T(4);
    C qm2 = 0, qm1 = 0, q0 = c0, q1 = c1 * z;
    C sum = q0 + q1, dsum = q1;
    T asum = std::abs(q0) + std::abs(q1), adsum = std::abs(q1);
    for (int k = 0; k < 4000; ++k) {
        C q2 = (a * z2 * q0 + z4 * qm2) / T((k + 1) * (k + 2));
        sum += q2;
        dsum += T(k + 2) * q2;
        asum += std::abs(q2);
        adsum += (k + 2) * std::abs(q2);
        qm2 = qm1;
        qm1 = q0;
        q0 = q1;
        q1 = q2;
        if (k > 4 && std::abs(qm1) + std::abs(q0) + std::abs(q1) <= eps * T(1e-3) * (std::abs(sum) + asum * eps))
            break;
    }
    Scaled<T> s{sum, dsum / z, 0};
    T kap = envelope_scale(a, z);
    T env = std::max(std::abs(s.y), std::abs(s.dy) / kap);
    T est = eps * std::max(asum, adsum / std::abs(z) / kap) / env;
    s.normalize();
    return {s, PcfMethod::series, std::max(est, eps)};
}

// Poincare expansion, principal branches; |arg w| < 3pi/4.
Eval asymptotic(T A, C w)
{
    const C lw = std::log(w);
    const C w2 = w * w;
    const C E = -w2 / T(4) - (A + T(0.5)) * lw;
    C c = 1, S = 1, dS = 0;
    T prev = 1;
    T est = eps;
    for (int s = 1; s < 400; ++s) {
        C next = -c * (T(0.5) + A + T(2 * s - 2)) * (T(0.5) + A + T(2 * s - 1)) / (T(s) * T(2) * w2);
        T mag = std::abs(next);
        if (mag == 0)
            break;
        if (mag > prev) {
            est = std::max(eps, prev / std::abs(S));
            break;
        }
        c = next;
        S += c;
        dS += c * (T(-2 * s) / w);
        prev = mag;
        if (mag < eps * T(0.01) * std::abs(S))
            break;
    }
    C dy = (-(A + T(0.5)) / w - w / T(2)) * S + dS;
    C phase = std::polar(T(1), E.imag());
    Scaled<T> r{S * phase, dy * phase, E.real()};
    r.normalize();
    return {r, PcfMethod::asymptotic, est};
}

// Smallest radius where the Poincare expansion reaches working precision.
T far_radius(T A)
{
    const T target = eps * 4;
    T R = 4;
    for (;;) {
        T t = 1;
        bool ok = false;
        for (int s = 1; s < 400; ++s) {
            T f = std::abs((T(0.5) + A + T(2 * s - 2)) * (T(0.5) + A + T(2 * s - 1))) / (T(s) * 2 * R * R);
            t *= f;
            if (t < target) {
                ok = true;
                break;
            }
            if (f > 1 && t > 1)
                break;
        }
        if (ok)
            return R;
        R *= T(1.1);
    }
}

// Re w >= 0.
Eval right_half(T A, C w)
{
    if (w.imag() < 0) {
        Eval e = right_half(A, std::conj(w));
        e.s = e.s.conj();
        return e;
    }
    const T R = far_radius(A);
    const T r = std::abs(w);
    if (r >= R)
        return asymptotic(A, w);
    if (r <= maclaurin_max_radius) {
        Eval m = maclaurin(A, w);
        if (m.est <= 64 * eps)
            return m;
    }
    const QuadraticPotential<T> pot{C(A), C(0), C(T(0.25))};
    Eval start = asymptotic(A, C(R));
    OdeState<T> st{C(R), start.s};
    detail::walk_line(pot, st, C(r));
    detail::walk_arc(pot, st, std::arg(w), w);
    T est = start.est + 8 * eps * std::sqrt(T(st.steps + 1));
    return {st.s, PcfMethod::continuation, est};
}

Eval eval_full(T A, C z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(A))
        throw DomainError("eval_U: non-finite argument");
    if (z.imag() < 0) {
        Eval e = eval_full(A, std::conj(z));
        e.s = e.s.conj();
        return e;
    }
    if (z.real() >= 0)
        return right_half(A, z);
    if (std::abs(z) <= maclaurin_max_radius) {
        Eval m = maclaurin(A, z);
        if (m.est <= 64 * eps)
            return m;
    }
    // U(a,z) = e^{-i phi} [ sqrt(2 pi)/Gamma(1/2+a) U(-a,-iz) - e^{-i phi} U(a,-z) ], phi = pi(a/2 - 1/4)
    const C I(0, 1);
    const C e = exp_i_pi(-(A / 2 - T(0.25)));
    const T K = std::sqrt(2 * pi) * rgamma(T(0.5) + A);
    Eval p = right_half(-A, -I * z);
    Eval q = right_half(A, -z);
    p.s.dy *= -I;
    q.s.dy *= -1;
    Scaled<T> s = detail::combine(e * K, p.s, -e * e, q.s);
    T top = s.log_scale;
    T parts = std::abs(K) * envelope(p.s, -A, -I * z) * std::exp(p.s.log_scale - top) +
              envelope(q.s, A, -z) * std::exp(q.s.log_scale - top);
    T est = std::max(p.est, q.est) * parts / envelope(s, A, z);
    PcfMethod method = (p.method == PcfMethod::continuation || q.method == PcfMethod::continuation)
                           ? PcfMethod::continuation
                           : PcfMethod::asymptotic;
    return {s, method, est};
}

PcfValue to_public(const Eval& e)
{
    PcfValue v;
    v.method = e.method;
    v.est_accuracy = std::max(double(e.est), std::numeric_limits<double>::epsilon());
    if (std::abs(e.s.log_scale) < 600) {
        T f = std::exp(e.s.log_scale);
        v.value = std::complex<double>(e.s.y * f);
        v.derivative = std::complex<double>(e.s.dy * f);
        v.log_scale = 0;
    } else {
        // keep the exponent an integer so it survives rounding to double exactly
        T whole = std::round(e.s.log_scale);
        T f = std::exp(e.s.log_scale - whole);
        v.value = std::complex<double>(e.s.y * f);
        v.derivative = std::complex<double>(e.s.dy * f);
        v.log_scale = double(whole);
    }
    return v;
}

} // namespace

std::string_view to_string(PcfMethod m)
{
    switch (m) {
    case PcfMethod::series:
        return "series";
    case PcfMethod::asymptotic:
        return "asymptotic";
    case PcfMethod::quadrature:
        return "quadrature";
    case PcfMethod::continuation:
        return "continuation";
    }
    return "unknown";
}

std::complex<double> ScaledComplex::value() const
{
    return mantissa * std::exp(log_scale);
}

PcfValue eval_U(double a, std::complex<double> z) { return to_public(eval_full(a, C(z))); }

PcfValue eval_U_series(double a, std::complex<double> z) { return to_public(maclaurin(a, C(z))); }

PcfValue eval_U_asymptotic(double a, std::complex<double> z)
{
    if (z == 0.0 || std::abs(std::arg(z)) >= 0.75 * std::numbers::pi)
        throw DomainError("eval_U_asymptotic: requires |arg z| < 3pi/4");
    Eval e = asymptotic(a, C(z));
    // beyond the Stokes line the omitted recessive term grows relative to the sum
    const C zz(z);
    if (std::abs(std::arg(zz)) > pi / 4) {
        T extra = std::sqrt(2 * pi) * std::abs(rgamma(T(0.5) + a)) *
                  std::exp((zz * zz).real() / 2 + 2 * T(a) * std::log(std::abs(zz)));
        e.est = std::max(e.est, extra);
    }
    return to_public(e);
}

PcfValue eval_U_quadrature(double a, std::complex<double> z)
{
    if (!(a > -0.5))
        throw DomainError("eval_U_quadrature: requires a > -1/2");
    using CD = std::complex<double>;
    boost::math::quadrature::exp_sinh<double> es;
    double err0 = 0, err1 = 0, l0 = 0, l1 = 0;
    auto integrand = [&](double power) {
        return [&, power](double t) -> CD {
            double ex = -0.5 * t * t - z.real() * t;
            if (ex < -745)
                return 0.0;
            return std::pow(t, power) * std::exp(CD(ex, -z.imag() * t));
        };
    };
    CD i0 = es.integrate(integrand(a - 0.5), 1e-16, &err0, &l0);
    CD i1 = es.integrate(integrand(a + 0.5), 1e-16, &err1, &l1);
    CD pre = std::exp(-z * z / 4.0) / std::tgamma(a + 0.5);
    PcfValue v;
    v.value = pre * i0;
    v.derivative = -z / 2.0 * v.value - pre * i1;
    v.method = PcfMethod::quadrature;
    // error estimate scaled by the conditioning of the oscillatory integral
    double cond0 = l0 / std::max(std::abs(i0), 1e-300), cond1 = l1 / std::max(std::abs(i1), 1e-300);
    v.est_accuracy = std::max({err0 * cond0, err1 * cond1, 1e-16 * std::max(cond0, cond1)});
    return v;
}

ScaledComplex eval_U_prime(double a, std::complex<double> z)
{
    const C zz(z);
    Eval u = eval_full(a, zz);
    Eval um = eval_full(T(a) - 1, zz);
    Scaled<T> d = detail::combine(zz / T(2), u.s, C(-1), um.s);
    if (std::abs(d.log_scale) < 600)
        return {std::complex<double>(d.y * std::exp(d.log_scale)), 0};
    T whole = std::round(d.log_scale);
    return {std::complex<double>(d.y * std::exp(d.log_scale - whole)), double(whole)};
}

double residual_eq319(double a, std::complex<double> w)
{
    if (!(a < 0))
        throw DomainError("residual_eq319: requires a < 0");
    const T u = -2 * T(a);
    const C I(0, 1);
    const C arg = I * std::sqrt(2 * u) * C(w);
    Eval num = eval_full(u / 2, arg);
    Eval den = eval_full(u / 2, -arg);
    if (std::abs(den.s.y) == 0 || den.s.log_scale - num.s.log_scale > 11000)
        throw DomainError("residual_eq319: denominator vanishes");
    C ratio = num.s.y / den.s.y * std::exp(num.s.log_scale - den.s.log_scale);
    return double(std::abs(T(1) + I * exp_i_pi(-u / 2) * ratio));
}

ValidationRecord metrics(std::complex<double> z_approx, std::complex<double> z_ref)
{
    if (z_ref == 0.0)
        throw DomainError("metrics: reference zero at the origin");
    ValidationRecord r;
    r.z_approx = z_approx;
    r.z_ref = z_ref;
    r.g1_approx = std::abs(z_approx);
    r.g1_ref = std::abs(z_ref);
    r.eps1 = std::abs(1 - r.g1_approx / r.g1_ref);
    if (z_approx.imag() != 0)
        r.g2_approx = z_approx.real() / z_approx.imag();
    if (z_ref.imag() != 0)
        r.g2_ref = z_ref.real() / z_ref.imag();
    if (z_ref.real() * z_ref.imag() != 0 && r.g2_approx)
        r.eps2 = std::abs(1 - *r.g2_approx / *r.g2_ref);
    return r;
}

int winding_number(double a, std::complex<double> center, double radius)
{
    for (int n = 64; n <= 16384; n *= 2) {
        double total = 0;
        bool smooth = true;
        double prev = std::arg(eval_U(a, center + radius).value);
        for (int k = 1; k <= n; ++k) {
            double th = 2 * std::numbers::pi * k / n;
            double ph = std::arg(eval_U(a, center + std::polar(radius, th)).value);
            double d = std::remainder(ph - prev, 2 * std::numbers::pi);
            if (std::abs(d) > std::numbers::pi / 3) {
                smooth = false;
                break;
            }
            total += d;
            prev = ph;
        }
        if (smooth)
            return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
    }
    throw ConvergenceError("winding_number: phase too rough on the circle", center, radius);
}

} // namespace pcfz
