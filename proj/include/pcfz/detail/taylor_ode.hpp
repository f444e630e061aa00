#pragma once

// Taylor-series continuation for y'' = (c0 + c1 z + c2 z^2) y.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "pcfz/detail/scaled.hpp"

namespace pcfz::detail {

template <class T>
struct QuadraticPotential {
    std::complex<T> c0, c1, c2;

    std::complex<T> operator()(std::complex<T> z) const { return c0 + z * (c1 + c2 * z); }

    // Inverse length scale of the solutions near z.
    T scale(std::complex<T> z) const
    {
        T q0 = std::abs((*this)(z));
        T q1 = std::abs(c1 + T(2) * c2 * z);
        T q2 = std::abs(c2);
        return std::max({std::sqrt(q0), std::cbrt(q1), std::sqrt(std::sqrt(q2)), T(1)});
    }
};

template <class T>
struct OdeState {
    std::complex<T> z{};
    Scaled<T> s{};
    int steps = 0;
};

// Largest step length used by the path walkers, in units of 1/scale.
template <class T>
inline constexpr T taylor_reach = T(1.5);

// One Taylor step of length h from st.z; st.z becomes `to` (== st.z + h).
template <class T>
void taylor_step(const QuadraticPotential<T>& pot, OdeState<T>& st, std::complex<T> to)
{
    using C = std::complex<T>;
    const T eps = std::numeric_limits<T>::epsilon();
    const C z = st.z;
    const C h = to - z;
    const C h2 = h * h;
    const C q0 = pot(z) * h2;
    const C q1 = (pot.c1 + T(2) * pot.c2 * z) * h2 * h;
    const C q2 = pot.c2 * h2 * h2;

    // p_k = y^{(k)}(z) h^k / k!
    C a{}, b{}, c = st.s.y, d = st.s.dy * h;
    C sum = c + d;
    C dsum = d;
    T big = std::max(std::abs(c), std::abs(d));
    for (int k = 0; k < 500; ++k) {
        C e = (q0 * c + q1 * b + q2 * a) / T((k + 1) * (k + 2));
        sum += e;
        dsum += T(k + 2) * e;
        T ae = std::abs(e);
        big = std::max(big, ae);
        a = b;
        b = c;
        c = d;
        d = e;
        if (k >= 2 && std::abs(b) + std::abs(c) + ae <= eps * T(0.01) * big)
            break;
    }
    st.s.y = sum;
    st.s.dy = dsum / h;
    st.z = to;
    st.s.normalize();
    ++st.steps;
}

// Walk in a straight line to `to`.
template <class T>
void walk_line(const QuadraticPotential<T>& pot, OdeState<T>& st, std::complex<T> to)
{
    for (;;) {
        std::complex<T> rest = to - st.z;
        T len = std::abs(rest);
        if (len == 0)
            return;
        T step = taylor_reach<T> / pot.scale(st.z);
        if (len <= step) {
            taylor_step(pot, st, to);
            return;
        }
        taylor_step(pot, st, st.z + rest * (step / len));
    }
}

// Walk along the circle |z| = r (r = |st.z|) from arg st.z to angle theta.
template <class T>
void walk_arc(const QuadraticPotential<T>& pot, OdeState<T>& st, T theta, std::complex<T> to)
{
    const T r = std::abs(st.z);
    T phi = std::arg(st.z);
    for (;;) {
        T rest = theta - phi;
        if (rest == 0)
            break;
        T dphi = taylor_reach<T> / (pot.scale(st.z) * r);
        if (std::abs(rest) <= dphi) {
            taylor_step(pot, st, to);
            return;
        }
        phi += rest > 0 ? dphi : -dphi;
        taylor_step(pot, st, std::polar(r, phi));
    }
}

} // namespace pcfz::detail
