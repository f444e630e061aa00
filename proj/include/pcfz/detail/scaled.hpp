#pragma once

#include <cmath>
#include <complex>

namespace pcfz::detail {

// A solution value and its derivative, both multiplied by exp(log_scale).
template <class T>
struct Scaled {
    std::complex<T> y{};
    std::complex<T> dy{};
    T log_scale = 0;

    void normalize()
    {
        T m = std::max(std::abs(y), std::abs(dy));
        if (m > 0 && std::isfinite(m)) {
            T l = std::log(m);
            y /= m;
            dy /= m;
            log_scale += l;
        }
    }

    Scaled conj() const { return {std::conj(y), std::conj(dy), log_scale}; }

    Scaled operator*(std::complex<T> c) const { return {y * c, dy * c, log_scale}; }
};

// c1*s1 + c2*s2 with the result expressed on the larger of the two scales.
template <class T>
Scaled<T> combine(std::complex<T> c1, const Scaled<T>& s1, std::complex<T> c2, const Scaled<T>& s2)
{
    T top = std::max(s1.log_scale, s2.log_scale);
    std::complex<T> f1 = c1 * std::exp(s1.log_scale - top);
    std::complex<T> f2 = c2 * std::exp(s2.log_scale - top);
    Scaled<T> r{f1 * s1.y + f2 * s2.y, f1 * s1.dy + f2 * s2.dy, top};
    r.normalize();
    return r;
}

} // namespace pcfz::detail
