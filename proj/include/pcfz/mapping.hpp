#pragma once

#include <complex>

namespace pcfz {

// The turning-point map and its first two derivatives at one point.
struct MapBundle {
    std::complex<double> zhat;
    std::complex<double> zeta;
    std::complex<double> beta;
    std::complex<double> sigma;  // (zeta / (zhat^2 - 1))^{1/2}
    std::complex<double> zeta1;  // d zeta / d zhat
    std::complex<double> zeta2;
    std::complex<double> sigma1;
    std::complex<double> sigma2;
};

// zeta(zhat), analytic off the cut (-inf, -1], real for real zhat > -1.
std::complex<double> zeta(std::complex<double> zhat);

MapBundle map_bundle(std::complex<double> zhat);

// zhat with zeta(zhat) = target.
std::complex<double> invert_zeta(std::complex<double> target);

namespace detail {
// Direct closed forms, without the turning-point series; exposed for tests.
std::complex<double> zeta_outer(std::complex<double> zhat);
std::complex<double> zeta_inner(std::complex<double> zhat);
} // namespace detail

} // namespace pcfz
