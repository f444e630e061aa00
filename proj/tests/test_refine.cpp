#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "pcfz/errors.hpp"
#include "pcfz/pcf.hpp"
#include "pcfz/refine.hpp"
#include "pcfz/zeros.hpp"

using namespace pcfz;
using C = std::complex<double>;
constexpr double pi = std::numbers::pi;

TEST_CASE("t_iterate reaches the tabulated a = 8.3 zero")
{
    const C table(-1.3827361451259055, 6.6036342033286323);
    RefinedZero r = t_iterate(8.3, zeros_apos(8.3, 1).z);
    CHECK(r.converged);
    CHECK(r.iterations <= 20);
    CHECK(r.residual <= 1e-13 * (1 + std::abs(r.value)));
    CHECK(std::abs(r.value - table) / std::abs(table) <= 5e-13);
    CHECK(r.seed == zeros_apos(8.3, 1).z);
}

TEST_CASE("t_iterate is idempotent")
{
    for (double a : {8.3, -6.2, 20.3}) {
        C seed = a > 0 ? zeros_apos(a, 4).z : zeros_aneg_complex(a, 4).z;
        RefinedZero r = t_iterate(a, seed);
        RefinedZero again = t_iterate(a, r.value);
        CHECK(again.iterations <= 1);
        CHECK(std::abs(again.value - r.value) <= 1e-13 * std::abs(r.value));
    }
}

TEST_CASE("t_iterate converges quartically")
{
    const double a = -6.2;
    const C ref = t_iterate(a, zeros_aneg_complex(a, 3).z).value;
    C z = ref + C(0.06, -0.04);
    std::vector<double> e{std::abs(z - ref)};
    for (int k = 0; k < 4; ++k) {
        z = t_map(a, z);
        e.push_back(std::abs(z - ref));
    }
    int informative = 0;
    for (std::size_t k = 0; k + 1 < e.size(); ++k) {
        if (e[k] < 1e-6)
            break;
        ++informative;
        CHECK(e[k + 1] <= 10 * std::pow(e[k], 4));
    }
    CHECK(informative >= 2);
    CHECK(e.back() <= 1e-13 * std::abs(ref));
}

TEST_CASE("t_iterate keeps real seeds real")
{
    const double a = -30.5;
    for (int m = 1; m <= 15; ++m) {
        RefinedZero r = t_iterate(a, zeros_aneg_positive(a, m).z);
        CHECK(r.value.imag() == 0);
        CHECK(r.converged);
    }
}

TEST_CASE("t_iterate moves at most half a local spacing")
{
    for (int m : {1, 2, 5, 20}) {
        for (double a : {8.3, -6.2}) {
            C seed = a > 0 ? zeros_apos(a, m, 1).z : zeros_aneg_complex(a, m, 1).z;
            RefinedZero r = t_iterate(a, seed);
            CHECK(std::abs(r.value - seed) <= 0.5 * pi / std::abs(local_frequency(a, r.value)));
        }
    }
}

TEST_CASE("t_iterate errors")
{
    CHECK_THROWS_AS(t_iterate(-1.0, C(2.0, 0)), DomainError);
    RefineOptions tight;
    tight.max_iter = 1;
    CHECK_THROWS_AS(t_iterate(8.3, zeros_apos(8.3, 1, 1).z + C(0.1, 0.1), tight), ConvergenceError);
    try {
        t_iterate(8.3, zeros_apos(8.3, 1, 1).z + C(0.1, 0.1), tight);
    } catch (const ConvergenceError& e) {
        CHECK(e.residual() > 0);
        CHECK(std::isfinite(e.last_iterate().real()));
    }
}

TEST_CASE("h_plus steps to the next zero")
{
    const double a = 8.3;
    std::vector<C> z;
    for (int m = 4; m <= 6; ++m)
        z.push_back(t_iterate(a, zeros_apos(a, m).z).value);
    C step = h_plus(a, z[1]) - z[1];
    CHECK(std::abs(std::abs(step) - std::abs(z[2] - z[1])) <= 0.3 * std::abs(z[2] - z[1]));
    CHECK(std::abs(h_plus(a, z[1])) > std::abs(z[1]));
}

TEST_CASE("sweep follows the zero ladder")
{
    SUBCASE("count 1 polishes only the start")
    {
        C seed = zeros_apos(8.3, 1).z;
        SweepResult s = sweep(8.3, seed, 1);
        REQUIRE(s.zeros.size() == 1);
        CHECK(s.zeros[0].value == t_iterate(8.3, seed).value);
    }
    SUBCASE("second zero for a = 8.3")
    {
        SweepResult s = sweep(8.3, zeros_apos(8.3, 1).z, 2);
        REQUIRE(s.zeros.size() == 2);
        C m2 = t_iterate(8.3, zeros_apos(8.3, 2).z).value;
        CHECK(std::abs(s.zeros[1].value - m2) <= 1e-12 * std::abs(m2));
    }
    for (double a : {8.3, -6.2}) {
        CAPTURE(a);
        C start = a > 0 ? zeros_apos(a, 1).z : zeros_aneg_complex(a, 1).z;
        SweepResult s = sweep(a, start, 20);
        REQUIRE(s.zeros.size() == 20);
        CHECK(s.branch_flips == 0);
        for (int k = 0; k < 20; ++k) {
            C v = s.zeros[k].value;
            if (k > 0)
                CHECK(std::abs(v) > std::abs(s.zeros[k - 1].value));
            C ladder = a > 0 ? zeros_apos(a, k + 1).z : zeros_aneg_complex(a, k + 1).z;
            C ref = t_iterate(a, ladder).value;
            CHECK(std::abs(v - ref) <= 1e-12 * std::abs(ref));
            double r = 0.2 * pi / std::abs(local_frequency(a, v));
            CHECK(winding_number(a, v, r) == 1);
        }
    }
}

TEST_CASE("sweep stops beyond the last real zero")
{
    const double a = -30.5;
    C largest = t_iterate(a, zeros_aneg_positive(a, 1).z).value;
    CHECK_THROWS(sweep(a, largest, 2));
}
