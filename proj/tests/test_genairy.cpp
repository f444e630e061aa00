#include <doctest.h>

#include <boost/math/special_functions/airy.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "pcfz/errors.hpp"
#include "pcfz/genairy.hpp"

using namespace pcfz;
using C = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

// Independent oracle: bracketed roots of sin(u pi/2) Ai + cos(u pi/2) Bi with Boost's Airy functions.
double comb(double u, double x)
{
    return std::sin(u * pi / 2) * boost::math::airy_ai(x) + std::cos(u * pi / 2) * boost::math::airy_bi(x);
}

// Non-positive roots in (xmin, 0], largest first.
std::vector<double> oracle_neg_roots(double u, double xmin)
{
    std::vector<double> out;
    double hi = 0, fhi = comb(u, 0);
    if (fhi == 0)
        out.push_back(0);
    for (double lo = -0.01; lo > xmin; lo -= 0.01) {
        double flo = comb(u, lo);
        if ((flo < 0) != (fhi < 0)) {
            boost::math::tools::eps_tolerance<double> tol(50);
            std::uintmax_t it = 100;
            auto [a, b] = boost::math::tools::toms748_solve([&](double x) { return comb(u, x); }, lo, hi, flo, fhi, tol, it);
            out.push_back(0.5 * (a + b));
        }
        hi = lo;
        fhi = flo;
    }
    return out;
}

} // namespace

TEST_CASE("mu")
{
    CHECK(mu(1.2) == doctest::Approx(2.4).epsilon(1e-14));
    CHECK(mu(1.5) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(mu(3.2) == doctest::Approx(2.4).epsilon(1e-13));
    CHECK(mu(0) == 0);
    for (double u = 0.05; u < 9; u += 0.37) {
        CHECK(std::abs(mu(u + 2) - mu(u)) < 1e-12);
        CHECK(mu(u) > -8.0 / 3);
        CHECK(mu(u) <= 8.0 / 3);
    }
    CHECK_THROWS_AS(mu(-1), DomainError);
}

TEST_CASE("index shifts on a grid")
{
    for (int k = 0; k < 20; ++k) {
        double u = 1.1 + 1.37 * k;
        IndexShift s = index_shift(u);
        CHECK(s.m_plus == static_cast<int>(std::floor((u + 1) / 4)));
        CHECK(s.m_minus == static_cast<int>(std::floor((u - 1) / 4)));
        double r = u - 2 * std::floor(u / 2);
        CHECK(s.vartheta == ((r > 1 && r < 4.0 / 3) ? 1 : 0));
    }
    CHECK(vartheta(1.2) == 1);
    CHECK(vartheta(12.4) == 0);
    CHECK(vartheta(3.3) == 1);
    CHECK(index_shift(12.4).m_plus == 3);
    CHECK(index_shift(16.6).m_plus == 4);
}

TEST_CASE("phase series")
{
    C t(7.0, 0.0);
    double t2 = 1 / 49.0;
    double expect = std::pow(7.0, 2.0 / 3) *
                    (1 + 5.0 / 48 * t2 - 5.0 / 36 * t2 * t2 + 77125.0 / 82944 * t2 * t2 * t2 - 108056875.0 / 6967296 * t2 * t2 * t2 * t2);
    CHECK(std::abs(t_series(t).value - expect) < 1e-14);
    CHECK(t_series(t).reliable);
    CHECK_FALSE(t_series(1.5).reliable);
    CHECK(std::abs(t_series(1e8).value / std::pow(1e8, 2.0 / 3) - 1.0) < 1e-15);
    // u = 0 mod 2: zeros of Bi; tau = 5 gives the second one, where the
    // truncated series is still ~1e-5 off; tau = 9 reaches 1e-6
    double z2 = -t_series(3 * pi * 5 / 8).value.real();
    CHECK(std::abs(z2 - boost::math::airy_bi_zero<double>(2)) < 5e-5);
    CHECK(std::abs(z2 - neg_zeros(2.0, 2).value.real()) < 5e-5);
    double z3 = -t_series(3 * pi * 9 / 8).value.real();
    CHECK(std::abs(z3 - boost::math::airy_bi_zero<double>(3)) < 1e-6);
    CHECK(std::abs(z3 - neg_zeros(2.0, 3).value.real()) < 1e-6);
}

TEST_CASE("negative zeros against the independent root finder")
{
    for (double u : {12.4, 16.6, 5.5, 1.2, 1.5, 2.0, 0.7}) {
        auto roots = oracle_neg_roots(u, -30);
        INFO("u = " << u);
        double prev = 1;
        for (int m = 1; m <= 10; ++m) {
            GenAiryZero z = neg_zeros(u, m);
            CHECK(z.kind == AiryZeroKind::negative_real);
            CHECK(z.refined);
            CHECK(z.value.imag() == 0);
            CHECK(z.value.real() <= 0);
            CHECK(z.value.real() < prev);
            prev = z.value.real();
            CHECK(std::abs(z.value.real() - roots[m - 1]) < 1e-12);
            CHECK(z.residual <= 1e-12);
            if (m >= 2)
                CHECK(std::abs(neg_zeros(u, m, false).value.real() - roots[m - 1]) < 1e-4);
        }
    }
    // u = 12.4: mu = 0.8, tau_2 = 5.8
    GenAiryZero a2 = neg_zeros(12.4, 2, false);
    CHECK(std::abs(a2.value.real() + t_series(3 * pi * 5.8 / 8).value.real()) < 1e-14);
}

TEST_CASE("asymptotic negative zeros improve with m")
{
    for (double u : {12.4, 16.6}) {
        double prev = 1;
        for (int m = 2; m <= 20; ++m) {
            double d = std::abs(neg_zeros(u, m, false).value.real() - neg_zeros(u, m).value.real());
            CHECK(d <= prev + 1e-13);
            prev = d;
        }
        CHECK(prev < 1e-9);
    }
}

TEST_CASE("sole positive zero")
{
    auto z = sole_positive_zero(1.2);
    REQUIRE(z.has_value());
    CHECK(z->kind == AiryZeroKind::sole_positive);
    CHECK(z->value.real() > 0);
    CHECK(std::abs(comb(1.2, z->value.real())) <= 1e-12);
    CHECK(z->residual <= 1e-12);
    CHECK_FALSE(sole_positive_zero(12.4).has_value());
    auto z3 = sole_positive_zero(3.3);
    REQUIRE(z3.has_value());
    CHECK(std::abs(comb(3.3, z3->value.real())) <= 1e-12);
    auto z43 = sole_positive_zero(4.0 / 3);
    REQUIRE(z43.has_value());
    CHECK(z43->value == 0.0);
    // close to an odd integer the zero moves out but is still found
    auto far = sole_positive_zero(1 + 1e-9);
    REQUIRE(far.has_value());
    CHECK(far->value.real() > 4);
}

TEST_CASE("complex zeros")
{
    struct Ref {
        double u;
        int m;
        C z;
    };
    const Ref refs[] = {
        {12.4, 1, C(0.92578043270389628961, 1.9287094847094856747)},
        {12.4, 2, C(1.8613508755962176477, 3.4660207745428185856)},
        {16.6, 1, C(0.96304726192709100319, 1.7801092823535613516)},
        {1.2, 1, C(1.4909722648619522771, 2.293260915760557908)},
    };
    for (const auto& r : refs) {
        GenAiryZero z = complex_zeros(r.u, r.m);
        CHECK(z.kind == AiryZeroKind::complex_first_quadrant);
        CHECK(std::abs(z.value - r.z) < 1e-13 * std::abs(r.z));
        CHECK(z.residual <= 1e-12);
        CHECK(z.value.real() > 0);
        CHECK(z.value.imag() > 0);
    }
    // seed formula at u = 16.6
    C tau(2.4, 2 / pi * std::log(2 * std::cos(0.3 * pi)));
    C seed = std::polar(1.0, pi / 3) * t_series(3 * pi * tau / 8.0).value;
    CHECK(std::abs(complex_zeros(16.6, 1, false).value - seed) < 1e-14);

    // arg -> pi/3 and shifts shrink with m
    GenAiryZero z5 = complex_zeros(12.4, 5), z50 = complex_zeros(12.4, 50);
    CHECK(std::abs(std::arg(z50.value) - pi / 3) < std::abs(std::arg(z5.value) - pi / 3));
    CHECK(complex_zeros(12.4, 1).shift > z50.shift);
    double prev = 1e300;
    for (int m = 1; m <= 20; ++m) {
        GenAiryZero z = complex_zeros(12.4, m);
        CHECK(std::abs(z.value) > (m > 1 ? std::abs(complex_zeros(12.4, m - 1).value) : 0.0));
        if (m >= 2) {
            CHECK(z.shift <= prev + 1e-13);
        }
        prev = z.shift;
    }
    // u and u + 2 share their zeros
    for (int m = 1; m <= 5; ++m)
        CHECK(std::abs(complex_zeros(12.4, m).value - complex_zeros(14.4, m).value) < 1e-12);
    CHECK_THROWS_AS(complex_zeros(13.0, 1), PolynomialCaseError);
    CHECK_THROWS_AS(complex_zeros(13.0 + 1e-10, 1), PolynomialCaseError);
}

TEST_CASE("refine_zero")
{
    GenAiryZero z = complex_zeros(12.4, 3);
    GenAiryZero again = refine_zero(12.4, z.value);
    CHECK(again.shift < 1e-14);
    CHECK(again.residual <= 1e-12);
    for (int m = 1; m <= 10; ++m)
        CHECK(complex_zeros(16.6, m).residual <= 1e-12);
}
