#include <doctest.h>

#include <boost/math/special_functions/airy.hpp>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "pcfz/airy.hpp"

using namespace pcfz;
using C = std::complex<double>;
using CL = std::complex<long double>;

namespace {

// Plain Maclaurin sums of Ai in long double; independent of the library.
std::pair<CL, CL> ai_maclaurin(CL z)
{
    const long double c1 = 0.355028053887817239260063186004183176L;
    const long double c2 = 0.258819403792806798405183560189203963L;
    // f = sum 3^k (1/3)_k z^{3k}/(3k)!, g = sum 3^k (2/3)_k z^{3k+1}/(3k+1)!
    CL f = 1, g = z, df = 0, dg = 1;
    CL tf = 1, tg = z;
    CL z3 = z * z * z;
    for (int k = 1; k < 200; ++k) {
        tf *= z3 / ((3.0L * k - 1) * (3.0L * k));
        tg *= z3 / ((3.0L * k) * (3.0L * k + 1));
        f += tf;
        g += tg;
        df += 3.0L * k * tf / z;
        dg += (3.0L * k + 1) * tg / z;
        if (std::abs(tf) + std::abs(tg) < 1e-22L * (std::abs(f) + std::abs(g)))
            break;
    }
    return {c1 * f - c2 * g, c1 * df - c2 * dg};
}

double rel(C a, C b) { return std::abs(a - b) / std::abs(b); }

struct Frozen {
    double x, y, ar, ai, dr, di;
};

// Reference values computed once at 30 digits.
const Frozen frozen[] = {
    {5, 3, 0.00022326280609943877211, -0.000169633646096079685, -0.0006335427430931984089, 0.00026154556220239177899},
    {-7, 2, 8.7554400054851872472, -33.673185917617132643, -92.67698337538682414, -11.851566940307156188},
    {0, 10, -434317.24922197414282, -189054.14713057518992, 553379.55313451860337, 1382962.4524352482279},
    {-12, 9, -8152881772954.3923345, 5240783326020.0471747, 29078439856961.690703, 23526252324598.54689},
    {-30, 0, -0.087968188456842162833, 0, 1.2286206026374851347, 0},
    {20, 1, -4.0315035511181836508e-28, 1.7423356972781362433e-27, 2.0021691346567580903e-27, -7.7711595577876887017e-27},
    {3, -8, -7.2129139558009057534, -6.5089436431468824203, 28.067836355278356512, 3.8970390889142510096},
    {-2.5, 0.5, -0.14552119623982488608, 0.37853631054220400411, 0.91922527447771423402, 0.12434926328661062724},
    {8, 8, 6.5769328964432704592e-7, 9.3123313751516687503e-6, 9.7901640405945964892e-6, -0.000029921703835359182779},
    {-40, 0.1, -0.055443091774997690621, -0.14834839759385790285, -1.6760327741091299073, 0.19672339694835614465},
};

C connection_residual(C z)
{
    const C e = std::polar(1.0, std::numbers::pi / 3);
    C a = eval_ai(z).value;
    C p = eval_ai_rotated(1, z).value;
    C m = eval_ai_rotated(-1, z).value;
    return a - e * p - std::conj(e) * m;
}

} // namespace

TEST_CASE("Ai at the origin")
{
    AiryValue v = eval_ai(0.0);
    double expect = std::pow(3.0, -2.0 / 3) / std::tgamma(2.0 / 3);
    CHECK(std::abs(v.value - expect) < 1e-15);
    CHECK(v.log_scale == 0);
}

TEST_CASE("Ai against independent Maclaurin sums")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> rad(0.05, 4.0), ang(-std::numbers::pi, std::numbers::pi);
    for (int i = 0; i < 50; ++i) {
        C z = std::polar(rad(rng), ang(rng));
        auto [a, d] = ai_maclaurin(CL(z));
        AiryValue v = eval_ai(z);
        CHECK(rel(v.value, C(a)) < 1e-11);
        CHECK(rel(v.derivative, C(d)) < 1e-11);
    }
}

TEST_CASE("Ai against frozen high-precision values")
{
    for (const auto& f : frozen) {
        AiryValue v = eval_ai(C(f.x, f.y));
        INFO("z = " << f.x << " + " << f.y << "i");
        CHECK(rel(v.value, C(f.ar, f.ai)) < 1e-13);
        CHECK(rel(v.derivative, C(f.dr, f.di)) < 1e-13);
    }
}

TEST_CASE("Ai and Bi on the real axis against Boost")
{
    for (double x = -40; x <= 30; x += 0.37) {
        AiryValue a = eval_ai(x);
        AiryValue b = eval_bi_real(x);
        double ai = boost::math::airy_ai(x), bi = boost::math::airy_bi(x);
        double aip = boost::math::airy_ai_prime(x), bip = boost::math::airy_bi_prime(x);
        INFO("x = " << x);
        double env = x < 0 ? std::pow(-x, -0.25) : 0;
        CHECK(std::abs(a.value - ai) <= 1e-13 * std::max(std::abs(ai), env));
        CHECK(std::abs(a.derivative - aip) <= 1e-13 * std::max(std::abs(aip), env * std::sqrt(-std::min(x, 0.0))));
        CHECK(std::abs(b.value - bi) <= 1e-12 * std::max(std::abs(bi), env));
        CHECK(std::abs(b.derivative - bip) <= 1e-12 * std::max(std::abs(bip), env * std::sqrt(-std::min(x, 0.0))));
        CHECK(std::abs(a.value.imag()) <= 1e-14 * std::max(std::abs(ai), env));
    }
}

TEST_CASE("Bi examples")
{
    AiryValue b0 = eval_bi_real(0);
    CHECK(std::abs(b0.value - std::pow(3.0, -1.0 / 6) / std::tgamma(2.0 / 3)) < 1e-15);
    CHECK(eval_bi_real(-2).value.real() < 0);
    for (double x : {-8.0, -1.0, 1.0, 3.0, 7.5}) {
        AiryValue a = eval_ai(x), b = eval_bi_real(x);
        double w = (a.value * b.derivative - a.derivative * b.value).real();
        CHECK(std::abs(w - 1 / std::numbers::pi) < 1e-13);
    }
}

TEST_CASE("Bi overflow is reported scaled")
{
    AiryValue b = eval_bi_real(800);
    CHECK(b.log_scale > 600);
    double logbi = b.log_scale + std::log(std::abs(b.value));
    double eta = 2.0 / 3 * std::pow(800.0, 1.5);
    double expect = eta - 0.25 * std::log(800.0) - 0.5 * std::log(std::numbers::pi) + std::log1p(5 / (72 * eta));
    CHECK(std::abs(logbi - expect) < 1e-9);
}

TEST_CASE("rotated functions")
{
    CHECK(std::abs(eval_ai_rotated(1, 0.0).value - eval_ai(0.0).value) < 1e-16);
    for (double x : {-3.0, -11.5, -25.0}) {
        const C e = std::polar(1.0, std::numbers::pi / 3);
        C s = e * eval_ai_rotated(1, x).value + std::conj(e) * eval_ai_rotated(-1, x).value;
        CHECK(std::abs(s.imag()) < 1e-14);
    }
    // dominant growth at z = 5 against the leading exponential form
    C z = 5.0;
    C w = z * std::polar(1.0, -2 * std::numbers::pi / 3);
    C eta = 2.0 / 3 * std::pow(w, 1.5);
    C lead = std::exp(-eta) / (2 * std::sqrt(std::numbers::pi) * std::pow(w, 0.25));
    C v = eval_ai_rotated(1, z).value;
    CHECK(std::abs(v) > 100);
    CHECK(std::abs(v / lead - 1.0) < 0.02);
    CHECK(std::abs(v / (lead * std::exp(-5.0 / (72.0 * eta))) - 1.0) < 1e-3);
    // chain rule
    double h = 1e-5;
    C z1(1.3, 0.4);
    C fd = (eval_ai_rotated(-1, z1 + h).value - eval_ai_rotated(-1, z1 - h).value) / (2 * h);
    CHECK(rel(eval_ai_rotated(-1, z1).derivative, fd) < 1e-8);
}

TEST_CASE("connection identity")
{
    CHECK(std::abs(connection_residual(C(1, 1))) <= 1e-13);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> rad(0.0, 10.0), ang(-std::numbers::pi, std::numbers::pi);
    for (int i = 0; i < 100; ++i) {
        C z = std::polar(rad(rng), ang(rng));
        double scale = std::max({1.0, std::abs(eval_ai(z).value), std::abs(eval_ai_rotated(1, z).value),
                                 std::abs(eval_ai_rotated(-1, z).value)});
        CHECK(std::abs(connection_residual(z)) <= 1e-12 * scale);
    }
}

TEST_CASE("negative real zeros")
{
    CHECK(std::abs(real_airy_zero(1) - (-2.338107410459767)) < 1e-13);
    CHECK(std::abs(real_airy_zero(2) - (-4.087949444130970)) < 1e-13);
    double prev = 0;
    for (int m = 1; m <= 50; ++m) {
        double a = real_airy_zero(m);
        CHECK(a < prev);
        prev = a;
        CHECK(std::abs(a - boost::math::airy_ai_zero<double>(m)) <= 1e-13 * std::abs(a));
        CHECK(std::abs(eval_ai(a).value) <= 1e-11);
    }
    CHECK(std::abs(eval_ai(real_airy_zero(1)).value) <= 1e-12);
}
