#include "check.hpp"

#include "phiver/gammakit.hpp"
#include "phiver/lerchkit.hpp"

#include <random>

using namespace phiver;
using lerch::LerchPoint;

namespace {

const CValue I(0.0, 1.0);
constexpr double kCatalan = 0.915965594177219015;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kGlaisher = 1.2824271291006226369;
constexpr double kZeta3 = 1.2020569031595942854;

using LC = std::complex<long double>;

CValue narrow(LC v) { return {static_cast<double>(v.real()), static_cast<double>(v.imag())}; }

// Direct series for |z| < 1, optionally with the log weight of the s-derivative.
CValue brute_phi(CValue z, CValue s, CValue a, bool deriv = false)
{
    const LC zl(z.real(), z.imag()), sl(s.real(), s.imag()), al(a.real(), a.imag());
    LC sum = 0.0L, zn = 1.0L;
    for (int n = 0; n < 4000 && std::abs(zn) > 1e-30L; ++n) {
        const LC base = al + static_cast<long double>(n);
        LC t = zn * std::exp(-sl * std::log(base));
        if (deriv)
            t *= -std::log(base);
        sum += t;
        zn *= zl;
    }
    return narrow(sum);
}

CValue brute_zderiv(int n, CValue z, CValue s, CValue a)
{
    const LC zl(z.real(), z.imag()), sl(s.real(), s.imag()), al(a.real(), a.imag());
    LC sum = 0.0L;
    for (int j = n; j < 4000; ++j) {
        long double ff = 1.0L;
        for (int i = 0; i < n; ++i)
            ff *= j - i;
        const LC t = ff * std::pow(zl, j - n) * std::exp(-sl * std::log(al + static_cast<long double>(j)));
        sum += t;
        if (std::abs(t) < 1e-30L * std::abs(sum))
            break;
    }
    return narrow(sum);
}

CValue random_disk_point(std::mt19937_64& rng, double rmax)
{
    std::uniform_real_distribution<double> r(0.0, rmax), ph(-kPi, kPi);
    return std::polar(r(rng), ph(rng));
}

}  // namespace

TEST_CASE("lerch_phi examples")
{
    CHECK_CLOSE(lerch::lerch_phi({0.0, 2.0, 3.0}).value, 1.0 / 9, 1e-15);
    CHECK_CLOSE(lerch::lerch_phi({0.5, 1.0, 1.0}).value, 2.0 * std::log(2.0), 1e-13);
    CHECK_CLOSE(lerch::lerch_phi({-1.0, 2.0, 0.5}).value, 4.0 * kCatalan, 1e-13);
    CHECK(lerch::lerch_phi({-1.0, 2.0, 0.5}).converged());
}

TEST_CASE("lerch_phi against the direct series")
{
    for (CValue z : {CValue(0.3, -0.2), CValue(-0.45), CValue(0.7, 0.5), CValue(-0.85, 0.1)})
        for (CValue s : {CValue(2.0), CValue(0.5, 1.0), CValue(-1.5, 0.3)})
            for (CValue a : {CValue(0.3), CValue(1.7, 0.4)})
                CHECK_CLOSE(lerch::lerch_phi({z, s, a}).value, brute_phi(z, s, a), 1e-11);
}

TEST_CASE("lerch_phi on the unit circle")
{
    // Phi(e^{it}, 1, 1) = -log(1 - e^{it}) / e^{it}.
    for (double t : {0.4, 2.0, kPi, 5.5}) {
        const CValue z = std::exp(I * t);
        auto o = lerch::lerch_phi({z, 1.0, 1.0});
        CHECK(o.converged());
        CHECK_CLOSE(o.value, -std::log(1.0 - z) / z, 1e-11);
    }
    CHECK_CLOSE(lerch::lerch_phi({1.0, 2.0, 1.0}).value, kPi * kPi / 6.0, 1e-13);
    // Phi(-1, s, 1) = (1 - 2^{1-s}) zeta(s), also for Re(s) <= 0: zeta(-1/2) = -0.20788622497735457.
    CHECK_CLOSE(lerch::lerch_phi({-1.0, -0.5, 1.0}).value, (1.0 - std::pow(2.0, 1.5)) * -0.20788622497735457, 1e-11);
    CHECK_CLOSE(lerch::lerch_phi({0.6, 2.0, CValue(-1.3, 0.2)}).value,
                0.6 * lerch::lerch_phi({0.6, 2.0, CValue(-0.3, 0.2)}).value + std::pow(CValue(-1.3, 0.2), -2.0),
                1e-12);
}

TEST_CASE("lerch domain errors")
{
    CHECK_THROWS_AS(lerch::lerch_phi({1.5, 2.0, 1.0}), DomainError);
    CHECK_THROWS_AS(lerch::lerch_phi({1.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(lerch::lerch_phi({0.5, 2.0, -2.0}), DomainError);
    CHECK_THROWS_AS(lerch::lerch_phi_zderiv(1, {1.0, 2.0, 1.0}), DomainError);
    CHECK_NOTHROW(lerch::validate({CValue(0.0, 1.0), 0.5, 1.0}));
}

TEST_CASE("lerch_phi_sderiv")
{
    const CValue c1 = std::log(8.0 * std::pow(std::tgamma(1.25), 2) / kPi);
    CHECK_CLOSE(lerch::lerch_phi_sderiv(1, {-1.0, 0.0, 0.5}).value, c1, 1e-10);
    CHECK_CLOSE(lerch::lerch_phi_sderiv(1, {-1.0, 0.0, 0.5}).value, 0.7381679829868090, 1e-10);
    const double c2 = kPi * kPi / 2.0
                      * std::log(4.0 * std::cbrt(2.0) * std::exp(kEulerGamma) * kPi / std::pow(kGlaisher, 12));
    CHECK_CLOSE(lerch::lerch_phi_sderiv(1, {1.0, 2.0, 0.5}).value, c2, 1e-10);
    CHECK_CLOSE(lerch::lerch_phi_sderiv(1, {0.5, 2.0, 1.0}).value, brute_phi(0.5, 2.0, 1.0, true), 1e-11);
    CHECK_CLOSE(lerch::lerch_phi_sderiv(1, {0.5, 2.0, 1.0}).value, -0.1346295194, 1e-9);
    for (CValue z : {CValue(0.2, 0.6), CValue(-0.9)})
        CHECK_CLOSE(lerch::lerch_phi_sderiv(1, {z, CValue(1.5, 0.2), 0.8}).value,
                    brute_phi(z, CValue(1.5, 0.2), 0.8, true), 1e-8);
    CHECK_THROWS(lerch::lerch_phi_sderiv(3, {0.5, 2.0, 1.0}));
}

TEST_CASE("lerch_phi_zderiv")
{
    CHECK_CLOSE(lerch::lerch_phi_zderiv(1, {0.5, 0.0, 2.3}).value, 4.0, 1e-11);
    CHECK_CLOSE(lerch::lerch_phi_zderiv(1, {0.3, 1.0, 0.7}).value, brute_zderiv(1, 0.3, 1.0, 0.7), 1e-11);
    CHECK_CLOSE(lerch::lerch_phi_zderiv(2, {0.0, 2.0, 1.0}).value, 2.0 / 9.0, 1e-13);
    for (int n = 1; n <= 3; ++n)
        CHECK_CLOSE(lerch::lerch_phi_zderiv(n, {CValue(-0.6, 0.5), CValue(0.7, 0.3), CValue(1.2, -0.4)}).value,
                    brute_zderiv(n, CValue(-0.6, 0.5), CValue(0.7, 0.3), CValue(1.2, -0.4)), 1e-9);
}

TEST_CASE("polylog")
{
    CHECK_CLOSE(lerch::polylog(2.0, 1.0).value, kPi * kPi / 6.0, 1e-13);
    CHECK_CLOSE(lerch::polylog(1.0, 0.5).value, std::log(2.0), 1e-14);
    CHECK_CLOSE(lerch::polylog(-2.0, 1.0 / 3).value, 1.5, 1e-13);
    CHECK_CLOSE(lerch::polylog(2.0, -1.0).value, -kPi * kPi / 12.0, 1e-13);
    CHECK(std::abs(lerch::polylog(-2.0, -1.0).value) < 1e-12);
    CHECK_THROWS_AS(lerch::polylog(2.0, CValue(0.9, 0.9)), DomainError);
}

TEST_CASE("polylog_sderiv")
{
    CHECK_CLOSE(lerch::polylog_sderiv(-2.0, -1.0).value, -7.0 * kZeta3 / (4.0 * kPi * kPi), 1e-10);
    LC s = 0.0L;
    for (int n = 2; n < 200; ++n)
        s -= std::pow(0.5L, n) * std::log(static_cast<long double>(n));
    CHECK_CLOSE(lerch::polylog_sderiv(0.0, 0.5).value, narrow(s), 1e-11);
    CHECK_CLOSE(lerch::polylog_sderiv(0.0, 0.5).value, -0.5078339229, 1e-9);
    CHECK(std::abs(lerch::polylog_sderiv(CValue(1.3, 0.4), 0.0).value) == 0.0);
    // At z = -1 the derivative of -eta(s) = -(1 - 2^{1-s}) zeta(s): check s = 2 against
    // -eta'(2) = -(log 2 * zeta(2) + ... ) via central differences of polylog.
    const double h = 1e-4;
    const CValue fd = (lerch::polylog(2.0 + h, -1.0).value - lerch::polylog(2.0 - h, -1.0).value) / (2.0 * h);
    CHECK_CLOSE(lerch::polylog_sderiv(2.0, -1.0).value, fd, 1e-7);
}

TEST_CASE("legendre chi and inverse tangent integral")
{
    CHECK_CLOSE(lerch::legendre_chi(2.0, 1.0).value, kPi * kPi / 8.0, 1e-13);
    CHECK_CLOSE(lerch::legendre_chi(1.0, 0.5).value, 0.5 * std::log(3.0), 1e-14);
    CHECK(std::abs(lerch::legendre_chi(2.0, 0.0).value) == 0.0);
    CHECK_CLOSE(lerch::ti_inverse_tangent_integral(2.0, 1.0).value, kCatalan, 1e-13);
    CHECK_CLOSE(lerch::ti_inverse_tangent_integral(1.0, 1.0).value, kPi / 4.0, 1e-13);
    CHECK(std::abs(lerch::ti_inverse_tangent_integral(2.0, 0.0).value) == 0.0);
    const CValue z(0.3, 0.4);
    CHECK_CLOSE(lerch::ti_inverse_tangent_integral(1.0, z).value, std::atan(z), 1e-13);
    CHECK_CLOSE(lerch::legendre_chi(1.0, z).value, std::atanh(z), 1e-13);
}

TEST_CASE("functional equation residuals")
{
    auto r1 = lerch::funeq_residual(0.5, kPi, CValue(0.25, -0.25));
    CHECK(std::abs(r1.value) < 1e-8);
    auto r2 = lerch::funeq_residual(CValue(1.2, 0.3), 2.0, CValue(0.4, -0.5));
    CHECK(std::abs(r2.value) < 1e-8);
    CHECK_THROWS_AS(lerch::funeq_residual(0.5, kPi, CValue(0.25, 0.25)), DomainError);

    CHECK(std::abs(lerch::funeq515_residual(-0.5, 2.5, 0.3).value) < 1e-8);
    // The second example's inner point lies off the closed unit disk.
    CHECK_THROWS_AS(lerch::funeq515_residual(CValue(-0.25, -0.1), 1.7, CValue(0.6, -0.2)), DomainError);
    CHECK_THROWS_AS(lerch::funeq515_residual(0.5, 2.0, 0.3), DomainError);

    CHECK(std::abs(lerch::jonquiere_residual(2.5, CValue(0.3, -0.2)).value) < 1e-8);
    CHECK(std::abs(lerch::jonquiere_residual(1.0, CValue(0.5, -0.5)).value) < 1e-9);
    auto edge = lerch::jonquiere_residual(0.5, 0.3);
    CHECK(edge.has(DOMAIN_EDGE));
}

TEST_CASE("functional equation sides agree to their error estimates" * doctest::test_suite("properties"))
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> kr(0.1, 2.0), ki(-0.3, 0.3), t(0.1, 2 * kPi - 0.1);
    std::uniform_real_distribution<double> mr(0.05, 0.95), mi(-0.6, -0.05);
    for (int i = 0; i < 25; ++i) {
        const CValue k(kr(rng), ki(rng)), m(mr(rng), mi(rng));
        const double tt = t(rng);
        auto r = lerch::funeq_residual(k, tt, m);
        CAPTURE(k);
        CAPTURE(tt);
        CAPTURE(m);
        CHECK(std::abs(r.value) <= std::max(1e-8, 50.0 * r.abs_err_est));
    }
}

TEST_CASE("Phi recurrence in a" * doctest::test_suite("properties"))
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-2.0, 2.0), ap(0.1, 3.0);
    for (int i = 0; i < 50; ++i) {
        const CValue z = random_disk_point(rng, 0.9), s(u(rng), u(rng)), a(ap(rng), u(rng));
        const CValue lhs = lerch::lerch_phi({z, s, a}).value;
        const CValue rhs = z * lerch::lerch_phi({z, s, a + 1.0}).value + std::pow(a, -s);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
    }
}

TEST_CASE("polylog equals z Phi(z, s, 1)" * doctest::test_suite("properties"))
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.5, 3.0);
    for (int i = 0; i < 20; ++i) {
        const CValue z = random_disk_point(rng, 1.0), s(u(rng), u(rng) - 1.75);
        const CValue a = lerch::polylog(s, z).value, b = z * lerch::lerch_phi({z, s, 1.0}).value;
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("Phi s-derivative matches central differences" * doctest::test_suite("properties"))
{
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-1.5, 2.5), ap(0.2, 2.5);
    const double h = 1e-4;
    for (int i = 0; i < 25; ++i) {
        const CValue z = random_disk_point(rng, 0.9), s(u(rng), 0.5 * u(rng)), a(ap(rng), 0.3 * u(rng));
        const CValue d = lerch::lerch_phi_sderiv(1, {z, s, a}).value;
        const CValue fd = (lerch::lerch_phi({z, s + h, a}).value - lerch::lerch_phi({z, s - h, a}).value) / (2.0 * h);
        CHECK(std::abs(d - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
    }
}

TEST_CASE("negative-order polylog closed forms" * doctest::test_suite("properties"))
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 30; ++i) {
        const CValue z = random_disk_point(rng, 0.8);
        CHECK_CLOSE(lerch::polylog(-1.0, z).value, z / ((1.0 - z) * (1.0 - z)), 1e-11);
        CHECK_CLOSE(lerch::polylog(-2.0, z).value, z * (1.0 + z) / std::pow(1.0 - z, 3), 1e-11);
    }
}
