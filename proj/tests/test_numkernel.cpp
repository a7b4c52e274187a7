#include "check.hpp"

#include "phiver/numkernel.hpp"
#include "phiver/zetakit.hpp"

#include <random>

using namespace phiver;
using num::Accel;
using num::SeriesSpec;

namespace {

const CValue I(0.0, 1.0);

// Mean of two consecutive partial sums of an alternating series: error O(1/N^2).
template <class F>
double averaged_alternating(F term, long n)
{
    long double s = 0.0L;
    for (long k = 0; k < n; ++k)
        s += term(k);
    return static_cast<double>(s + 0.5L * term(n));
}

SeriesSpec spec_of(std::function<CValue(std::size_t)> f, Accel accel)
{
    SeriesSpec s;
    s.term_at = std::move(f);
    s.accel = accel;
    return s;
}

}  // namespace

TEST_CASE("clog principal branch")
{
    CHECK(num::clog(1.0) == CValue(0.0, 0.0));
    CHECK_CLOSE(num::clog(-1.0), I * kPi, 1e-16);
    CHECK_CLOSE(num::clog(I), 0.5 * I * kPi, 1e-16);
    CHECK_THROWS_AS(num::clog(0.0), DomainError);
}

TEST_CASE("cpow")
{
    CHECK_CLOSE(num::cpow(-1.0, 0.5), I, 1e-16);
    CHECK_CLOSE(num::cpow(4.0, 0.5), 2.0, 1e-16);
    CHECK_CLOSE(num::cpow(std::exp(1.0), I * kPi), -1.0, 1e-15);
    CHECK_CLOSE(num::cpow(CValue(0.3, 0.7), 1.0), CValue(0.3, 0.7), 1e-16);
    CHECK(num::cpow(CValue(0.3, 0.7), 0.0) == CValue(1.0, 0.0));
    CHECK(num::cpow(0.0, 2.0) == CValue(0.0, 0.0));
    CHECK_THROWS_AS(num::cpow(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(num::cpow(0.0, 0.0), DomainError);
}

TEST_CASE("flags and outcome arithmetic")
{
    EvalOutcome a{1.0, 1e-16, CONVERGED};
    EvalOutcome b{2.0, 2e-16, CONVERGED | DOMAIN_EDGE};
    EvalOutcome c{3.0, 1.0, MAX_TERMS};
    auto s = a + b;
    CHECK(s.value == CValue(3.0));
    CHECK(s.abs_err_est == doctest::Approx(3e-16));
    CHECK(s.converged());
    CHECK(s.has(DOMAIN_EDGE));
    CHECK_FALSE((a * c).converged());
    CHECK(flags_to_string(CONVERGED | CANCELLATION) == "CONVERGED|CANCELLATION");
    CHECK(flags_to_string(0) == "NONE");
}

TEST_CASE("compensated sum")
{
    num::NeumaierSum s;
    s.add(1.0);
    for (int i = 0; i < 1000; ++i)
        s.add(1e-16);
    s.add(-1.0);
    CHECK(s.value().real() == doctest::Approx(1e-13).epsilon(1e-12));
}

TEST_CASE("sum_series examples")
{
    auto geo = num::sum_series(spec_of([](std::size_t n) { return std::pow(0.5, static_cast<double>(n)); },
                                       Accel::DIRECT));
    CHECK(geo.converged());
    CHECK_CLOSE(geo.value, 2.0, 1e-15);

    const double log2_oracle = averaged_alternating(
        [](long k) { return (k % 2 ? -1.0L : 1.0L) / (k + 1); }, 2000000);
    auto l2 = num::sum_series(spec_of(
        [](std::size_t n) { return CValue((n % 2 ? -1.0 : 1.0) / (static_cast<double>(n) + 1.0)); },
        Accel::LEVIN_U));
    CHECK(l2.converged());
    CHECK_CLOSE(l2.value, log2_oracle, 1e-12);

    const double cat_oracle = averaged_alternating(
        [](long k) { return (k % 2 ? -1.0L : 1.0L) / ((2.0L * k + 1) * (2.0L * k + 1)); }, 200000);
    for (Accel acc : {Accel::LEVIN_U, Accel::EULER_TRANSFORM}) {
        auto cat = num::sum_series(spec_of(
            [](std::size_t n) {
                double d = 2.0 * static_cast<double>(n) + 1.0;
                return CValue((n % 2 ? -1.0 : 1.0) / (d * d));
            },
            acc));
        CHECK(cat.converged());
        CHECK_CLOSE(cat.value, cat_oracle, 1e-12);
    }
}

TEST_CASE("sum_series reports exhaustion")
{
    SeriesSpec s = spec_of([](std::size_t n) { return CValue(1.0 / (static_cast<double>(n) + 1.0)); },
                           Accel::DIRECT);
    s.max_terms = 100;
    auto out = num::sum_series(s);
    CHECK_FALSE(out.converged());
    CHECK(out.has(MAX_TERMS));
    s.tol = 0.0;
    CHECK_THROWS(num::sum_series(s));
}

TEST_CASE("acceleration consistency on geometric tails" * doctest::test_suite("properties"))
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> r(0.05, 0.9), ph(-kPi, kPi);
    for (int trial = 0; trial < 20; ++trial) {
        const CValue q = std::polar(r(rng), ph(rng));
        auto term = [q](std::size_t n) { return std::pow(q, static_cast<double>(n)) / (static_cast<double>(n) + 1.0); };
        const CValue exact = -std::log(1.0 - q) / q;
        double errsum = 0.0;
        std::vector<CValue> vals;
        for (Accel acc : {Accel::DIRECT, Accel::EULER_TRANSFORM, Accel::LEVIN_U}) {
            auto o = num::sum_series(spec_of(term, acc));
            errsum += o.abs_err_est;
            vals.push_back(o.value);
            if (o.converged())
                CHECK(std::abs(o.value - exact) <= std::max(o.abs_err_est, 1e-14 * std::abs(exact)) * 10.0);
            else
                CHECK(std::abs(o.value - exact) <= o.abs_err_est);
        }
        for (std::size_t i = 1; i < vals.size(); ++i)
            CHECK(std::abs(vals[i] - vals[0]) <= 10.0 * errsum + 1e-15);
    }
}

TEST_CASE("blocked Levin on a slowly rotating unit-circle series")
{
    const double theta = 0.1;
    SeriesSpec s = spec_of([theta](std::size_t n) {
        double k = static_cast<double>(n) + 1.0;
        return std::exp(CValue(0.0, theta * k)) / k;
    }, Accel::LEVIN_U);
    s.block = num::block_for_phase(theta);
    CHECK(s.block == 31);
    auto o = num::sum_series(s);
    const CValue exact = -std::log(1.0 - std::exp(CValue(0.0, theta)));
    CHECK(o.converged());
    CHECK_CLOSE(o.value, exact, 1e-12);
    CHECK(num::block_for_phase(kPi) == 1);
    CHECK(num::block_for_phase(1e-5) == 1);
}

TEST_CASE("cauchy_deriv examples")
{
    auto d1 = num::cauchy_deriv(num::CFunc([](CValue z) { return std::exp(z); }), 0.0, 1);
    CHECK(d1.converged());
    CHECK_CLOSE(d1.value, 1.0, 1e-13);
    auto d2 = num::cauchy_deriv(num::CFunc([](CValue z) { return z * z * z; }), 1.0, 2);
    CHECK_CLOSE(d2.value, 6.0, 1e-13);

    // zeta'(2) = -sum log n / n^2: partial sum plus Euler-Maclaurin tail.
    const int N = 1000;
    long double s = 0.0L;
    for (int n = 2; n < N; ++n)
        s += std::log(static_cast<long double>(n)) / (static_cast<long double>(n) * n);
    const long double x = N, lx = std::log(x);
    const long double f = lx / (x * x), fp = (1.0L - 2.0L * lx) / (x * x * x);
    const long double fppp = (-26.0L + 24.0L * lx) / (x * x * x * x * x);
    s += (lx + 1.0L) / x + f / 2.0L - fp / 12.0L + fppp / 720.0L;
    const double oracle = -static_cast<double>(s);
    CHECK(oracle == doctest::Approx(-0.9375482543).epsilon(1e-9));

    auto dz = num::cauchy_deriv(num::COutcomeFunc([](CValue z) { return zeta::hurwitz_zeta(z, 1.0); }), 2.0, 1);
    CHECK(dz.converged());
    CHECK_CLOSE(dz.value, oracle, 1e-11);
}

TEST_CASE("cauchy_deriv matches central differences on entire functions" * doctest::test_suite("properties"))
{
    const std::vector<std::function<CValue(CValue)>> fs = {
        [](CValue z) { return std::sin(z); },
        [](CValue z) { return std::exp(z * z); },
        [](CValue z) { return std::cos(z) * z * z + 3.0 * z; },
    };
    const double h = 1e-5;
    for (const auto& f : fs) {
        for (CValue z0 : {CValue(0.3, 0.1), CValue(-1.2, 0.5), CValue(2.0, -0.7)}) {
            auto d = num::cauchy_deriv(num::CFunc(f), z0, 1);
            CValue fd = (f(z0 + h) - f(z0 - h)) / (2.0 * h);
            CHECK(std::abs(d.value - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
        }
    }
}

TEST_CASE("cauchy_deriv shrinks the radius on domain errors")
{
    auto f = num::CFunc([](CValue z) {
        if (std::abs(z - 1.0) < 0.1)
            throw DomainError("too close");
        return 1.0 / (z - 1.0);
    });
    auto d = num::cauchy_deriv(f, 1.3, 1);
    CHECK_CLOSE(d.value, -1.0 / (0.3 * 0.3), 1e-9);
    CHECK_THROWS(num::cauchy_deriv(f, 0.0, 0));
}

TEST_CASE("cpow exponent addition off the cut" * doctest::test_suite("properties"))
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        CValue z(u(rng), u(rng)), a(u(rng), u(rng)), b(u(rng), u(rng));
        if (std::abs(z) < 0.05 || (z.imag() == 0.0 && z.real() < 0.0))
            continue;
        CValue lhs = num::cpow(z, a + b), rhs = num::cpow(z, a) * num::cpow(z, b);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(lhs));
    }
}

TEST_CASE("helpers")
{
    CHECK(num::is_nonpositive_integer(-3.0));
    CHECK(num::is_nonpositive_integer(0.0));
    CHECK_FALSE(num::is_nonpositive_integer(CValue(-3.0, 1e-9)));
    CHECK_FALSE(num::is_nonpositive_integer(2.0));
    CHECK_FALSE(num::is_finite(CValue(std::nan(""), 0.0)));
}
