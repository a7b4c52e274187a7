#include "check.hpp"

#include "phiver/quadkit.hpp"

#include <string>
#include <vector>

using namespace phiver;
using quad::QuadOptions;

namespace {

const CValue I(0.0, 1.0);
constexpr double kCatalan = 0.915965594177219015;

double loglog(double x, double xc) { return std::log(quad::log_recip(x, xc)); }

struct Case {
    std::string name;
    quad::Integrand01 f;
    CValue exact;
};

std::vector<Case> honesty_corpus()
{
    const double l2 = std::log(2.0);
    return {
        {"one", [](double, double) { return CValue(1.0); }, 1.0},
        {"x^-1/2", [](double x, double) { return CValue(1.0 / std::sqrt(x)); }, 2.0},
        {"x^-0.9", [](double x, double) { return CValue(std::pow(x, -0.9)); }, 10.0},
        {"x^i", [](double x, double) { return std::pow(CValue(x), I); }, 1.0 / (1.0 + I)},
        {"log(1/x)", [](double x, double xc) { return CValue(quad::log_recip(x, xc)); }, 1.0},
        {"log(1/x)^2", [](double x, double xc) { return CValue(std::pow(quad::log_recip(x, xc), 2)); }, 2.0},
        {"log x log(1-x)", [](double x, double xc) { return CValue(std::log(x) * std::log(xc)); },
         2.0 - kPi * kPi / 6.0},
        {"sqrt(x(1-x))", [](double x, double xc) { return CValue(std::sqrt(x * xc)); }, kPi / 8.0},
        {"1/(1+x^2)", [](double x, double) { return CValue(1.0 / (1.0 + x * x)); }, kPi / 4.0},
        {"catalan", [](double x, double xc) { return CValue(quad::log_recip(x, xc) / ((1.0 + x) * std::sqrt(x))); },
         4.0 * kCatalan},
        {"loglog/(1+x)", [](double x, double xc) { return CValue(loglog(x, xc) / (1.0 + x)); }, -0.5 * l2 * l2},
        {"vardi", [](double x, double xc) { return CValue(loglog(x, xc) / (std::sqrt(x) * (1.0 + x))); },
         kPi / 2.0 * std::log(8.0 * std::pow(kPi, 3) / std::pow(std::tgamma(0.25), 4))},
    };
}

}  // namespace

TEST_CASE("integrate_01 examples")
{
    auto one = quad::integrate_01([](double) { return CValue(1.0); });
    CHECK(one.converged);
    CHECK_CLOSE(one.value, 1.0, 1e-14);
    auto sq = quad::integrate_01([](double x) { return CValue(1.0 / std::sqrt(x)); });
    CHECK(sq.converged);
    CHECK_CLOSE(sq.value, 2.0, 1e-12);
    auto cat = quad::integrate_01(
        [](double x, double xc) { return CValue(quad::log_recip(x, xc) / ((1.0 + x) * std::sqrt(x))); });
    CHECK(cat.converged);
    CHECK_CLOSE(cat.value, 4.0 * kCatalan, 1e-11);
}

TEST_CASE("integrate_01 never touches the endpoints")
{
    bool touched = false;
    quad::integrate_01([&](double x, double xc) {
        if (x <= 0.0 || x >= 1.0 || xc <= 0.0)
            touched = true;
        return CValue(std::log(std::log(1.0 / x) + 1.0));
    }, QuadOptions{1e-12, 14, {}});
    CHECK_FALSE(touched);
}

TEST_CASE("integrate_01 flags non-integrable blowup")
{
    auto r = quad::integrate_01([](double x) { return CValue(1.0 / x); });
    CHECK_FALSE(r.converged);
    CHECK_FALSE(quad::to_outcome(r).converged());
}

TEST_CASE("integrate_0inf examples")
{
    auto e = quad::integrate_0inf([](double x) { return CValue(std::exp(-x)); });
    CHECK(e.converged);
    CHECK_CLOSE(e.value, 1.0, 1e-12);
    CHECK_CLOSE(quad::integrate_0inf([](double x) { return CValue(1.0 / (1.0 + x * x)); }).value, kPi / 2.0, 1e-11);
    CHECK_CLOSE(quad::integrate_0inf([](double x) { return CValue(1.0 / (std::sqrt(x) * (1.0 + x))); }).value, kPi,
                1e-11);
    // int_0^inf x^{m-1}/(1+x) dx = pi / sin(pi m) for complex m with 0 < Re m < 1.
    const CValue m(0.3, 0.8);
    auto r = quad::integrate_0inf([m](double x) { return std::pow(CValue(x), m - 1.0) / (1.0 + x); });
    CHECK(r.converged);
    CHECK_CLOSE(r.value, kPi / std::sin(kPi * m), 1e-10);
}

TEST_CASE("integrate_pv examples")
{
    auto odd = quad::integrate_pv([](double x) { return CValue(1.0 / (x - 0.5)); }, 0.5);
    CHECK(odd.converged);
    CHECK(std::abs(odd.value) < 1e-13);
    // Partial fractions: 1/((x-1/2)(x+1)) = (2/3)(1/(x-1/2) - 1/(x+1)), PV = -(2/3) log 2.
    auto pf = quad::integrate_pv([](double x) { return CValue(1.0 / ((x - 0.5) * (x + 1.0))); }, 0.5);
    CHECK(pf.converged);
    CHECK_CLOSE(pf.value, -2.0 / 3.0 * std::log(2.0), 1e-12);
    CHECK_CLOSE(pf.value, -0.4620981204, 1e-10);
    CHECK_CLOSE(quad::integrate_pv([](double x) { return CValue(x / (x - 0.5)); }, 0.5).value, 1.0, 1e-12);
    // PV int_0^1 dx/(x - c) = log((1-c)/c) off-centre.
    CHECK_CLOSE(quad::integrate_pv([](double x) { return CValue(1.0 / (x - 0.2)); }, 0.2).value, std::log(4.0),
                1e-12);
    CHECK_THROWS(quad::integrate_pv([](double x) { return CValue(x); }, 1.0));
}

TEST_CASE("integrate_pv flags a double pole")
{
    auto r = quad::integrate_pv([](double x) { return CValue(1.0 / ((x - 0.5) * (x - 0.5))); }, 0.5);
    CHECK_FALSE(r.converged);
}

TEST_CASE("quadrature options are validated")
{
    auto f = [](double) { return CValue(1.0); };
    CHECK_THROWS(quad::integrate_01(f, QuadOptions{1e-15, 10, {}}));
    CHECK_THROWS(quad::integrate_01(f, QuadOptions{1e-2, 10, {}}));
    CHECK_THROWS(quad::integrate_01(f, QuadOptions{1e-12, 3, {}}));
    CHECK_THROWS(quad::integrate_0inf(f, QuadOptions{1e-12, 15, {}}));
    CHECK_NOTHROW(quad::integrate_01(f, QuadOptions{1e-14, 4, {}}));
}

TEST_CASE("error-estimate honesty corpus" * doctest::test_suite("properties"))
{
    int converged = 0;
    for (const auto& c : honesty_corpus()) {
        for (double tol : {1e-6, 1e-10, 1e-13}) {
            auto r = quad::integrate_01(c.f, QuadOptions{tol, 12, {}});
            CAPTURE(c.name);
            CAPTURE(tol);
            CAPTURE(r.abs_err_est);
            const double err = std::abs(r.value - c.exact);
            CAPTURE(err);
            if (r.converged) {
                ++converged;
                CHECK(err <= 10.0 * r.abs_err_est + 4e-16 * std::abs(c.exact));
                CHECK(r.abs_err_est <= tol * std::max(1.0, std::abs(r.value)));
            }
        }
    }
    CHECK(converged >= 30);
}

TEST_CASE("node economy" * doctest::test_suite("properties"))
{
    auto r = quad::integrate_01(
        [](double x, double xc) { return CValue(quad::log_recip(x, xc) / ((1.0 + x) * std::sqrt(x))); },
        QuadOptions{1e-10, 10, {}});
    CHECK(r.converged);
    CHECK(r.evaluations <= 2000);
    CHECK(testutil::rel_err(r.value, 4.0 * kCatalan) <= 1e-10);
}

TEST_CASE("path independence" * doctest::test_suite("properties"))
{
    auto f = [](double x) { return std::exp(I * 3.0 * x) * std::pow(x, -0.3) / (1.0 + x); };
    const CValue whole = quad::integrate_01(f).value;
    const double re = quad::integrate_01([&](double x) { return CValue(f(x).real()); }).value.real();
    const double im = quad::integrate_01([&](double x) { return CValue(f(x).imag()); }).value.real();
    CHECK(std::abs(whole - CValue(re, im)) <= 1e-14 * std::abs(whole));
}
