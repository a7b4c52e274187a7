#pragma once

#include "phiver/numkernel.hpp"

#include <cmath>
#include <functional>
#include <optional>

namespace phiver::quad {

struct QuadOptions {
    double tol = 1e-12;
    int max_level = 10;
    std::optional<double> pv_point;
};

struct QuadResult {
    CValue value{};
    double abs_err_est = 0.0;
    long evaluations = 0;
    bool converged = false;
};

// Integrand on (0,1) that also receives xc = 1 - x, computed without cancellation
// near x = 1.
using Integrand01 = std::function<CValue(double x, double xc)>;
using Integrand = std::function<CValue(double x)>;

// log(1/x) accurate at both ends of (0,1).
inline double log_recip(double x, double xc)
{
    return x < 0.5 ? -std::log(x) : -std::log1p(-xc);
}

QuadResult integrate_01(const Integrand01& f, const QuadOptions& opts = {});
QuadResult integrate_01(const Integrand& f, const QuadOptions& opts = {});
QuadResult integrate_0inf(const Integrand& f, const QuadOptions& opts = {});
QuadResult integrate_pv(const Integrand01& f, double c, const QuadOptions& opts = {});
QuadResult integrate_pv(const Integrand& f, double c, const QuadOptions& opts = {});

EvalOutcome to_outcome(const QuadResult& q);

}  // namespace phiver::quad
