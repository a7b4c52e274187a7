#include "phiver/quadkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace phiver::quad {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void validate(const QuadOptions& o)
{
    if (!(o.tol >= 1e-14 && o.tol <= 1e-3))
        throw std::invalid_argument("QuadOptions: tol must lie in [1e-14, 1e-3]");
    if (o.max_level < 4 || o.max_level > 14)
        throw std::invalid_argument("QuadOptions: max_level must lie in [4, 14]");
}

// A double-exponential rule: node(t) returns the weighted sample w(t) f(x(t)).
// Levels halve the step; t_max bounds the abscissae that stay representable.
template <class Node>
QuadResult de_rule(Node node, double t_max, const QuadOptions& opts)
{
    QuadResult res;
    const int kmax = static_cast<int>(std::floor(t_max));
    // Level 0, h = 1. Contributions are kept to find where the tails become negligible.
    std::vector<double> mag_pos(kmax + 1, 0.0), mag_neg(kmax + 1, 0.0);
    num::NeumaierSum sum;
    double abs_sum = 0.0;
    bool finite = true;
    auto add = [&](CValue v) {
        if (!num::is_finite(v))
            finite = false;
        sum.add(v);
        abs_sum += std::abs(v);
        ++res.evaluations;
        return std::abs(v);
    };
    mag_pos[0] = mag_neg[0] = add(node(0.0));
    for (int k = 1; k <= kmax; ++k) {
        mag_pos[k] = add(node(static_cast<double>(k)));
        mag_neg[k] = add(node(-static_cast<double>(k)));
    }
    double peak = std::max(*std::max_element(mag_pos.begin(), mag_pos.end()),
                           *std::max_element(mag_neg.begin(), mag_neg.end()));
    auto cutoff = [&](const std::vector<double>& m) {
        double t = t_max;
        for (int k = kmax; k >= 1; --k) {
            if (m[k] > 1e-19 * peak)
                break;
            t = static_cast<double>(k);
        }
        return t;
    };
    const double tpos = cutoff(mag_pos), tneg = cutoff(mag_neg);

    double h = 1.0;
    CValue prev = sum.value() * h;
    double prev_diff = std::numeric_limits<double>::infinity();
    for (int level = 1; level <= opts.max_level; ++level) {
        h *= 0.5;
        for (double t = h; t < std::max(tpos, tneg); t += 2.0 * h) {
            if (t < tpos)
                add(node(t));
            if (t < tneg)
                add(node(-t));
        }
        CValue cur = sum.value() * h;
        double diff = std::abs(cur - prev);
        double round = 16.0 * kEps * abs_sum * h;
        res.value = cur;
        res.abs_err_est = diff + round;
        double scale = std::max(1.0, std::abs(cur));
        if (!finite)
            break;
        if (level >= 3 && diff <= opts.tol * scale && prev_diff <= std::sqrt(opts.tol) * scale) {
            res.converged = true;
            break;
        }
        if (level >= 4 && diff <= round && round <= opts.tol * scale) {
            res.converged = true;
            break;
        }
        prev_diff = diff;
        prev = cur;
    }
    if (!finite) {
        res.converged = false;
        res.abs_err_est = std::numeric_limits<double>::infinity();
    }
    return res;
}

// tanh-sinh on (alpha, beta) subset of (0,1); f receives global x and 1 - x.
QuadResult tanh_sinh(const Integrand01& f, double alpha, double beta, const QuadOptions& opts)
{
    const double len = beta - alpha;
    const double one_minus_beta = 1.0 - beta;
    auto node = [&](double t) -> CValue {
        double u = kPi * std::sinh(t);
        double eu = std::exp(-std::abs(u));
        // s = 1/(1+e^{-u}), sc = 1/(1+e^{u}), each computed from the small side.
        double small = eu / (1.0 + eu), large = 1.0 / (1.0 + eu);
        double s = u >= 0 ? large : small;
        double sc = u >= 0 ? small : large;
        double w = kPi * std::cosh(t) * s * sc * len;
        if (w == 0.0)
            return 0.0;
        double x = alpha + len * s;
        double xc = one_minus_beta + len * sc;
        if (x <= 0.0 || xc <= 0.0)
            return 0.0;
        x = std::min(x, std::nextafter(1.0, 0.0));
        return w * f(x, xc);
    };
    return de_rule(node, std::asinh(690.0 / kPi), opts);
}

// Gauss-Legendre nodes and weights on (-1, 1).
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w)
{
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = z;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (z * p1 - p0) / (z * z - 1.0);
            double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16)
                break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
}

}  // namespace

QuadResult integrate_01(const Integrand01& f, const QuadOptions& opts)
{
    validate(opts);
    if (opts.pv_point)
        return integrate_pv(f, *opts.pv_point, opts);
    return tanh_sinh(f, 0.0, 1.0, opts);
}

QuadResult integrate_01(const Integrand& f, const QuadOptions& opts)
{
    return integrate_01(Integrand01([&f](double x, double) { return f(x); }), opts);
}

QuadResult integrate_0inf(const Integrand& f, const QuadOptions& opts)
{
    validate(opts);
    auto node = [&](double t) -> CValue {
        double e = 0.5 * kPi * std::sinh(t);
        double x = std::exp(e);
        double w = 0.5 * kPi * std::cosh(t) * x;
        if (x == 0.0 || !std::isfinite(x) || w == 0.0)
            return 0.0;
        return w * f(x);
    };
    return de_rule(node, std::asinh(690.0 / (0.5 * kPi)), opts);
}

QuadResult integrate_pv(const Integrand01& f, double c, const QuadOptions& opts)
{
    validate(opts);
    if (!(c > 0.0 && c < 1.0))
        throw std::invalid_argument("integrate_pv: singular point must lie in (0, 1)");
    const double delta = 0.5 * std::min(c, 1.0 - c);
    QuadOptions plain = opts;
    plain.pv_point.reset();
    QuadResult left = tanh_sinh(f, 0.0, c - delta, plain);
    QuadResult right = tanh_sinh(f, c + delta, 1.0, plain);

    // Symmetric pairing: g(h) = f(c+h) + f(c-h) is regular at h = 0 for a simple pole.
    auto paired = [&](int n, long& evals) {
        std::vector<double> x, w;
        gauss_legendre(n, x, w);
        num::NeumaierSum s;
        for (int i = 0; i < n; ++i) {
            double hh = 0.5 * delta * (x[i] + 1.0);
            CValue g = f(c + hh, 1.0 - c - hh) + f(c - hh, 1.0 - c + hh);
            evals += 2;
            s.add(w[i] * g);
        }
        return 0.5 * delta * s.value();
    };
    QuadResult mid;
    CValue prev = paired(16, mid.evaluations);
    for (int n = 32; n <= 256; n *= 2) {
        CValue cur = paired(n, mid.evaluations);
        mid.value = cur;
        mid.abs_err_est = std::abs(cur - prev) + 16.0 * kEps * std::abs(cur);
        if (std::abs(cur - prev) <= opts.tol * std::max(1.0, std::abs(cur))) {
            mid.converged = true;
            break;
        }
        prev = cur;
    }
    QuadResult out;
    out.value = left.value + mid.value + right.value;
    out.abs_err_est = left.abs_err_est + mid.abs_err_est + right.abs_err_est;
    out.evaluations = left.evaluations + mid.evaluations + right.evaluations;
    out.converged = left.converged && mid.converged && right.converged;
    return out;
}

QuadResult integrate_pv(const Integrand& f, double c, const QuadOptions& opts)
{
    return integrate_pv(Integrand01([&f](double x, double) { return f(x); }), c, opts);
}

EvalOutcome to_outcome(const QuadResult& q)
{
    EvalOutcome o{q.value, q.abs_err_est, 0};
    if (q.converged)
        o.flags |= CONVERGED;
    else
        o.flags |= MAX_TERMS;
    return o;
}

}  // namespace phiver::quad
