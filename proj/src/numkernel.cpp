#include "phiver/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace phiver {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();

std::uint8_t merged_flags(std::uint8_t a, std::uint8_t b)
{
    std::uint8_t conv = (a & b) & CONVERGED;
    return static_cast<std::uint8_t>(((a | b) & ~CONVERGED) | conv);
}
}  // namespace

std::string flags_to_string(std::uint8_t flags)
{
    std::string out;
    auto add = [&](Flag f, const char* name) {
        if (!(flags & f))
            return;
        if (!out.empty())
            out += '|';
        out += name;
    };
    add(CONVERGED, "CONVERGED");
    add(MAX_TERMS, "MAX_TERMS");
    add(DOMAIN_EDGE, "DOMAIN_EDGE");
    add(CANCELLATION, "CANCELLATION");
    return out.empty() ? "NONE" : out;
}

EvalOutcome exact(CValue v)
{
    return {v, 0.0, CONVERGED};
}

EvalOutcome operator+(const EvalOutcome& a, const EvalOutcome& b)
{
    return {a.value + b.value, a.abs_err_est + b.abs_err_est, merged_flags(a.flags, b.flags)};
}

EvalOutcome operator-(const EvalOutcome& a, const EvalOutcome& b)
{
    return {a.value - b.value, a.abs_err_est + b.abs_err_est, merged_flags(a.flags, b.flags)};
}

EvalOutcome operator*(const EvalOutcome& a, const EvalOutcome& b)
{
    double err = std::abs(a.value) * b.abs_err_est + std::abs(b.value) * a.abs_err_est
                 + a.abs_err_est * b.abs_err_est;
    return {a.value * b.value, err, merged_flags(a.flags, b.flags)};
}

EvalOutcome operator*(CValue c, const EvalOutcome& a)
{
    return {c * a.value, std::abs(c) * a.abs_err_est, a.flags};
}

EvalOutcome operator/(const EvalOutcome& a, const EvalOutcome& b)
{
    double bb = std::abs(b.value);
    CValue q = a.value / b.value;
    double err = (a.abs_err_est + std::abs(q) * b.abs_err_est) / bb;
    return {q, err, merged_flags(a.flags, b.flags)};
}

namespace num {

bool is_finite(CValue z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool is_nonpositive_integer(CValue z, double eps)
{
    if (std::abs(z.imag()) > eps || z.real() > eps)
        return false;
    return std::abs(z.real() - std::round(z.real())) <= eps;
}

CValue clog(CValue z)
{
    if (z == CValue(0.0, 0.0))
        throw DomainError("clog: logarithm of zero");
    // A signed zero imaginary part must not select the lower side of the cut.
    double im = z.imag() == 0.0 ? 0.0 : z.imag();
    return {std::log(std::abs(z)), std::atan2(im, z.real())};
}

CValue cpow(CValue z, CValue w)
{
    if (z == CValue(0.0, 0.0)) {
        if (w.real() > 0.0)
            return {0.0, 0.0};
        throw DomainError("cpow: zero base with Re(exponent) <= 0");
    }
    if (w == CValue(0.0, 0.0))
        return {1.0, 0.0};
    if (w == CValue(1.0, 0.0))
        return z;
    return std::exp(w * clog(z));
}

void NeumaierSum::add(CValue x)
{
    auto step = [](double& s, double& c, double v) {
        double t = s + v;
        if (std::abs(s) >= std::abs(v))
            c += (s - t) + v;
        else
            c += (v - t) + s;
        s = t;
    };
    double sr = sum_.real(), si = sum_.imag(), cr = comp_.real(), ci = comp_.imag();
    step(sr, cr, x.real());
    step(si, ci, x.imag());
    sum_ = {sr, si};
    comp_ = {cr, ci};
}

std::size_t block_for_phase(double theta)
{
    double t = std::remainder(theta, 2.0 * kPi);
    t = std::abs(t);
    if (t < 1e-3)
        return 1;
    double p = std::round(kPi / t);
    return static_cast<std::size_t>(std::clamp(p, 1.0, 3000.0));
}

namespace {

EvalOutcome sum_direct(const SeriesSpec& spec)
{
    NeumaierSum s;
    double abs_total = 0.0;
    double prev = -1.0;
    int small_run = 0;
    for (std::size_t n = 0; n < spec.max_terms; ++n) {
        CValue t = spec.term_at(n);
        if (!is_finite(t))
            return {s.value(), std::numeric_limits<double>::infinity(), 0};
        s.add(t);
        double at = std::abs(t);
        abs_total += at;
        double scale = std::max(std::abs(s.value()), std::numeric_limits<double>::min());
        double tail = 0.0;
        bool ratio_ok = false;
        if (prev > 0.0) {
            double r = at / prev;
            if (r < 0.999) {
                tail = at * r / (1.0 - r);
                ratio_ok = true;
            }
        }
        // Stop well below tol: the tail estimate is only a ratio extrapolation.
        double target = 1e-3 * spec.tol * scale;
        small_run = at <= target ? small_run + 1 : 0;
        bool done = n >= 2 && ((ratio_ok && tail <= target && small_run >= 1)
                               || small_run >= 3 || abs_total == 0.0);
        if (done) {
            double err = (ratio_ok ? tail : at) + 4.0 * kEps * abs_total;
            EvalOutcome out{s.value(), err, 0};
            if (err <= spec.tol * std::max(1.0, std::abs(out.value)) || err <= spec.tol * scale)
                out.flags |= CONVERGED;
            return out;
        }
        prev = at;
    }
    return {s.value(), std::abs(s.value()) + 1.0, MAX_TERMS};
}

// Van Wijngaarden's incremental form of the Euler transform.
EvalOutcome sum_euler(const SeriesSpec& spec)
{
    std::vector<CValue> w;
    NeumaierSum s;
    std::size_t nterm = 0;
    double last_inc = std::numeric_limits<double>::infinity();
    int small_run = 0;
    double abs_total = 0.0;
    for (std::size_t j = 0; j < spec.max_terms; ++j) {
        CValue term = spec.term_at(j);
        if (!is_finite(term))
            return {s.value(), std::numeric_limits<double>::infinity(), 0};
        abs_total += std::abs(term);
        CValue inc;
        if (j == 0) {
            w.assign(1, term);
            nterm = 1;
            inc = 0.5 * term;
        } else {
            w.resize(nterm + 1);
            CValue tmp = w[0];
            w[0] = term;
            for (std::size_t k = 0; k + 1 < nterm; ++k) {
                CValue dum = w[k + 1];
                w[k + 1] = 0.5 * (w[k] + tmp);
                tmp = dum;
            }
            w[nterm] = 0.5 * (w[nterm - 1] + tmp);
            if (std::abs(w[nterm]) <= std::abs(w[nterm - 1])) {
                inc = 0.5 * w[nterm];
                ++nterm;
            } else {
                inc = w[nterm];
                w.resize(nterm);
            }
        }
        s.add(inc);
        double ai = std::abs(inc);
        double scale = std::max(std::abs(s.value()), std::numeric_limits<double>::min());
        small_run = ai <= spec.tol * scale ? small_run + 1 : 0;
        if (j >= 3 && small_run >= 2) {
            double err = std::max(ai, last_inc) + 8.0 * kEps * std::abs(s.value());
            EvalOutcome out{s.value(), err, 0};
            if (err <= spec.tol * std::max(1.0, std::abs(out.value)) || err <= 4.0 * spec.tol * scale)
                out.flags |= CONVERGED;
            return out;
        }
        last_inc = ai;
    }
    return {s.value(), last_inc, MAX_TERMS};
}

struct LevinEstimate {
    CValue value;
    double roundoff;
    bool ok;
};

// Levin u-transform L_k^{(0)} with beta = 1 over partial sums S_0..S_k.
LevinEstimate levin_u(const std::vector<CValue>& S, const std::vector<CValue>& a, std::size_t k)
{
    constexpr double beta = 1.0;
    CValue num{}, den{};
    double num_abs = 0.0;
    double binom = 1.0;
    for (std::size_t j = 0; j <= k; ++j) {
        if (j > 0)
            binom *= static_cast<double>(k - j + 1) / static_cast<double>(j);
        CValue omega = (beta + static_cast<double>(j)) * a[j];
        if (omega == CValue(0.0, 0.0))
            return {{}, 0.0, false};
        double c = binom * std::pow((beta + j) / (beta + k), static_cast<double>(k) - 1.0);
        if (j % 2 == 1)
            c = -c;
        CValue cw = c / omega;
        num += cw * S[j];
        den += cw;
        num_abs += std::abs(cw * S[j]);
    }
    if (den == CValue(0.0, 0.0))
        return {{}, 0.0, false};
    CValue v = num / den;
    return {v, 16.0 * kEps * num_abs / std::abs(den), is_finite(v)};
}

EvalOutcome sum_levin(const SeriesSpec& spec)
{
    const std::size_t block = std::max<std::size_t>(1, spec.block);
    const std::size_t max_blocks = std::max<std::size_t>(4, spec.max_terms / block);
    constexpr std::size_t kmax = 60;

    std::vector<CValue> S, a;
    NeumaierSum partial;
    std::size_t n = 0;
    auto next_block = [&]() {
        NeumaierSum b;
        for (std::size_t i = 0; i < block; ++i)
            b.add(spec.term_at(n++));
        return b.value();
    };

    CValue best{};
    double best_err = std::numeric_limits<double>::infinity();
    CValue prev{};
    bool have_prev = false;
    double prev_diff = std::numeric_limits<double>::infinity();

    for (std::size_t k = 0; k < std::min(kmax, max_blocks); ++k) {
        CValue b = next_block();
        if (!is_finite(b))
            break;
        partial.add(b);
        a.push_back(b);
        S.push_back(partial.value());

        if (b == CValue(0.0, 0.0)) {
            // A vanishing block: the series may simply have terminated.
            bool all_zero = true;
            for (int extra = 0; extra < 3 && all_zero; ++extra) {
                CValue c = next_block();
                all_zero = c == CValue(0.0, 0.0);
                partial.add(c);
            }
            if (all_zero)
                return {partial.value(), kEps * std::abs(partial.value()), CONVERGED};
            return sum_direct(spec);
        }
        if (k < 1)
            continue;

        LevinEstimate est = levin_u(S, a, k);
        if (!est.ok)
            continue;
        if (have_prev) {
            double err = std::max(std::abs(est.value - prev), est.roundoff);
            double scale = std::max(std::abs(est.value), std::numeric_limits<double>::min());
            if (k >= 3 && err < best_err) {
                best_err = err;
                best = est.value;
            }
            if (k >= 4 && err <= spec.tol * scale && prev_diff <= 10.0 * spec.tol * scale)
                return {est.value, err, CONVERGED};
            prev_diff = err;
        }
        prev = est.value;
        have_prev = true;
    }
    EvalOutcome out{best, best_err, 0};
    if (best_err <= spec.tol * std::max(1.0, std::abs(best)))
        out.flags |= CONVERGED;
    else
        out.flags |= MAX_TERMS;
    return out;
}

}  // namespace

EvalOutcome sum_series(const SeriesSpec& spec)
{
    if (!(spec.tol > 0.0))
        throw std::invalid_argument("sum_series: tol must be positive");
    if (!spec.term_at)
        throw std::invalid_argument("sum_series: missing term function");
    switch (spec.accel) {
    case Accel::DIRECT: return sum_direct(spec);
    case Accel::EULER_TRANSFORM: return sum_euler(spec);
    case Accel::LEVIN_U: return sum_levin(spec);
    }
    return sum_direct(spec);
}

namespace {

struct CircleSamples {
    std::vector<CValue> f;
    double max_abs = 0.0;
    double max_err = 0.0;
    bool all_converged = true;
    bool finite = true;
};

void sample_circle(const COutcomeFunc& f, CValue z0, double r, int n, int offset, int stride,
                   CircleSamples& out)
{
    for (int k = offset; k < n; k += stride) {
        double th = 2.0 * kPi * k / n;
        EvalOutcome v = f(z0 + std::polar(r, th));
        out.f[k] = v.value;
        if (!is_finite(v.value)) {
            out.finite = false;
            continue;
        }
        out.max_abs = std::max(out.max_abs, std::abs(v.value));
        out.max_err = std::max(out.max_err, v.abs_err_est);
        out.all_converged = out.all_converged && v.converged();
    }
}

CValue trapezoid_coeff(const std::vector<CValue>& f, int stride, int order)
{
    int n = static_cast<int>(f.size()) / stride;
    NeumaierSum s;
    for (int k = 0; k < n; ++k) {
        double th = 2.0 * kPi * k / n;
        s.add(f[k * stride] * std::polar(1.0, -order * th));
    }
    return s.value() / static_cast<double>(n);
}

}  // namespace

EvalOutcome cauchy_deriv(const COutcomeFunc& f, CValue z0, int order, double radius, int nodes,
                         double tol)
{
    if (order < 1)
        throw std::invalid_argument("cauchy_deriv: order must be >= 1");
    if (nodes < 16)
        throw std::invalid_argument("cauchy_deriv: at least 16 nodes required");
    if (!(radius > 0.0))
        throw std::invalid_argument("cauchy_deriv: radius must be positive");

    double r = radius;
    for (int attempt = 0;; ++attempt) {
        try {
            const int n2 = 2 * nodes;
            CircleSamples cs;
            cs.f.assign(n2, CValue{});
            sample_circle(f, z0, r, n2, 0, 2, cs);
            sample_circle(f, z0, r, n2, 1, 2, cs);
            double fact = std::tgamma(order + 1.0);
            double scale = fact / std::pow(r, order);
            if (!cs.finite)
                return {CValue(std::nan(""), std::nan("")), std::numeric_limits<double>::infinity(),
                        DOMAIN_EDGE};
            CValue c1 = trapezoid_coeff(cs.f, 2, order) * scale;
            CValue c2 = trapezoid_coeff(cs.f, 1, order) * scale;
            double err = std::abs(c2 - c1) + scale * (cs.max_err + 8.0 * kEps * cs.max_abs);
            EvalOutcome out{c2, err, 0};
            if (cs.all_converged && err <= tol * std::max(1.0, std::abs(c2)))
                out.flags |= CONVERGED;
            if (scale * cs.max_abs > 1e6 * std::max(1.0, std::abs(c2)))
                out.flags |= CANCELLATION;
            return out;
        } catch (const DomainError&) {
            if (attempt >= 6)
                throw;
            r *= 0.5;
        }
    }
}

EvalOutcome cauchy_deriv(const CFunc& f, CValue z0, int order, double radius, int nodes, double tol)
{
    return cauchy_deriv(COutcomeFunc([&f](CValue z) { return exact(f(z)); }), z0, order, radius,
                        nodes, tol);
}

}  // namespace num
}  // namespace phiver
