#include "phiver/gammakit.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace phiver::gam {

using num::clog;
using num::cpow;
using num::NeumaierSum;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 5000;

// Below this modulus (or below |a|) the pair is computed from the Kummer series.
constexpr double kCfThreshold = 4.0;

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// B_{2k} for k = 1..8
constexpr std::array<double, 8> kBernoulliEven = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,
    -3617.0 / 510.0};

std::string fmt(CValue z)
{
    return "(" + std::to_string(z.real()) + "," + std::to_string(z.imag()) + ")";
}

void check_pole(CValue z, const char* who)
{
    if (num::is_nonpositive_integer(z))
        throw DomainError(std::string(who) + ": pole at nonpositive integer z = "
                          + std::to_string(static_cast<long>(z.real())));
}

EvalOutcome with_tol(CValue v, double err, double tol = 1e-13)
{
    EvalOutcome o{v, err, 0};
    if (num::is_finite(v) && err <= tol * std::max(1.0, std::abs(v)))
        o.flags |= CONVERGED;
    return o;
}

CValue lanczos_gamma(CValue z)
{
    z -= 1.0;
    CValue x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        x += kLanczos[i] / (z + static_cast<double>(i));
    CValue t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * clog(t) - t) * x;
}

// e^{2 pi i w} with the real part of w reduced exactly first, so integer w gives 1.
CValue exp_2pi_i(CValue w)
{
    double r = w.real() - std::round(w.real());
    return std::exp(CValue(0.0, 2.0 * kPi) * CValue(r, w.imag()));
}

bool on_negative_axis(CValue z)
{
    return z.imag() == 0.0 && z.real() < 0.0;
}

bool use_cf(CValue a, CValue z)
{
    double az = std::abs(z);
    if (on_negative_axis(z))
        return false;
    if (az < std::max(kCfThreshold, std::abs(a)))
        return false;
    return std::abs(std::arg(z)) <= 0.8 * kPi || az > 40.0;
}

// Legendre continued fraction; returns h with Gamma(a,z) = z^a e^{-z} h.
CValue legendre_cf(CValue a, CValue z, double& rel_err, bool& ok)
{
    CValue b = z + 1.0 - a;
    CValue c = 1.0 / kTiny;
    CValue d = 1.0 / b;
    CValue h = d;
    ok = false;
    int i = 1;
    for (; i < kMaxIter; ++i) {
        CValue an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        CValue del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= kEps) {
            ok = true;
            break;
        }
    }
    rel_err = 4.0 * kEps * std::sqrt(static_cast<double>(i));
    return h;
}

struct SeriesResult {
    CValue value;
    double err;
};

// gamma(a, z) from the Kummer-type series.
SeriesResult lower_series(CValue a, CValue z)
{
    if (z == CValue(0.0, 0.0))
        return {0.0, 0.0};
    NeumaierSum s;
    double abs_sum = 0.0;
    if (z.real() >= 0.0) {
        CValue term = 1.0 / a;
        s.add(term);
        abs_sum = std::abs(term);
        for (int n = 1; n < kMaxIter; ++n) {
            term *= z / (a + static_cast<double>(n));
            s.add(term);
            abs_sum += std::abs(term);
            if (std::abs(term) <= kEps * 0.25 * std::abs(s.value()) && n > std::abs(z))
                break;
        }
        CValue pref = std::exp(a * clog(z) - z);
        CValue v = pref * s.value();
        return {v, 8.0 * kEps * std::abs(pref) * abs_sum + 4.0 * kEps * std::abs(v)};
    }
    CValue mz = -z;
    CValue fact = 1.0;
    s.add(1.0 / a);
    abs_sum = 1.0 / std::abs(a);
    for (int n = 1; n < kMaxIter; ++n) {
        fact *= mz / static_cast<double>(n);
        CValue term = fact / (a + static_cast<double>(n));
        s.add(term);
        abs_sum += std::abs(term);
        if (std::abs(term) <= kEps * 0.25 * std::abs(s.value()) && n > std::abs(z))
            break;
    }
    CValue pref = cpow(z, a);
    CValue v = pref * s.value();
    return {v, 8.0 * kEps * std::abs(pref) * abs_sum + 4.0 * kEps * std::abs(v)};
}

// e^z E_n(z) and its error; n >= 1.
EvalOutcome scaled_expint(int n, CValue z)
{
    if (z == CValue(0.0, 0.0))
        throw DomainError("expint_en: z = 0");
    if (use_cf(CValue(static_cast<double>(n)), z) || (std::abs(z) >= 2.0 && z.real() > 0.0)) {
        CValue b = z + static_cast<double>(n);
        CValue c = 1.0 / kTiny;
        CValue d = 1.0 / b;
        CValue h = d;
        int i = 1;
        bool ok = false;
        for (; i < kMaxIter; ++i) {
            double an = -static_cast<double>(i) * (n - 1 + i);
            b += 2.0;
            d = an * d + b;
            if (std::abs(d) < kTiny)
                d = kTiny;
            d = 1.0 / d;
            c = b + an / c;
            if (std::abs(c) < kTiny)
                c = kTiny;
            CValue del = c * d;
            h *= del;
            if (std::abs(del - 1.0) <= kEps) {
                ok = true;
                break;
            }
        }
        EvalOutcome o = with_tol(h, 4.0 * kEps * std::sqrt(static_cast<double>(i)) * std::abs(h));
        if (!ok)
            o.flags = MAX_TERMS;
        return o;
    }
    NeumaierSum s;
    double abs_sum = 0.0;
    CValue lz = clog(z);
    if (n - 1 != 0)
        s.add(1.0 / static_cast<double>(n - 1));
    else
        s.add(-lz - kEulerGamma);
    abs_sum = std::abs(s.value());
    CValue fact = 1.0;
    for (int i = 1; i < kMaxIter; ++i) {
        fact *= -z / static_cast<double>(i);
        CValue del;
        if (i != n - 1) {
            del = -fact / static_cast<double>(i - n + 1);
        } else {
            double psi = -kEulerGamma;
            for (int ii = 1; ii <= n - 1; ++ii)
                psi += 1.0 / ii;
            del = fact * (-lz + psi);
        }
        s.add(del);
        abs_sum += std::abs(del);
        if (std::abs(del) <= 0.25 * kEps * std::abs(s.value()) && i > std::abs(z))
            break;
    }
    CValue ez = std::exp(z);
    CValue v = ez * s.value();
    return with_tol(v, 8.0 * kEps * std::abs(ez) * abs_sum + 4.0 * kEps * std::abs(v));
}

// Gamma(-n, z) e^z = z^{-n} e^z E_{n+1}(z)
EvalOutcome scaled_upper_nonpositive(int n, CValue z)
{
    EvalOutcome e = scaled_expint(n + 1, z);
    if (n == 0)
        return e;
    return cpow(z, static_cast<double>(-n)) * e;
}

}  // namespace

EvalOutcome gamma(CValue z)
{
    check_pole(z, "gamma");
    if (!num::is_finite(z))
        throw DomainError("gamma: non-finite argument");
    CValue v;
    if (z.real() < 0.5) {
        CValue s = std::sin(kPi * z);
        v = kPi / (s * lanczos_gamma(1.0 - z));
    } else if (std::abs(z) > 140.0) {
        v = std::exp(loggamma(z).value);
    } else {
        v = lanczos_gamma(z);
    }
    double rel = 8.0 * kEps * (1.0 + std::abs(z));
    return with_tol(v, rel * std::abs(v), 1e-12);
}

EvalOutcome loggamma(CValue z)
{
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw DomainError("loggamma: argument " + fmt(z) + " on the branch cut (-inf, 0]");
    if (!num::is_finite(z))
        throw DomainError("loggamma: non-finite argument");
    int shift = z.real() < 15.0 ? static_cast<int>(std::ceil(15.0 - z.real())) : 0;
    NeumaierSum logs;
    for (int k = 0; k < shift; ++k)
        logs.add(clog(z + static_cast<double>(k)));
    CValue w = z + static_cast<double>(shift);
    CValue lw = clog(w);
    NeumaierSum s;
    s.add((w - 0.5) * lw);
    s.add(-w);
    s.add(0.5 * std::log(2.0 * kPi));
    CValue winv = 1.0 / w;
    CValue w2 = winv * winv;
    CValue p = winv;
    for (std::size_t k = 1; k <= kBernoulliEven.size(); ++k) {
        s.add(kBernoulliEven[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p);
        p *= w2;
    }
    CValue v = s.value() - logs.value();
    double err = 4.0 * kEps * (std::abs(s.value()) + std::abs(logs.value()));
    return with_tol(v, err);
}

EvalOutcome digamma(CValue z)
{
    check_pole(z, "digamma");
    if (z.real() < 0.5) {
        EvalOutcome r = digamma(1.0 - z);
        CValue c = kPi / std::tan(kPi * z);
        return {r.value - c, r.abs_err_est + 4.0 * kEps * std::abs(c), r.flags};
    }
    NeumaierSum s;
    CValue w = z;
    while (w.real() < 12.0) {
        s.add(-1.0 / w);
        w += 1.0;
    }
    CValue winv = 1.0 / w;
    CValue w2 = winv * winv;
    s.add(clog(w));
    s.add(-0.5 * winv);
    CValue p = w2;
    for (std::size_t k = 1; k <= kBernoulliEven.size(); ++k) {
        s.add(-kBernoulliEven[k - 1] / (2.0 * k) * p);
        p *= w2;
    }
    CValue v = s.value();
    return with_tol(v, 8.0 * kEps * std::max(1.0, std::abs(clog(w))));
}

CValue pochhammer(CValue z, unsigned n)
{
    CValue p = 1.0;
    for (unsigned k = 0; k < n; ++k)
        p *= z + static_cast<double>(k);
    return p;
}

EvalOutcome lower_gamma(CValue a, CValue z)
{
    if (num::is_nonpositive_integer(a))
        throw DomainError("lower_gamma: a is a nonpositive integer (simple pole)");
    if (z == CValue(0.0, 0.0)) {
        if (a.real() > 0.0)
            return exact(0.0);
        throw DomainError("lower_gamma: z = 0 with Re(a) <= 0");
    }
    if (use_cf(a, z)) {
        EvalOutcome g = gamma(a);
        EvalOutcome up = upper_gamma(a, z);
        EvalOutcome r = g - up;
        r.abs_err_est += 2.0 * kEps * std::abs(g.value);
        return with_tol(r.value, r.abs_err_est);
    }
    SeriesResult s = lower_series(a, z);
    return with_tol(s.value, s.err);
}

EvalOutcome upper_gamma_scaled(CValue a, CValue z)
{
    if (z == CValue(0.0, 0.0))
        throw DomainError("upper_gamma_scaled: z = 0");
    if (num::is_nonpositive_integer(a))
        return scaled_upper_nonpositive(static_cast<int>(-std::round(a.real())), z);
    if (use_cf(a, z)) {
        double rel = 0.0;
        bool ok = false;
        CValue h = legendre_cf(a, z, rel, ok);
        CValue v = cpow(z, a) * h;
        EvalOutcome o = with_tol(v, (rel + 4.0 * kEps * (1.0 + std::abs(a * clog(z)))) * std::abs(v));
        if (!ok)
            o.flags = MAX_TERMS;
        return o;
    }
    EvalOutcome g = gamma(a);
    SeriesResult s = lower_series(a, z);
    CValue ez = std::exp(z);
    CValue diff = g.value - s.value;
    CValue v = ez * diff;
    double err = std::abs(ez) * (g.abs_err_est + s.err + 2.0 * kEps * std::abs(g.value));
    EvalOutcome o = with_tol(v, err + 4.0 * kEps * std::abs(v));
    if (std::abs(diff) < 1e-6 * std::abs(g.value))
        o.flags |= CANCELLATION;
    return o;
}

EvalOutcome upper_gamma(CValue a, CValue z)
{
    if (z == CValue(0.0, 0.0)) {
        if (a.real() > 0.0)
            return gamma(a);
        throw DomainError("upper_gamma: z = 0 with Re(a) <= 0");
    }
    if (!num::is_nonpositive_integer(a) && !use_cf(a, z)) {
        EvalOutcome g = gamma(a);
        SeriesResult s = lower_series(a, z);
        CValue v = g.value - s.value;
        double err = g.abs_err_est + s.err + 2.0 * kEps * std::abs(g.value);
        EvalOutcome o = with_tol(v, err);
        if (std::abs(v) < 1e-6 * std::abs(g.value))
            o.flags |= CANCELLATION;
        return o;
    }
    EvalOutcome sc = upper_gamma_scaled(a, z);
    CValue emz = std::exp(-z);
    return {emz * sc.value, std::abs(emz) * sc.abs_err_est, sc.flags};
}

EvalOutcome upper_gamma_continued(CValue a, CValue z, GammaBranchSpec branch)
{
    if (branch.winding == 0)
        return upper_gamma(a, z);
    if (z == CValue(0.0, 0.0))
        throw DomainError("upper_gamma_continued: z = 0");
    if (num::is_nonpositive_integer(a))
        throw DomainError("upper_gamma_continued: a is a nonpositive integer and winding != 0");
    CValue e = exp_2pi_i(static_cast<double>(branch.winding) * a);
    EvalOutcome up = upper_gamma(a, z);
    EvalOutcome g = gamma(a);
    return e * up + (1.0 - e) * g;
}

EvalOutcome upper_gamma_a_deriv(CValue a, CValue z)
{
    if (z == CValue(0.0, 0.0))
        throw DomainError("upper_gamma_a_deriv: z = 0");
    auto f = [z](CValue aa) { return upper_gamma(aa, z); };
    return num::cauchy_deriv(num::COutcomeFunc(f), a, 1, 0.25, 32, 1e-9);
}

EvalOutcome expint_en(int n, CValue z)
{
    if (n < 1)
        throw DomainError("expint_en: order must be >= 1");
    if (z == CValue(0.0, 0.0))
        throw DomainError("expint_en: z = 0");
    EvalOutcome sc = scaled_expint(n, z);
    CValue emz = std::exp(-z);
    return {emz * sc.value, std::abs(emz) * sc.abs_err_est, sc.flags};
}

namespace {

EvalOutcome beta_b0(CValue z, CValue a)
{
    // sum z^{a+n}/(a+n)
    num::SeriesSpec spec;
    spec.term_at = [z, a](std::size_t n) {
        return num::cpow(z, static_cast<double>(n)) / (a + static_cast<double>(n));
    };
    spec.tol = 1e-14;
    if (std::abs(z) <= 0.9) {
        spec.accel = num::Accel::DIRECT;
        spec.max_terms = 20000;
    } else {
        spec.accel = num::Accel::LEVIN_U;
        spec.block = num::block_for_phase(std::arg(z));
        spec.max_terms = 60 * spec.block;
    }
    EvalOutcome s = num::sum_series(spec);
    return cpow(z, a) * s;
}

// Continued fraction for B_z(a,b) = z^a (1-z)^b / a * h.
bool beta_cf(CValue z, CValue a, CValue b, CValue& h)
{
    CValue qab = a + b, qap = a + 1.0, qam = a - 1.0;
    CValue c = 1.0;
    CValue d = 1.0 - qab * z / qap;
    if (std::abs(d) < kTiny)
        d = kTiny;
    d = 1.0 / d;
    h = d;
    for (int m = 1; m < kMaxIter; ++m) {
        double md = m;
        CValue m2 = 2.0 * md;
        CValue aa = md * (b - md) * z / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + md) * (qab + md) * z / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        CValue del = d * c;
        h *= del;
        if (std::abs(del - 1.0) <= kEps)
            return true;
    }
    return false;
}

}  // namespace

EvalOutcome inc_beta(CValue z, CValue a, CValue b)
{
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw DomainError("inc_beta: z on the cut [1, inf)");
    if (z == CValue(0.0, 0.0)) {
        if (a.real() > 0.0)
            return exact(0.0);
        throw DomainError("inc_beta: z = 0 with Re(a) <= 0");
    }
    if (b == CValue(1.0, 0.0)) {
        if (a == CValue(0.0, 0.0))
            throw DomainError("inc_beta: a = 0");
        CValue v = cpow(z, a) / a;
        return with_tol(v, 2.0 * kEps * std::abs(v));
    }
    if (b == CValue(0.0, 0.0)) {
        if (num::is_nonpositive_integer(a))
            throw DomainError("inc_beta: a is a nonpositive integer with b = 0");
        if (std::abs(z) > 1.0 + 1e-12)
            throw DomainError("inc_beta: |z| > 1 with b = 0 (divergent series)");
        return beta_b0(z, a);
    }
    if (num::is_nonpositive_integer(a))
        throw DomainError("inc_beta: a is a nonpositive integer");
    CValue h;
    if (beta_cf(z, a, b, h)) {
        CValue v = cpow(z, a) * cpow(1.0 - z, b) * h / a;
        return with_tol(v, 16.0 * kEps * std::abs(v));
    }
    if (std::abs(z) >= 1.0)
        throw DomainError("inc_beta: continued fraction failed and |z| >= 1");
    // z^a sum (1-b)_n z^n / (n! (a+n))
    num::SeriesSpec spec;
    spec.term_at = [z, a, b](std::size_t n) {
        CValue t = 1.0;
        for (std::size_t k = 0; k < n; ++k)
            t *= (1.0 - b + static_cast<double>(k)) * z / static_cast<double>(k + 1);
        return t / (a + static_cast<double>(n));
    };
    spec.accel = std::abs(z) <= 0.9 ? num::Accel::DIRECT : num::Accel::LEVIN_U;
    spec.tol = 1e-14;
    spec.max_terms = 20000;
    return cpow(z, a) * num::sum_series(spec);
}

}  // namespace phiver::gam
