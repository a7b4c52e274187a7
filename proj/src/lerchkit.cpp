#include "phiver/lerchkit.hpp"

#include "phiver/gammakit.hpp"
#include "phiver/zetakit.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace phiver::lerch {

using num::clog;
using num::cpow;

namespace {

constexpr double kCircleSlack = 1e-12;
constexpr double kSeriesTol = 1e-12;
constexpr double kZDerivTol = 1e-11;

const CValue I(0.0, 1.0);

std::string describe(const LerchPoint& p)
{
    std::ostringstream os;
    os.precision(6);
    os << "Phi(z=" << p.z << ", s=" << p.s << ", a=" << p.a << ")";
    return os.str();
}

bool is_one(CValue z)
{
    return std::abs(z - 1.0) <= 1e-15;
}

bool on_circle(CValue z)
{
    return std::abs(std::abs(z) - 1.0) <= kCircleSlack;
}

CValue e_i(CValue w)
{
    return std::exp(I * w);
}

bool near_positive_integer(CValue s)
{
    return s.real() > 0.5 && std::abs(s - std::round(s.real())) < 1e-4;
}

// Phi = z^{-a} [Gamma(1-s) (-log z)^{s-1} + sum_r zeta(s-r, a) (log z)^r / r!], |log z| small.
EvalOutcome log_expansion(CValue z, CValue s, CValue a)
{
    const CValue L = clog(z);
    EvalOutcome g = gam::gamma(1.0 - s);
    EvalOutcome acc = cpow(-L, s - 1.0) * g;
    CValue lp = 1.0;
    int small_run = 0;
    for (int r = 0; r < 60; ++r) {
        EvalOutcome t = lp * zeta::hurwitz_zeta(s - static_cast<double>(r), a);
        acc = acc + t;
        small_run = std::abs(t.value) <= 1e-17 * std::abs(acc.value) ? small_run + 1 : 0;
        if (small_run >= 2)
            break;
        lp *= L / static_cast<double>(r + 1);
    }
    EvalOutcome out = std::exp(-a * L) * acc;
    out.abs_err_est += 1e-15 * std::abs(out.value);
    out.flags &= static_cast<std::uint8_t>(DOMAIN_EDGE | CANCELLATION);
    if (out.abs_err_est <= kSeriesTol * std::max(1.0, std::abs(out.value)))
        out.flags |= CONVERGED;
    else
        out.flags |= MAX_TERMS;
    return out;
}

EvalOutcome series(CValue z, CValue s, CValue a)
{
    const double r = std::abs(z);
    const CValue lz = clog(z);
    if (std::abs(lz) < 0.1 && !near_positive_integer(s))
        return log_expansion(z, s, a);
    num::SeriesSpec spec;
    spec.term_at = [lz, s, a](std::size_t n) {
        double dn = static_cast<double>(n);
        return std::exp(dn * lz - s * clog(a + dn));
    };
    spec.tol = kSeriesTol;
    double predicted = r < 1.0 ? 40.0 / -std::log(r) : 1e300;
    if (r <= 0.5 || predicted <= 2500.0 || (near_positive_integer(s) && predicted <= 2e6)) {
        spec.accel = num::Accel::DIRECT;
        spec.max_terms = 4000000;
    } else {
        spec.accel = num::Accel::LEVIN_U;
        spec.block = num::block_for_phase(std::arg(z));
        spec.max_terms = 60 * spec.block;
    }
    return num::sum_series(spec);
}

// Carries the inner point description into the error message.
template <class F>
EvalOutcome guarded(const char* who, const char* which, F&& f)
{
    try {
        return f();
    } catch (const DomainError& e) {
        throw DomainError(std::string(who) + ": " + which + " point invalid: " + e.what());
    }
}

Sides make_sides(EvalOutcome l, EvalOutcome r)
{
    return {l, r};
}

EvalOutcome difference(const Sides& s)
{
    return s.first - s.second;
}

}  // namespace

void validate(const LerchPoint& p)
{
    if (!num::is_finite(p.z) || !num::is_finite(p.s) || !num::is_finite(p.a))
        throw DomainError("lerch_phi: non-finite argument in " + describe(p));
    if (num::is_nonpositive_integer(p.a))
        throw DomainError("lerch_phi: a is a nonpositive integer in " + describe(p));
    if (std::abs(p.z) > 1.0 + kCircleSlack)
        throw DomainError("lerch_phi: |z| > 1 in " + describe(p));
    if (is_one(p.z) && !(p.s.real() > 1.0))
        throw DomainError("lerch_phi: z = 1 requires Re(s) > 1 in " + describe(p));
}

EvalOutcome lerch_phi(const LerchPoint& p)
{
    validate(p);
    if (p.z == CValue(0.0, 0.0))
        return exact(cpow(p.a, -p.s));
    if (is_one(p.z))
        return zeta::hurwitz_zeta(p.s, p.a);

    // Shift a to Re(a) >= 1/2 by the recurrence Phi(z,s,a) = a^{-s} + z Phi(z,s,a+1).
    CValue a = p.a;
    CValue head = 0.0;
    CValue zk = 1.0;
    while (a.real() < 0.5) {
        head += zk * cpow(a, -p.s);
        zk *= p.z;
        a += 1.0;
    }
    EvalOutcome tail = series(p.z, p.s, a);
    EvalOutcome out{head + zk * tail.value, std::abs(zk) * tail.abs_err_est, tail.flags};
    if (on_circle(p.z) && p.s.real() <= 0.0)
        out.flags |= DOMAIN_EDGE;
    return out;
}

EvalOutcome lerch_phi_sderiv(int j, const LerchPoint& p)
{
    if (j != 1 && j != 2)
        throw DomainError("lerch_phi_sderiv: order must be 1 or 2");
    validate(p);
    if (is_one(p.z))
        return zeta::hurwitz_zeta_sderiv(j, p.s, p.a);
    auto f = [&p](CValue s) { return lerch_phi({p.z, s, p.a}); };
    return num::cauchy_deriv(num::COutcomeFunc(f), p.s, j, 0.2, 32, 1e-9);
}

EvalOutcome lerch_phi_zderiv(int n, const LerchPoint& p)
{
    if (n < 1)
        throw DomainError("lerch_phi_zderiv: order must be >= 1");
    validate(p);
    if (!(std::abs(p.z) < 1.0))
        throw DomainError("lerch_phi_zderiv: requires |z| < 1 in " + describe(p));
    const CValue s = p.s, a = p.a, z = p.z;
    num::SeriesSpec spec;
    spec.term_at = [z, s, a, n](std::size_t i) {
        double j = static_cast<double>(i) + n;
        CValue ff = 1.0;
        for (int k = 0; k < n; ++k)
            ff *= j - k;
        CValue zp = i == 0 ? CValue(1.0) : cpow(z, static_cast<double>(i));
        return ff * zp * cpow(a + j, -s);
    };
    spec.tol = kZDerivTol;
    const double r = std::abs(z);
    if (r <= 0.9) {
        spec.accel = num::Accel::DIRECT;
        spec.max_terms = 40000;
    } else {
        spec.accel = num::Accel::LEVIN_U;
        spec.block = num::block_for_phase(std::arg(z));
        spec.max_terms = 60 * spec.block;
    }
    return num::sum_series(spec);
}

EvalOutcome polylog(CValue s, CValue z)
{
    if (z == CValue(0.0, 0.0))
        return exact(0.0);
    return z * lerch_phi({z, s, 1.0});
}

EvalOutcome polylog_sderiv(CValue s, CValue z)
{
    if (z == CValue(0.0, 0.0))
        return exact(0.0);
    if (z == CValue(-1.0, 0.0) && std::abs(s - 1.0) > 0.3) {
        // Li_s(-1) = -(1 - 2^{1-s}) zeta(s)
        CValue p = cpow(2.0, 1.0 - s);
        EvalOutcome zs = zeta::hurwitz_zeta(s, 1.0);
        EvalOutcome dz = zeta::hurwitz_zeta_sderiv(1, s, 1.0);
        return CValue(-std::log(2.0)) * p * zs - (1.0 - p) * dz;
    }
    return z * lerch_phi_sderiv(1, {z, s, 1.0});
}

EvalOutcome legendre_chi(CValue s, CValue z)
{
    if (z == CValue(0.0, 0.0))
        return exact(0.0);
    return z * cpow(2.0, -s) * lerch_phi({z * z, s, 0.5});
}

EvalOutcome ti_inverse_tangent_integral(CValue s, CValue z)
{
    if (z == CValue(0.0, 0.0))
        return exact(0.0);
    return z * cpow(2.0, -s) * lerch_phi({-(z * z), s, 0.5});
}

Sides funeq_sides(CValue k, CValue t, CValue m)
{
    const char* who = "funeq_residual";
    CValue z1 = e_i(-2.0 * kPi * m);
    EvalOutcome lhs =
        guarded(who, "LHS", [&] { return lerch_phi({z1, -k, 1.0 - t / (2.0 * kPi)}); });
    EvalOutcome p2 = guarded(who, "first RHS", [&] { return lerch_phi({e_i(-t), 1.0 + k, m}); });
    EvalOutcome p3 =
        guarded(who, "second RHS", [&] { return lerch_phi({e_i(t), 1.0 + k, 1.0 - m}); });
    EvalOutcome g = guarded(who, "Gamma(1+k)", [&] { return gam::gamma(1.0 + k); });
    CValue mk = cpow(-1.0, k);
    CValue pref = I * mk * e_i(-0.5 * (3.0 * k * kPi + 2.0 * m * (t - 2.0 * kPi)))
                  * cpow(2.0 * kPi, -1.0 - k);
    EvalOutcome rhs = pref * (g * ((mk * e_i(t)) * p3 - p2));
    return make_sides(lhs, rhs);
}

Sides funeq515_sides(CValue x, CValue s, CValue a)
{
    const char* who = "funeq515_residual";
    if (!(x.real() < 0.0))
        throw DomainError("funeq515_residual: requires Re(x) < 0");
    EvalOutcome lhs =
        guarded(who, "LHS", [&] { return lerch_phi({e_i(2.0 * kPi * x), 1.0 - s, a}); });
    EvalOutcome p2 =
        guarded(who, "first RHS", [&] { return lerch_phi({e_i(-2.0 * kPi * a), s, 1.0 + x}); });
    EvalOutcome p3 =
        guarded(who, "second RHS", [&] { return lerch_phi({e_i(2.0 * kPi * a), s, -x}); });
    EvalOutcome g = guarded(who, "Gamma(s)", [&] { return gam::gamma(s); });
    CValue pref = -std::exp(-0.5 * I * kPi * (-2.0 + s + 4.0 * a * (1.0 + x)))
                  * cpow(2.0 * kPi, -s);
    EvalOutcome rhs = pref * (g * (e_i(kPi * s) * p2 + e_i(2.0 * kPi * a) * p3));
    return make_sides(lhs, rhs);
}

Sides jonquiere_sides(CValue k, CValue m)
{
    const char* who = "jonquiere_residual";
    if (m.imag() > 0.0)
        throw DomainError("jonquiere_residual: Im(m) > 0 puts exp(-2 i m pi) outside the unit disk");
    if (!(k.real() > 0.0))
        throw DomainError("jonquiere_residual: requires Re(k) > 0");
    CValue z = e_i(-2.0 * kPi * m);
    EvalOutcome lhs = guarded(who, "LHS", [&] { return polylog(-k, z); });
    EvalOutcome z1 = guarded(who, "zeta(1+k, 1-m)", [&] { return zeta::hurwitz_zeta(1.0 + k, 1.0 - m); });
    EvalOutcome z2 = guarded(who, "zeta(1+k, m)", [&] { return zeta::hurwitz_zeta(1.0 + k, m); });
    EvalOutcome g = guarded(who, "Gamma(1+k)", [&] { return gam::gamma(1.0 + k); });
    CValue mk = cpow(-1.0, k);
    CValue pref = I * mk * e_i(-1.5 * k * kPi) * cpow(2.0 * kPi, -1.0 - k);
    EvalOutcome rhs = pref * (g * (mk * z1 - z2));
    if (on_circle(z)) {
        lhs.flags |= DOMAIN_EDGE;
        rhs.flags |= DOMAIN_EDGE;
    }
    return make_sides(lhs, rhs);
}

EvalOutcome funeq_residual(CValue k, CValue t, CValue m)
{
    return difference(funeq_sides(k, t, m));
}

EvalOutcome funeq515_residual(CValue x, CValue s, CValue a)
{
    return difference(funeq515_sides(x, s, a));
}

EvalOutcome jonquiere_residual(CValue k, CValue m)
{
    return difference(jonquiere_sides(k, m));
}

}  // namespace phiver::lerch
