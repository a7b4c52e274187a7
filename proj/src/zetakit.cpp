#include "phiver/zetakit.hpp"

#include <array>
#include <complex>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace phiver::zeta {

using num::clog;
using num::cpow;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

const std::vector<Rational>& bernoulli_table()
{
    static const std::vector<Rational> table = [] {
        std::vector<Rational> b(kMaxBernoulli + 1);
        b[0] = 1;
        for (int m = 1; m <= kMaxBernoulli; ++m) {
            Rational acc = 0;
            BigInt binom = 1;  // C(m+1, k)
            for (int k = 0; k < m; ++k) {
                acc += Rational(binom) * b[k];
                binom = binom * (m + 1 - k) / (k + 1);
            }
            b[m] = -acc / (m + 1);
        }
        return b;
    }();
    return table;
}

const std::vector<BigInt>& euler_table()
{
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> e(kMaxEuler + 1, 0);
        e[0] = 1;
        for (int n = 2; n <= kMaxEuler; n += 2) {
            BigInt acc = 0;
            BigInt binom = 1;  // C(n, k)
            for (int k = 0; k < n; ++k) {
                if (k % 2 == 0)
                    acc += binom * e[k];
                binom = binom * (n - k) / (k + 1);
            }
            e[n] = -acc;
        }
        return e;
    }();
    return table;
}

// B_2 .. B_26 as doubles for the Euler-Maclaurin tail.
const std::array<double, 14>& even_bernoulli()
{
    static const std::array<double, 14> t = [] {
        std::array<double, 14> out{};
        for (int j = 1; j <= 13; ++j)
            out[j] = static_cast<double>(bernoulli_table()[2 * j]);
        return out;
    }();
    return t;
}

void check_args(CValue s, CValue a, const char* who)
{
    if (s == CValue(1.0, 0.0))
        throw DomainError(std::string(who) + ": pole at s = 1");
    if (num::is_nonpositive_integer(a))
        throw DomainError(std::string(who) + ": a is a nonpositive integer");
}

using LComplex = std::complex<long double>;

LComplex lpow(LComplex z, LComplex w)
{
    if (z.imag() == 0.0L)
        z = LComplex(z.real(), 0.0L);
    return std::exp(w * std::log(z));
}

// Euler-Maclaurin in extended precision; the partial sums for Re(s) < 0 are far
// larger than the result.
struct EmResult {
    CValue value;
    double trunc;
    double roundoff;
};

EmResult em_zeta(CValue s_, CValue a_, int N)
{
    const LComplex s(s_.real(), s_.imag());
    const LComplex a(a_.real(), a_.imag());
    LComplex sum = 0.0L;
    long double abs_sum = 0.0L;
    for (int n = 0; n < N; ++n) {
        LComplex t = lpow(a + static_cast<long double>(n), -s);
        sum += t;
        abs_sum += std::abs(t);
    }
    LComplex w = a + static_cast<long double>(N);
    LComplex wms = lpow(w, -s);
    LComplex head = w * wms / (s - 1.0L);
    sum += head + 0.5L * wms;
    abs_sum += std::abs(head) + std::abs(wms);
    const auto& B = even_bernoulli();
    LComplex poch = s;       // (s)_{2j-1}
    LComplex wp = wms / w;   // w^{-s-2j+1}
    long double fact = 2.0L; // (2j)!
    LComplex last{};
    for (int j = 1; j <= 12; ++j) {
        LComplex t = static_cast<long double>(B[j]) / fact * poch * wp;
        sum += t;
        abs_sum += std::abs(t);
        poch *= (s + (2.0L * j - 1.0L)) * (s + 2.0L * j);
        wp /= w * w;
        fact *= (2.0L * j + 1.0L) * (2.0L * j + 2.0L);
        last = static_cast<long double>(B[j + 1]) / fact * poch * wp;
    }
    CValue v(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
    double round = static_cast<double>(8.0L * std::numeric_limits<long double>::epsilon() * abs_sum)
                   + kEps * std::abs(v);
    return {v, static_cast<double>(std::abs(last)), round};
}

}  // namespace

const ConstantsTable& constants()
{
    static constexpr ConstantsTable c{0.57721566490153286061, 0.91596559417721901505,
                                      1.28242712910062263688, kPi};
    return c;
}

Rational bernoulli_number(int n)
{
    if (n < 0 || n > kMaxBernoulli)
        throw std::out_of_range("bernoulli_number: supported range is 0.."
                                + std::to_string(kMaxBernoulli));
    return bernoulli_table()[n];
}

CValue bernoulli_poly(int n, CValue x)
{
    if (n < 0 || n > kMaxBernoulli)
        throw std::out_of_range("bernoulli_poly: supported range is 0.."
                                + std::to_string(kMaxBernoulli));
    // Horner in x over the coefficients C(n,k) B_{n-k}.
    const auto& B = bernoulli_table();
    CValue acc = 0.0;
    BigInt binom = 1;  // C(n, k)
    std::vector<double> coef(n + 1);
    for (int k = 0; k <= n; ++k) {
        coef[k] = static_cast<double>(Rational(binom) * B[n - k]);
        binom = binom * (n - k) / (k + 1);
    }
    for (int k = n; k >= 0; --k)
        acc = acc * x + coef[k];
    return acc;
}

BigInt euler_number(int n)
{
    if (n < 0 || n > kMaxEuler)
        throw std::out_of_range("euler_number: supported range is 0.."
                                + std::to_string(kMaxEuler));
    return euler_table()[n];
}

EvalOutcome hurwitz_zeta(CValue s, CValue a)
{
    check_args(s, a, "hurwitz_zeta");
    int N = std::max(15, static_cast<int>(std::ceil(std::abs(s))) + 10);
    if (a.real() < 0.0)
        N += static_cast<int>(std::ceil(-a.real()));
    EmResult r{};
    for (int attempt = 0; attempt < 6; ++attempt) {
        r = em_zeta(s, a, N);
        if (r.trunc <= 1e-17 * std::max(1.0, std::abs(r.value)))
            break;
        N *= 2;
    }
    EvalOutcome out{r.value, r.trunc + r.roundoff, 0};
    if (out.abs_err_est <= 1e-13 * std::max(1.0, std::abs(out.value)))
        out.flags |= CONVERGED;
    else
        out.flags |= MAX_TERMS;
    return out;
}

EvalOutcome hurwitz_zeta_sderiv(int j, CValue s, CValue a)
{
    if (j != 1 && j != 2)
        throw DomainError("hurwitz_zeta_sderiv: order must be 1 or 2");
    check_args(s, a, "hurwitz_zeta_sderiv");
    double r = std::min(0.25, 0.5 * std::abs(s - 1.0));
    auto f = [a](CValue ss) { return hurwitz_zeta(ss, a); };
    return num::cauchy_deriv(num::COutcomeFunc(f), s, j, r, 32, 1e-9);
}

EvalOutcome stieltjes(int n, CValue a)
{
    if (n < 0 || n > 2)
        throw DomainError("stieltjes: order must be 0, 1 or 2");
    if (a.real() <= 0.0)
        throw DomainError("stieltjes: Re(a) must be positive");
    constexpr double r = 0.5;
    constexpr int N = 64;
    std::vector<CValue> g(2 * N);
    double max_abs = 0.0, max_err = 0.0;
    bool conv = true;
    for (int k = 0; k < 2 * N; ++k) {
        CValue d = std::polar(r, 2.0 * kPi * k / (2 * N));
        EvalOutcome z = hurwitz_zeta(1.0 + d, a);
        g[k] = z.value - 1.0 / d;
        max_abs = std::max(max_abs, std::abs(g[k]));
        max_err = std::max(max_err, z.abs_err_est);
        conv = conv && z.converged();
    }
    auto coeff = [&](int stride) {
        int m = 2 * N / stride;
        num::NeumaierSum s;
        for (int k = 0; k < m; ++k)
            s.add(g[k * stride] * std::polar(1.0, -2.0 * kPi * n * k / m));
        return s.value() / (static_cast<double>(m) * std::pow(r, n));
    };
    CValue c1 = coeff(2), c2 = coeff(1);
    double fact = std::tgamma(n + 1.0);
    double sign = n % 2 == 0 ? 1.0 : -1.0;
    CValue v = sign * fact * c2;
    double err = fact * (std::abs(c2 - c1) + (max_err + 8.0 * kEps * max_abs) / std::pow(r, n));
    EvalOutcome out{v, err, 0};
    if (conv && err <= 1e-10 * std::max(1.0, std::abs(v)))
        out.flags |= CONVERGED;
    return out;
}

}  // namespace phiver::zeta
