#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace phiver {

using CValue = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

enum Flag : std::uint8_t {
    CONVERGED    = 1u << 0,
    MAX_TERMS    = 1u << 1,
    DOMAIN_EDGE  = 1u << 2,
    CANCELLATION = 1u << 3,
};

struct EvalOutcome {
    CValue value{};
    double abs_err_est = 0.0;
    std::uint8_t flags = 0;

    bool converged() const { return (flags & CONVERGED) != 0; }
    bool has(Flag f) const { return (flags & f) != 0; }
};

// Renders the flag set as "CONVERGED|DOMAIN_EDGE" etc.
std::string flags_to_string(std::uint8_t flags);

// Combination helpers. Errors add; CONVERGED survives only if both operands had it.
EvalOutcome exact(CValue v);
EvalOutcome operator+(const EvalOutcome& a, const EvalOutcome& b);
EvalOutcome operator-(const EvalOutcome& a, const EvalOutcome& b);
EvalOutcome operator*(const EvalOutcome& a, const EvalOutcome& b);
EvalOutcome operator*(CValue c, const EvalOutcome& a);
EvalOutcome operator/(const EvalOutcome& a, const EvalOutcome& b);

namespace num {

CValue clog(CValue z);
CValue cpow(CValue z, CValue w);

class NeumaierSum {
public:
    void add(CValue x);
    CValue value() const { return sum_ + comp_; }

private:
    CValue sum_{};
    CValue comp_{};
};

enum class Accel { DIRECT, EULER_TRANSFORM, LEVIN_U };

struct SeriesSpec {
    std::function<CValue(std::size_t)> term_at;
    Accel accel = Accel::LEVIN_U;
    double tol = 1e-14;
    std::size_t max_terms = 100000;
    // LEVIN_U only: terms are grouped into blocks of this length before
    // acceleration. A block near pi/theta turns a slowly rotating series
    // sum e^{i n theta} f(n) into an alternating one.
    std::size_t block = 1;
};

EvalOutcome sum_series(const SeriesSpec& spec);

// Block length suited to a series whose n-th term carries the phase e^{i n theta}.
std::size_t block_for_phase(double theta);

using CFunc = std::function<CValue(CValue)>;
using COutcomeFunc = std::function<EvalOutcome(CValue)>;

// order-th derivative by the trapezoid rule on |z - z0| = radius with `nodes`
// and 2*nodes points. A DomainError thrown by f halves the radius.
EvalOutcome cauchy_deriv(const CFunc& f, CValue z0, int order, double radius = 0.25,
                         int nodes = 32, double tol = 1e-10);
EvalOutcome cauchy_deriv(const COutcomeFunc& f, CValue z0, int order, double radius = 0.25,
                         int nodes = 32, double tol = 1e-10);

bool is_finite(CValue z);
bool is_nonpositive_integer(CValue z, double eps = 0.0);

}  // namespace num
}  // namespace phiver
