#pragma once

#include "phiver/numkernel.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace phiver::zeta {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct ConstantsTable {
    double euler_gamma;
    double catalan;
    double glaisher;
    double pi;
};

const ConstantsTable& constants();

inline constexpr int kMaxBernoulli = 64;
inline constexpr int kMaxEuler = 32;

// B_1 = -1/2 convention.
Rational bernoulli_number(int n);
CValue bernoulli_poly(int n, CValue x);
// E_0 = 1, E_2 = -1, E_4 = 5, ...
BigInt euler_number(int n);

EvalOutcome hurwitz_zeta(CValue s, CValue a);
EvalOutcome hurwitz_zeta_sderiv(int j, CValue s, CValue a);
EvalOutcome stieltjes(int n, CValue a);

}  // namespace phiver::zeta
