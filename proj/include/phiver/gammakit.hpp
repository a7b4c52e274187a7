#pragma once

#include "phiver/numkernel.hpp"

namespace phiver::gam {

struct GammaBranchSpec {
    long winding = 0;
};

EvalOutcome gamma(CValue z);
EvalOutcome loggamma(CValue z);
EvalOutcome digamma(CValue z);
CValue pochhammer(CValue z, unsigned n);

EvalOutcome lower_gamma(CValue a, CValue z);
EvalOutcome upper_gamma(CValue a, CValue z);
// e^z * Gamma(a, z); finite where Gamma(a, z) itself under- or overflows.
EvalOutcome upper_gamma_scaled(CValue a, CValue z);
EvalOutcome upper_gamma_continued(CValue a, CValue z, GammaBranchSpec branch);
EvalOutcome upper_gamma_a_deriv(CValue a, CValue z);

EvalOutcome expint_en(int n, CValue z);

EvalOutcome inc_beta(CValue z, CValue a, CValue b);

}  // namespace phiver::gam
