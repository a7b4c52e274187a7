#pragma once

#include "phiver/numkernel.hpp"

#include <utility>

namespace phiver::lerch {

struct LerchPoint {
    CValue z;
    CValue s;
    CValue a;
};

// Throws DomainError when p lies outside the evaluable region.
void validate(const LerchPoint& p);

EvalOutcome lerch_phi(const LerchPoint& p);
EvalOutcome lerch_phi_sderiv(int j, const LerchPoint& p);
EvalOutcome lerch_phi_zderiv(int n, const LerchPoint& p);

EvalOutcome polylog(CValue s, CValue z);
EvalOutcome polylog_sderiv(CValue s, CValue z);
EvalOutcome legendre_chi(CValue s, CValue z);
EvalOutcome ti_inverse_tangent_integral(CValue s, CValue z);

// Left and right sides of the functional equations, and their differences.
using Sides = std::pair<EvalOutcome, EvalOutcome>;

Sides funeq_sides(CValue k, CValue t, CValue m);
Sides funeq515_sides(CValue x, CValue s, CValue a);
Sides jonquiere_sides(CValue k, CValue m);

EvalOutcome funeq_residual(CValue k, CValue t, CValue m);
EvalOutcome funeq515_residual(CValue x, CValue s, CValue a);
EvalOutcome jonquiere_residual(CValue k, CValue m);

}  // namespace phiver::lerch
