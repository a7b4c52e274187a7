#pragma once

#include "phiver/numkernel.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>

namespace testutil {

inline double rel_err(phiver::CValue got, phiver::CValue want)
{
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace testutil

#define CHECK_CLOSE(got, want, tol)                              \
    do {                                                         \
        const phiver::CValue got_ = (got), want_ = (want);       \
        CAPTURE(got_);                                           \
        CAPTURE(want_);                                          \
        CHECK(testutil::rel_err(got_, want_) <= (tol));          \
    } while (0)
