// rootfind.hpp — Bracketed scalar root finding (bisection with secant polish)

#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "hotline/errors.hpp"

namespace hotline {

// Root of f on [lo, hi]; requires a sign change. Bisection to near machine
// precision in the argument, so the caller controls accuracy via the bracket.
template <class F>
double bisect(F&& f, double lo, double hi, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw solver_error("bisect: no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "] (f: " + std::to_string(flo) + ", " +
                           std::to_string(fhi) + ")");
    for (int it = 0; it < max_iter; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace hotline
