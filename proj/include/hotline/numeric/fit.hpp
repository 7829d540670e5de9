// fit.hpp — Tiny least-squares fits used by the error scans

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hotline {

// Coefficient c of y = c * x^2 through the origin
inline double quadratic_coefficient(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("quadratic_coefficient: bad sample sizes");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double x2 = x[i] * x[i];
        num += y[i] * x2;
        den += x2 * x2;
    }
    if (den == 0.0) throw std::invalid_argument("quadratic_coefficient: degenerate abscissas");
    return num / den;
}

// Slope of log(y) vs log(x)
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("loglog_slope: need at least two samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0.0 || y[i] <= 0.0)
            throw std::invalid_argument("loglog_slope: nonpositive sample");
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) throw std::invalid_argument("loglog_slope: degenerate abscissas");
    return (n * sxy - sx * sy) / den;
}

} // namespace hotline
