// ode.hpp — Adaptive Dormand–Prince 5(4) propagation on complex state vectors

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>

#include "hotline/errors.hpp"

namespace hotline {

struct OdeOptions {
    double rel_tol{1e-8};
    double abs_tol{1e-12};
    double initial_step{1e-2};
    double min_step{1e-14};
    std::size_t max_steps{50'000'000};
};

// Integrate dy/dt = rhs(y) over [0, t_end] in place. The RHS is autonomous
// (all hotline generators are time-independent within a cycle).
template <class Rhs>
void integrate_dp45(Rhs&& rhs, Eigen::VectorXcd& y, double t_end, const OdeOptions& opt = {}) {
    if (t_end <= 0.0) return;

    // Dormand–Prince coefficients
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    const Eigen::Index n = y.size();
    Eigen::VectorXcd k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);

    double t = 0.0;
    double h = std::min(opt.initial_step, t_end);
    rhs(y, k1);

    for (std::size_t step = 0; step < opt.max_steps; ++step) {
        if (t >= t_end) return;
        h = std::min(h, t_end - t);

        ytmp = y + h * (a21 * k1);
        rhs(ytmp, k2);
        ytmp = y + h * (a31 * k1 + a32 * k2);
        rhs(ytmp, k3);
        ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        rhs(ytmp, k4);
        ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        rhs(ytmp, k5);
        ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        rhs(ytmp, k6);
        ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        rhs(ynew, k7);

        // Embedded 4th-order error estimate, scaled mixed norm
        double err = 0.0;
        const double ynorm = std::max(y.cwiseAbs().maxCoeff(), ynew.cwiseAbs().maxCoeff());
        const double scale = opt.abs_tol + opt.rel_tol * ynorm;
        ytmp = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
        err = ytmp.cwiseAbs().maxCoeff() / scale;

        if (err <= 1.0) {
            t += h;
            y.swap(ynew);
            k1.swap(k7); // FSAL
        }
        const double factor = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
        if (h < opt.min_step)
            throw integrator_error("integrate_dp45: step size underflow at t = " + std::to_string(t));
    }
    throw integrator_error("integrate_dp45: max step count exceeded");
}

} // namespace hotline
