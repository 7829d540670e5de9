// optimize.hpp — Derivative-free minimizers: Nelder–Mead simplex and
// golden-section line search.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

namespace hotline {

struct NelderMeadResult {
    Eigen::VectorXd x;
    double value{0.0};
    std::size_t evaluations{0};
};

struct NelderMeadOptions {
    std::size_t max_evaluations{4000};
    double simplex_tol{1e-10};  // spread of simplex values at convergence
    double initial_scale{0.3};  // edge length of the starting simplex
};

template <class F>
NelderMeadResult nelder_mead(F&& f, const Eigen::VectorXd& x0, const NelderMeadOptions& opt = {}) {
    const int n = static_cast<int>(x0.size());
    std::size_t evals = 0;
    auto eval = [&](const Eigen::VectorXd& x) {
        ++evals;
        return f(x);
    };

    std::vector<Eigen::VectorXd> pts(n + 1, x0);
    std::vector<double> vals(n + 1);
    for (int i = 0; i < n; ++i) pts[i + 1](i) += opt.initial_scale;
    for (int i = 0; i <= n; ++i) vals[i] = eval(pts[i]);

    auto order = [&]() {
        std::vector<int> idx(n + 1);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return vals[a] < vals[b]; });
        std::vector<Eigen::VectorXd> p2(n + 1);
        std::vector<double> v2(n + 1);
        for (int i = 0; i <= n; ++i) {
            p2[i] = pts[idx[i]];
            v2[i] = vals[idx[i]];
        }
        pts.swap(p2);
        vals.swap(v2);
    };

    order();
    while (evals < opt.max_evaluations && vals[n] - vals[0] > opt.simplex_tol) {
        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < n; ++i) centroid += pts[i];
        centroid /= n;

        const Eigen::VectorXd xr = centroid + (centroid - pts[n]);
        const double fr = eval(xr);
        if (fr < vals[0]) {
            const Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts[n]);
            const double fe = eval(xe);
            if (fe < fr) {
                pts[n] = xe;
                vals[n] = fe;
            } else {
                pts[n] = xr;
                vals[n] = fr;
            }
        } else if (fr < vals[n - 1]) {
            pts[n] = xr;
            vals[n] = fr;
        } else {
            const bool outside = fr < vals[n];
            const Eigen::VectorXd xc =
                centroid + 0.5 * ((outside ? xr : pts[n]) - centroid);
            const double fc = eval(xc);
            if (fc < std::min(fr, vals[n])) {
                pts[n] = xc;
                vals[n] = fc;
            } else {
                for (int i = 1; i <= n; ++i) {
                    pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
                    vals[i] = eval(pts[i]);
                }
            }
        }
        order();
    }
    return {pts[0], vals[0], evals};
}

// Golden-section minimum of a unimodal f on [lo, hi]
template <class F>
double golden_section_min(F&& f, double lo, double hi, double x_tol = 1e-12, int max_iter = 200) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < max_iter && (b - a) > x_tol * std::max(1.0, std::abs(a) + std::abs(b)); ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

} // namespace hotline
