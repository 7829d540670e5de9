// displacement.hpp — Spin-conditioned drive strengths, displacements and
// accumulated phases of the displaced-oscillator solution. Everything the
// register dynamics needs is a function of lambda_n(z) = sum_i g_in s_i(z).

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>

#include "hotline/core/network.hpp"
#include "hotline/linalg.hpp"
#include "hotline/spin_basis.hpp"

namespace hotline::dyn {

struct DisplacementRecord {
    Eigen::MatrixXd lambda; // 2^N x n_modes, lambda_n(z)
    Eigen::VectorXd omega;  // mode frequencies (copied for evaluation)

    static DisplacementRecord build(const core::ModeSet& modes) {
        const int nq = static_cast<int>(modes.couplings.rows());
        const auto dim = static_cast<Eigen::Index>(register_dim(nq));
        DisplacementRecord rec;
        rec.omega = modes.omega;
        rec.lambda.resize(dim, modes.n_modes);
        for (Eigen::Index z = 0; z < dim; ++z)
            for (int n = 0; n < modes.n_modes; ++n) {
                double acc = 0.0;
                for (int i = 0; i < nq; ++i)
                    acc += modes.couplings(i, n) * spin_sign(static_cast<config_t>(z), i);
                rec.lambda(z, n) = acc;
            }
        return rec;
    }

    // alpha_n(z, t) = lambda_n(z) (1 - e^{-i omega_n t}) / omega_n; returns to
    // zero at every stroboscopic time of a linear spectrum.
    cplx alpha(config_t z, int mode, double t) const {
        const double w = omega(mode);
        return lambda(z, mode) * (1.0 - std::polar(1.0, -w * t)) / w;
    }

    // Accumulated phase Phi_z(t) = sum_n (lambda^2/omega^2)(omega t - sin omega t)
    double phase(config_t z, double t) const {
        double acc = 0.0;
        for (Eigen::Index n = 0; n < omega.size(); ++n) {
            const double w = omega(n);
            const double l = lambda(z, n);
            acc += (l * l) / (w * w) * (w * t - std::sin(w * t));
        }
        return acc;
    }
};

} // namespace hotline::dyn
