// coupling.hpp — Effective photon-mediated spin-spin interaction J_ij, both
// by summation over the retained modes and in closed form.
//
// Conventions: the mode sum is J_ij = -2 sum_n g_in g_jn / omega_n; for box
// profiles and non-overlapping qubits it evaluates to the positive closed
// form g_i g_j / omega_1. Stroboscopic evolution applies phases
// exp(-i t sum_{i<j} J_ij s_i s_j); the two routes are locked together by the
// gate tests, not by convention alone.

#pragma once

#include <Eigen/Dense>

#include <cmath>

#include "hotline/core/network.hpp"
#include "hotline/errors.hpp"

namespace hotline::core {

struct CouplingMatrix {
    Eigen::MatrixXd J; // symmetric, zero diagonal

    int size() const { return static_cast<int>(J.rows()); }
};

inline CouplingMatrix coupling_matrix_modesum(const ModeSet& modes) {
    modes.validate();
    const int nq = static_cast<int>(modes.couplings.rows());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(nq, nq);
    for (int i = 0; i < nq; ++i)
        for (int j = i + 1; j < nq; ++j) {
            double s = 0.0;
            for (int n = 0; n < modes.n_modes; ++n)
                s += modes.couplings(i, n) * modes.couplings(j, n) / modes.omega(n);
            J(i, j) = -2.0 * s;
            J(j, i) = J(i, j);
        }
    return {std::move(J)};
}

// Closed form for the box profile: J_ij = (g_i g_j / omega_1) * (1 - L * I_ij)
// with I_ij the profile overlap integral; the overlap term vanishes for
// |x_i - x_j| > a, making J independent of a and of the positions.
template <class Profile = BoxProfile>
CouplingMatrix coupling_matrix_closed_form(const NetworkSpec& spec) {
    spec.validate();
    const int nq = spec.n_qubits();
    const double w1 = spec.omega1();
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(nq, nq);
    for (int i = 0; i < nq; ++i)
        for (int j = i + 1; j < nq; ++j) {
            const auto& qi = spec.qubits[i];
            const auto& qj = spec.qubits[j];
            const double ov = Profile::overlap(qi.position_x, qj.position_x, spec.cutoff_a);
            J(i, j) = (qi.base_coupling_g * qj.base_coupling_g / w1) *
                      (1.0 - spec.length_L * ov);
            J(j, i) = J(i, j);
        }
    return {std::move(J)};
}

} // namespace hotline::core
