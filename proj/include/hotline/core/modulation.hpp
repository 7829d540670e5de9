// modulation.hpp — Parametric drive of the qubit-line coupling. Off-resonant
// modulation at Omega_n maps the static model onto an effective one with
// mode frequencies Delta_n = omega_n - Omega_n and couplings A_{i,n}/2.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <string>
#include <vector>

#include "hotline/core/coupling.hpp"
#include "hotline/core/network.hpp"
#include "hotline/errors.hpp"

namespace hotline::core {

struct DriveFrame {
    Eigen::VectorXd drive_freqs; // Omega_n
    Eigen::MatrixXd amplitudes;  // A_{i,n}, N x n_modes
    Eigen::VectorXd detunings;   // Delta_n = omega_n - Omega_n

    // RWA validity check: drive amplitudes must stay well below Omega_n
    std::vector<std::string> warnings(double ratio = 0.1) const {
        std::vector<std::string> out;
        for (Eigen::Index n = 0; n < drive_freqs.size(); ++n)
            for (Eigen::Index i = 0; i < amplitudes.rows(); ++i)
                if (std::abs(amplitudes(i, n)) > ratio * std::abs(drive_freqs(n))) {
                    out.push_back("drive amplitude A_{" + std::to_string(i) + "," +
                                  std::to_string(n + 1) + "} exceeds " + std::to_string(ratio) +
                                  " * Omega_n (rotating-wave approximation at risk)");
                    return out;
                }
        return out;
    }
};

struct ModulatedModel {
    ModeSet effective; // omega -> Delta_n, couplings -> A_{i,n}/2; silent modes dropped
    std::vector<std::string> warnings;
};

inline ModulatedModel modulated_frame(const NetworkSpec& spec, const DriveFrame& frame) {
    spec.validate();
    const int nq = spec.n_qubits();
    const int n_in = static_cast<int>(frame.drive_freqs.size());
    if (frame.detunings.size() != n_in || frame.amplitudes.cols() != n_in ||
        frame.amplitudes.rows() != nq)
        throw configuration_error("modulated_frame: inconsistent frame dimensions");

    std::vector<int> kept;
    for (int n = 0; n < n_in; ++n) {
        const bool driven = frame.amplitudes.col(n).cwiseAbs().maxCoeff() > 0.0;
        if (!driven) continue;
        if (frame.detunings(n) == 0.0)
            throw singular_frame_error("modulated_frame: zero detuning on driven mode " +
                                       std::to_string(n + 1));
        kept.push_back(n);
    }

    ModulatedModel out;
    out.effective.n_modes = static_cast<int>(kept.size());
    out.effective.omega.resize(kept.size());
    out.effective.k.resize(kept.size());
    out.effective.thermal_occ.resize(kept.size());
    out.effective.couplings.resize(nq, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t m = 0; m < kept.size(); ++m) {
        const int n = kept[m];
        const double omega_lab = frame.drive_freqs(n) + frame.detunings(n);
        out.effective.omega(m) = frame.detunings(n);
        out.effective.k(m) = omega_lab / spec.speed_c;
        // occupation of the physical mode: the bath does not rotate with the frame
        out.effective.thermal_occ(m) = thermal_occupation(omega_lab, spec.temperature_T);
        out.effective.couplings.col(m) = 0.5 * frame.amplitudes.col(n);
    }
    out.warnings = frame.warnings();
    return out;
}

// Effective J_ij of the modulated frame, approximately -sum_n A_in A_jn / (2 Delta_n)
inline CouplingMatrix modulated_coupling_matrix(const NetworkSpec& spec, const DriveFrame& frame) {
    const auto model = modulated_frame(spec, frame);
    if (model.effective.n_modes == 0)
        return {Eigen::MatrixXd::Zero(spec.n_qubits(), spec.n_qubits())};
    return coupling_matrix_modesum(model.effective);
}

} // namespace hotline::core
